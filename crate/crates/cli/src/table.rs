use std::fmt::Write as _;

use clap::ValueEnum;
use conifold_core::{GaussianRational, LaurentU, Rational, RationalFunctionU};
use serde_json::{json, Map, Value};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One table cell: its JSON form and its CSV/text form.
#[derive(Clone, Debug)]
pub struct Cell {
    json: Value,
    text: String,
}

impl Cell {
    pub fn int(v: impl Into<i64>) -> Self {
        let v = v.into();
        Cell { json: json!(v), text: v.to_string() }
    }

    pub fn str(s: impl Into<String>) -> Self {
        let s = s.into();
        Cell { json: json!(s), text: s }
    }

    pub fn bool(b: bool) -> Self {
        Cell { json: json!(b), text: b.to_string() }
    }

    /// Exact `"p/q"`, or a decimal prefixed with `~` when `numeric`.
    pub fn rational(r: &Rational, numeric: bool) -> Self {
        if numeric {
            Cell::str(format!("~{}", r.to_f64()))
        } else {
            Cell::str(r.to_string())
        }
    }

    pub fn gaussian(z: &GaussianRational, numeric: bool) -> Self {
        if numeric {
            return Cell::str(format!("~{}{:+}i", z.re.to_f64(), z.im.to_f64()));
        }
        let text = match (z.re.is_zero(), z.im.is_zero()) {
            (_, true) => z.re.to_string(),
            (true, false) => format!("{}i", z.im),
            (false, false) if z.im.is_negative() => format!("{}-{}i", z.re, z.im.abs()),
            (false, false) => format!("{}+{}i", z.re, z.im),
        };
        Cell::str(text)
    }

    /// `[[exponent, "p/q"], ...]` in JSON.
    pub fn laurent(p: &LaurentU) -> Self {
        Cell { json: serde_json::to_value(p).expect("serializable"), text: p.to_string() }
    }

    pub fn ratfunc(r: &RationalFunctionU) -> Self {
        Cell { json: serde_json::to_value(r).expect("serializable"), text: r.to_string() }
    }
}

pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format, command: &str, parameters: Value) -> String {
        match format {
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| {
                        let obj: Map<String, Value> =
                            self.columns.iter().zip(r).map(|(c, v)| (c.to_string(), v.json.clone())).collect();
                        Value::Object(obj)
                    })
                    .collect();
                let doc = json!({
                    "meta": { "command": command, "parameters": parameters, "format_version": FORMAT_VERSION },
                    "rows": rows,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = self.columns.join(",");
                s.push('\n');
                for r in &self.rows {
                    let line: Vec<&str> = r.iter().map(|c| c.text.as_str()).collect();
                    s.push_str(&line.join(","));
                    s.push('\n');
                }
                s
            }
            Format::Text => {
                let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
                for r in &self.rows {
                    for (w, c) in widths.iter_mut().zip(r) {
                        *w = (*w).max(c.text.len());
                    }
                }
                let mut s = String::new();
                let header: Vec<String> =
                    self.columns.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                let _ = writeln!(s, "{}", header.join("  ").trim_end());
                for r in &self.rows {
                    let line: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{:<w$}", c.text)).collect();
                    let _ = writeln!(s, "{}", line.join("  ").trim_end());
                }
                s
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_csv_is_header_only() {
        let t = Table::new(&["a", "k", "m", "value"]);
        assert_eq!(t.render(Format::Csv, "disc-d", json!({})), "a,k,m,value\n");
    }

    #[test]
    fn json_row_shape() {
        let mut t = Table::new(&["a", "k", "m", "value"]);
        t.push(vec![Cell::int(0), Cell::int(2), Cell::int(2), Cell::rational(&Rational::new(1, 2), false)]);
        let doc: Value = serde_json::from_str(&t.render(Format::Json, "disc-e", json!({"framing": 0}))).unwrap();
        assert_eq!(doc["rows"][0], json!({"a": 0, "k": 2, "m": 2, "value": "1/2"}));
        assert_eq!(doc["meta"]["format_version"], json!(FORMAT_VERSION));
    }

    #[test]
    fn laurent_cells_are_exponent_pairs() {
        let p = LaurentU::from_terms([(-1, Rational::from(1)), (1, Rational::from(1))]);
        assert_eq!(Cell::laurent(&p).json, json!([[-1, "1"], [1, "1"]]));
    }
}
