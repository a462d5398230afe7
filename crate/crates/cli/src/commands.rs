use conifold_core::exactnum::{GaussianRational, LaurentU, QPoly, Rational, RationalFunctionU};
use conifold_core::fock::{correlator_closed, correlator_reduce, EWord};
use conifold_core::ovinv::{disc_d_value, OvError};
use conifold_core::{
    closed_string_logz, disc_d, disc_d_framed, disc_e, framed_curve_check, framing_transform_check,
    genus0_onepoint, genus_expand, onepoint_closed, onepoint_oracle, onepoint_partition_sum, ov_n, seq_catalan,
    seq_dmm, zero_framing_curve_check, OnePointAmplitude,
};
use serde_json::{json, Value};

use crate::table::{Cell, Table};
use crate::{Command, Failure, Method, Sequence, Sign};

#[derive(Clone, Copy)]
pub struct Options {
    pub numeric: bool,
}

pub struct Output {
    pub table: Table,
    pub parameters: Value,
    pub failures: Vec<String>,
}

type Run = Result<Output, Failure>;

fn other(e: impl std::fmt::Display) -> Failure {
    Failure::Other(e.to_string())
}

fn check(failures: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        failures.push(what.into());
    }
}

fn rf(num: &[i64], den: &[i64]) -> RationalFunctionU {
    RationalFunctionU::bracket_ratio(num, den)
}

pub fn run(command: &Command, opts: Options) -> (&'static str, Run) {
    match *command {
        Command::Onepoint { framing, n_max, method, g_max } => {
            ("onepoint", onepoint(framing.framing, n_max, method, g_max, opts))
        }
        Command::Genus0 { framing, n_max } => ("genus0", genus0(framing.framing, n_max, opts)),
        Command::DiscD { framing, m_max, k_max, sign } => ("disc-d", disc_d_table(framing.framing, m_max, k_max, sign, opts)),
        Command::DiscE { framing, m_max, k_max } => ("disc-e", disc_e_table(framing.framing, m_max, k_max, opts)),
        Command::OvN { framing, m_max, printed_sign } => ("ov-n", ov_n_table(framing.framing, m_max, printed_sign)),
        Command::Sequences { which, count } => ("sequences", sequences(which, count)),
        Command::MirrorCheck { framing, order } => ("mirror-check", mirror_check(framing.framing, order)),
        Command::Correlator { n_max, c_max } => ("correlator", correlator(n_max, c_max)),
        Command::OracleCompare { framing, n_max } => ("oracle-compare", oracle_compare(framing.framing, n_max)),
        Command::ClosedString { q_degree } => ("closed-string", closed_string(q_degree)),
    }
}

fn amplitude(a: i64, n: u32, method: Method) -> OnePointAmplitude {
    match method {
        Method::Closed => onepoint_closed(a, n),
        Method::PartitionSum => onepoint_partition_sum(a, n),
        Method::Oracle => onepoint_oracle(a, n),
    }
}

/// `F̂_1 = (1 + Q) / [1]` at every framing.
fn check_winding_one(failures: &mut Vec<String>, a: i64) {
    let expected = QPoly::from_coeffs(vec![rf(&[], &[1]), rf(&[], &[1])]);
    check(failures, onepoint_closed(a, 1).value == expected, "F_1 differs from (1 + Q)/[1]");
}

fn onepoint(a: i64, n_max: u32, method: Method, g_max: Option<u32>, opts: Options) -> Run {
    let mut failures = Vec::new();
    check_winding_one(&mut failures, a);
    let parameters = json!({ "framing": a, "n_max": n_max, "method": format!("{method:?}").to_lowercase(), "g_max": g_max });
    let table = match g_max {
        None => {
            let mut t = Table::new(&["a", "n", "j", "value"]);
            for n in 1..=n_max {
                for (j, c) in amplitude(a, n, method).value.coeffs().iter().enumerate() {
                    t.push(vec![Cell::int(a), Cell::int(n), Cell::int(j as i64), Cell::ratfunc(c)]);
                }
            }
            t
        }
        Some(g_max) => {
            let mut t = Table::new(&["a", "n", "g", "j", "value"]);
            for n in 1..=n_max {
                let series = genus_expand(&amplitude(a, n, method), g_max).map_err(other)?;
                check(
                    &mut failures,
                    series.genus(0) == genus0_onepoint(a, n).map(|r| GaussianRational::real(r.clone())),
                    format!("genus-zero part of F_{n} differs from the genus-zero formula"),
                );
                for g in 0..=g_max {
                    for (j, c) in series.genus(g).coeffs().iter().enumerate() {
                        t.push(vec![
                            Cell::int(a),
                            Cell::int(n),
                            Cell::int(g),
                            Cell::int(j as i64),
                            Cell::gaussian(c, opts.numeric),
                        ]);
                    }
                }
            }
            t
        }
    };
    Ok(Output { table, parameters, failures })
}

fn genus0(a: i64, n_max: u32, opts: Options) -> Run {
    let mut failures = Vec::new();
    // printed: -((2a+1) + 4(a+1)Q + (2a+3)Q^2)/4 at n = 2
    let expected = QPoly::from_coeffs(vec![
        Rational::new(-(2 * a + 1), 4),
        Rational::from(-(a + 1)),
        Rational::new(-(2 * a + 3), 4),
    ]);
    check(&mut failures, genus0_onepoint(a, 2) == expected, "genus-zero x^2 coefficient differs from the printed one");
    let mut t = Table::new(&["a", "n", "j", "value"]);
    for n in 1..=n_max {
        for (j, c) in genus0_onepoint(a, n).coeffs().iter().enumerate() {
            t.push(vec![Cell::int(a), Cell::int(n), Cell::int(j as i64), Cell::rational(c, opts.numeric)]);
        }
    }
    Ok(Output { table: t, parameters: json!({ "framing": a, "n_max": n_max }), failures })
}

fn check_catalan(failures: &mut Vec<String>) {
    let printed = [1, 2, 5, 14, 42];
    for (k, c) in printed.iter().enumerate() {
        let ok = seq_catalan(k as u32 + 1).map(|v| v == (*c).into()).unwrap_or(false);
        check(failures, ok, format!("|d_{{{0},{1}}}| is not the Catalan number {c}", k + 1, k + 2));
    }
}

fn disc_d_table(a: i64, m_max: u32, k_max: u32, sign: Sign, opts: Options) -> Run {
    let mut failures = Vec::new();
    check_catalan(&mut failures);
    let mut t = Table::new(&["a", "k", "m", "value"]);
    for m in 1..=m_max {
        for k in 0..=k_max.min(m) {
            let result = match sign {
                Sign::Literal => disc_d(a, k, m),
                Sign::Framed => disc_d_framed(a, k, m),
            };
            let value = match result {
                Ok(d) => d.value,
                Err(e @ (OvError::NotIntegral { .. } | OvError::Recursion { .. })) => {
                    failures.push(e.to_string());
                    disc_d_value(a, k, m).map_err(other)?
                }
                Err(e) => return Err(other(e)),
            };
            t.push(vec![Cell::int(a), Cell::int(k), Cell::int(m), Cell::rational(&value, opts.numeric)]);
        }
    }
    let sign = format!("{sign:?}").to_lowercase();
    Ok(Output { table: t, parameters: json!({ "framing": a, "m_max": m_max, "k_max": k_max, "sign": sign }), failures })
}

fn disc_e_table(a: i64, m_max: u32, k_max: u32, opts: Options) -> Run {
    let mut failures = Vec::new();
    for (k, m, printed) in [(2, 6, Rational::new(17, 2)), (6, 16, Rational::new(3394839, 2)), (5, 11, Rational::from(11466))] {
        let ok = disc_e(0, k, m).map(|e| e.value == printed).unwrap_or(false);
        check(&mut failures, ok, format!("e_{{{k},{m}}} at framing 0 differs from {printed}"));
    }
    let mut t = Table::new(&["a", "k", "m", "value"]);
    for m in 1..=m_max {
        for k in 1..=k_max {
            let value = if k > m {
                Rational::zero()
            } else {
                match disc_e(a, k, m) {
                    Ok(e) => e.value,
                    Err(e @ (OvError::NotIntegral { .. } | OvError::Recursion { .. } | OvError::CoprimeMismatch { .. })) => {
                        failures.push(e.to_string());
                        continue;
                    }
                    Err(e) => return Err(other(e)),
                }
            };
            t.push(vec![Cell::int(a), Cell::int(k), Cell::int(m), Cell::rational(&value, opts.numeric)]);
        }
    }
    Ok(Output { table: t, parameters: json!({ "framing": a, "m_max": m_max, "k_max": k_max }), failures })
}

fn ov_n_table(a: i64, m_max: u32, printed_sign: bool) -> Run {
    let mut failures = Vec::new();
    let u = |terms: &[(i64, i64)]| LaurentU::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from(c))));
    let printed = [
        (2, 1, u(&[(1, -1), (-1, -1)])),
        (3, 2, u(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)])),
    ];
    for (m, k, p) in printed {
        let ok = ov_n(0, m, k).map(|n| n.value == p).unwrap_or(false);
        check(&mut failures, ok, format!("N^(0)_({m},{k}) differs from {p}"));
    }
    let mut t = Table::new(&["a", "m", "k", "value"]);
    for m in 1..=m_max {
        for k in 0..=m {
            let n = ov_n(a, m, k).map_err(other)?;
            check(
                &mut failures,
                n.value.has_integer_coeffs() && n.value.bar() == n.value,
                format!("N^({a})_({m},{k}) is not an integral bar-invariant polynomial"),
            );
            let value = if printed_sign { n.signed_by_framing() } else { n.value };
            t.push(vec![Cell::int(a), Cell::int(m), Cell::int(k), Cell::laurent(&value)]);
        }
    }
    Ok(Output { table: t, parameters: json!({ "framing": a, "m_max": m_max, "printed_sign": printed_sign }), failures })
}

fn sequences(which: Sequence, count: u32) -> Run {
    let mut failures = Vec::new();
    let mut t = Table::new(&["index", "value"]);
    match which {
        Sequence::Catalan => {
            check_catalan(&mut failures);
            for k in 0..count {
                let c = seq_catalan(k).map_err(other)?;
                t.push(vec![Cell::int(k), Cell::str(c.to_string())]);
            }
        }
        Sequence::Dmm => {
            let printed = [1, 1, 1, 2, 5, 13];
            for (i, p) in printed.iter().enumerate() {
                let ok = seq_dmm(i as u32 + 1).map(|v| v.abs() == Rational::from(*p)).unwrap_or(false);
                check(&mut failures, ok, format!("|d_({0},{0})| differs from {p}", i + 1));
            }
            for m in 1..=count {
                let v = seq_dmm(m).map_err(other)?;
                t.push(vec![Cell::int(m), Cell::str(v.abs().to_string())]);
            }
        }
    }
    let which = format!("{which:?}").to_lowercase();
    Ok(Output { table: t, parameters: json!({ "which": which, "count": count }), failures })
}

fn mirror_check(a: i64, order: u32) -> Run {
    if a == -1 {
        return Err(Failure::Usage(
            "framing -1 has no mirror curve of this form: x = z((1 + Ez)/(1 + z))^(a+1) is not invertible at a + 1 = 0"
                .into(),
        ));
    }
    let mut failures = Vec::new();
    let mut t = Table::new(&["a", "order", "check", "passed"]);
    let mut row = |name: &str, ok: bool, failures: &mut Vec<String>| {
        check(failures, ok, format!("{name} fails at framing {a} through x^{order}"));
        t.push(vec![Cell::int(a), Cell::int(order), Cell::str(name), Cell::bool(ok)]);
    };
    if a == 0 {
        let c = zero_framing_curve_check(order).map_err(other)?;
        row("residual", c.residual.is_zero(), &mut failures);
        for (name, ok) in &c.identities {
            row(name, *ok, &mut failures);
        }
    }
    let c = framed_curve_check(a, order).map_err(other)?;
    row("framed_residual", c.residual.is_zero(), &mut failures);
    for (name, ok) in &c.identities {
        row(name, *ok, &mut failures);
    }
    row("framing_transform", framing_transform_check(a, order).map_err(other)?, &mut failures);
    Ok(Output { table: t, parameters: json!({ "framing": a, "order": order }), failures })
}

fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn correlator(n_max: u32, c_max: u32) -> Run {
    let mut failures = Vec::new();
    let mut t = Table::new(&["n", "words", "lemma_agrees", "corollary_agrees"]);
    let c_max = c_max as i64;
    for n in 1..=n_max {
        let mut words = 0i64;
        let mut lemma = true;
        for m in compositions(n) {
            let len = m.len() as u32;
            for code in 0..(c_max as u64).pow(len) {
                let mut code = code;
                let args: Vec<i64> = (0..len)
                    .map(|_| {
                        let c = (code % c_max as u64) as i64 + 1;
                        code /= c_max as u64;
                        c
                    })
                    .collect();
                let factors: Vec<(i64, i64)> = m.iter().zip(&args).map(|(&mj, &c)| (-(mj as i64), c)).collect();
                let reduced = correlator_reduce(&EWord::beta_prefixed(n as i64, &factors)).map_err(other)?;
                lemma &= reduced == correlator_closed(n, &m, &args).map_err(other)?;
                words += 1;
            }
        }
        // args (a+1) m_j give prod [(a+1) n m_j] / [(a+1) n]
        let mut corollary = true;
        for a in 0..=2i64 {
            for m in compositions(n) {
                let factors: Vec<(i64, i64)> = m.iter().map(|&mj| (-(mj as i64), (a + 1) * mj as i64)).collect();
                let reduced = correlator_reduce(&EWord::beta_prefixed(n as i64, &factors)).map_err(other)?;
                let num: Vec<i64> = m.iter().map(|&mj| (a + 1) * (n * mj) as i64).collect();
                corollary &= reduced == rf(&num, &[(a + 1) * n as i64]);
            }
        }
        check(&mut failures, lemma, format!("correlator lemma fails at n = {n}"));
        check(&mut failures, corollary, format!("correlator corollary fails at n = {n}"));
        t.push(vec![Cell::int(n), Cell::int(words), Cell::bool(lemma), Cell::bool(corollary)]);
    }
    Ok(Output { table: t, parameters: json!({ "n_max": n_max, "c_max": c_max }), failures })
}

fn oracle_compare(a: i64, n_max: u32) -> Run {
    let mut failures = Vec::new();
    check_winding_one(&mut failures, a);
    let mut t = Table::new(&["a", "n", "partition_sum_agrees", "oracle_agrees"]);
    for n in 1..=n_max {
        let closed = onepoint_closed(a, n);
        let sum = onepoint_partition_sum(a, n).same_value(&closed);
        let oracle = onepoint_oracle(a, n).same_value(&closed);
        check(&mut failures, sum && oracle, format!("one-point values disagree at a = {a}, n = {n}"));
        t.push(vec![Cell::int(a), Cell::int(n), Cell::bool(sum), Cell::bool(oracle)]);
    }
    Ok(Output { table: t, parameters: json!({ "framing": a, "n_max": n_max }), failures })
}

fn closed_string(q_degree: u32) -> Run {
    let mut failures = Vec::new();
    let z = closed_string_logz(q_degree as i32);
    check(&mut failures, z.coeff(&[1]) == rf(&[], &[1, 1]), "Q coefficient of log Z differs from 1/[1]^2");
    let mut t = Table::new(&["d", "value"]);
    for d in 1..=q_degree as i32 {
        t.push(vec![Cell::int(d), Cell::ratfunc(&z.coeff(&[d]))]);
    }
    Ok(Output { table: t, parameters: json!({ "q_degree": q_degree }), failures })
}
