use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Rational, Ring};

/// Formal variables a series may carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    X,
    Q,
    E,
    Lambda,
    /// `lambda / i`, used where the coefficient ring has no `i`.
    Hbar,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::X => "x",
            Var::Q => "Q",
            Var::E => "E",
            Var::Lambda => "lambda",
            Var::Hbar => "hbar",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("{op} requires constant term {expected}")]
    ConstantTerm { op: &'static str, expected: &'static str },
    #[error("series is not a unit: constant term is not invertible")]
    NotInvertible,
    #[error("series has negative exponents, so powers do not terminate")]
    NotNilpotent,
    #[error("variable {0} is not part of this series")]
    UnknownVariable(Var),
    #[error("substituted series must have positive valuation in {0}")]
    BadSubstitution(Var),
    #[error("reversion needs zero constant term and invertible linear term in {0}")]
    NotReversible(Var),
}

/// Multivariate power series truncated at a per-variable maximum exponent.
///
/// `orders[i]` is the largest exponent of `vars[i]` that is kept. Negative
/// exponents are allowed so that Laurent tails in `lambda` fit the same type.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<R> {
    vars: Vec<Var>,
    orders: Vec<i32>,
    terms: BTreeMap<Vec<i32>, R>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn zero(vars: &[Var], orders: &[i32]) -> Self {
        assert_eq!(vars.len(), orders.len(), "one order per variable");
        TruncatedSeries { vars: vars.to_vec(), orders: orders.to_vec(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &[Var], orders: &[i32]) -> Self {
        Self::constant(vars, orders, R::one())
    }

    pub fn constant(vars: &[Var], orders: &[i32], c: R) -> Self {
        let mut s = Self::zero(vars, orders);
        s.add_term(vec![0; vars.len()], c);
        s
    }

    /// The single-variable series `v`.
    pub fn var(vars: &[Var], orders: &[i32], v: Var) -> Self {
        let mut s = Self::zero(vars, orders);
        let mut e = vec![0; vars.len()];
        e[s.index_of(v).expect("variable present")] = 1;
        s.add_term(e, R::one());
        s
    }

    pub fn from_terms<I>(vars: &[Var], orders: &[i32], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, R)>,
    {
        let mut s = Self::zero(vars, orders);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    /// Same variables and orders, no terms.
    pub fn zero_like(&self) -> Self {
        Self::zero(&self.vars, &self.orders)
    }

    pub fn one_like(&self) -> Self {
        Self::one(&self.vars, &self.orders)
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn orders(&self) -> &[i32] {
        &self.orders
    }

    pub fn order_of(&self, v: Var) -> Option<i32> {
        self.index_of(v).map(|i| self.orders[i])
    }

    pub fn index_of(&self, v: Var) -> Option<usize> {
        self.vars.iter().position(|&w| w == v)
    }

    fn idx(&self, v: Var) -> Result<usize, SeriesError> {
        self.index_of(v).ok_or(SeriesError::UnknownVariable(v))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[i32]) -> R {
        self.terms.get(exps).cloned().unwrap_or_else(R::zero)
    }

    pub fn constant_term(&self) -> R {
        self.coeff(&vec![0; self.vars.len()])
    }

    fn in_range(&self, e: &[i32]) -> bool {
        e.iter().zip(&self.orders).all(|(x, o)| x <= o)
    }

    /// Adds `c * monomial(exps)`, silently dropping terms beyond the orders.
    pub fn add_term(&mut self, exps: Vec<i32>, c: R) {
        assert_eq!(exps.len(), self.vars.len());
        if c.is_zero() || !self.in_range(&exps) {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_shape(&self, rhs: &Self) {
        assert!(
            self.vars == rhs.vars && self.orders == rhs.orders,
            "series shapes differ: {:?}{:?} vs {:?}{:?}",
            self.vars,
            self.orders,
            rhs.vars,
            rhs.orders
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_shape(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_terms(|c| c.neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        self.map_terms(|x| x.mul(c))
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        self.map_terms(|x| x.scale(c))
    }

    fn map_terms(&self, f: impl Fn(&R) -> R) -> Self {
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Converts coefficients into another ring.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        let mut out = TruncatedSeries::zero(&self.vars, &self.orders);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_shape(rhs);
        let mut out = self.zero_like();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if out.in_range(&e) {
                    out.add_term(e, c1.mul(c2));
                }
            }
        }
        out
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, v: Var, k: i32) -> Result<Self, SeriesError> {
        let i = self.idx(v)?;
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[i] += k;
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// Lowers the kept order of `v` to `order`.
    pub fn truncate(&self, v: Var, order: i32) -> Result<Self, SeriesError> {
        let i = self.idx(v)?;
        let mut out = self.clone();
        out.orders[i] = out.orders[i].min(order);
        out.terms.retain(|e, _| e[i] <= order);
        Ok(out)
    }

    /// Coefficient of `v^k`, as a series in the same variables with `v`
    /// exponent zero.
    pub fn slice(&self, v: Var, k: i32) -> Result<Self, SeriesError> {
        let i = self.idx(v)?;
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            if e[i] == k {
                let mut e = e.clone();
                e[i] = 0;
                out.add_term(e, c.clone());
            }
        }
        Ok(out)
    }

    /// Smallest exponent of `v` among the terms.
    pub fn valuation(&self, v: Var) -> Result<Option<i32>, SeriesError> {
        let i = self.idx(v)?;
        Ok(self.terms.keys().map(|e| e[i]).min())
    }

    /// Partial derivative in `v`.
    pub fn derivative(&self, v: Var) -> Result<Self, SeriesError> {
        let i = self.idx(v)?;
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            if e[i] != 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c.scale(&Rational::from(e[i] as i64)));
            }
        }
        Ok(out)
    }

    /// `v d/dv`.
    pub fn euler(&self, v: Var) -> Result<Self, SeriesError> {
        let i = self.idx(v)?;
        let mut out = self.zero_like();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.scale(&Rational::from(e[i] as i64)));
        }
        Ok(out)
    }

    /// Substitutes `v -> c v` for a rational `c`.
    pub fn rescale_var(&self, v: Var, c: &Rational) -> Result<Self, SeriesError> {
        let i = self.idx(v)?;
        let mut out = self.zero_like();
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x.scale(&c.pow(e[i])));
        }
        Ok(out)
    }

    /// Renames variable `from` to `to`.
    pub fn rename(&self, from: Var, to: Var) -> Result<Self, SeriesError> {
        let i = self.idx(from)?;
        let mut out = self.clone();
        out.vars[i] = to;
        Ok(out)
    }

    /// Splits off the constant term, checking that the rest is nilpotent
    /// under truncation.
    fn split_constant(&self) -> Result<(R, Self), SeriesError> {
        let zero = vec![0; self.vars.len()];
        let mut rest = self.clone();
        let c = rest.terms.remove(&zero).unwrap_or_else(R::zero);
        if rest.terms.keys().any(|e| e.iter().any(|&x| x < 0)) {
            return Err(SeriesError::NotNilpotent);
        }
        Ok((c, rest))
    }

    /// `sum_k coeffs(k) r^k`, stopping once `r^k` truncates to zero.
    fn power_sum(r: &Self, mut coeff: impl FnMut(u32) -> R) -> Self {
        let mut acc = r.zero_like();
        acc.add_term(vec![0; r.vars.len()], coeff(0));
        let mut pow = r.clone();
        let mut k = 1;
        while !pow.is_zero() {
            acc = acc.add(&pow.scale(&coeff(k)));
            pow = pow.mul(r);
            k += 1;
        }
        acc
    }

    /// Multiplicative inverse of a series with invertible constant term.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let (c, rest) = self.split_constant()?;
        let ci = c.inverse().ok_or(SeriesError::NotInvertible)?;
        let r = rest.scale(&ci);
        let sign = |k: u32| if k % 2 == 0 { R::one() } else { R::one().neg() };
        Ok(Self::power_sum(&r, sign).scale(&ci))
    }

    pub fn log(&self) -> Result<Self, SeriesError> {
        let (c, rest) = self.split_constant()?;
        if !c.is_one() {
            return Err(SeriesError::ConstantTerm { op: "log", expected: "1" });
        }
        Ok(Self::power_sum(&rest, |k| match k {
            0 => R::zero(),
            _ => {
                let s = if k % 2 == 1 { 1 } else { -1 };
                R::from_rational(&Rational::new(s, k as i64))
            }
        }))
    }

    pub fn exp(&self) -> Result<Self, SeriesError> {
        let (c, rest) = self.split_constant()?;
        if !c.is_zero() {
            return Err(SeriesError::ConstantTerm { op: "exp", expected: "0" });
        }
        let mut fact = Rational::one();
        let mut coeffs = vec![Rational::one()];
        Ok(Self::power_sum(&rest, |k| {
            while coeffs.len() <= k as usize {
                fact = &fact * &Rational::from(coeffs.len() as i64);
                coeffs.push(fact.recip());
            }
            R::from_rational(&coeffs[k as usize])
        }))
    }

    /// Principal square root of a series with constant term 1.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let (c, rest) = self.split_constant()?;
        if !c.is_one() {
            return Err(SeriesError::ConstantTerm { op: "sqrt", expected: "1" });
        }
        // binom(1/2, k)
        Ok(Self::power_sum(&rest, |k| {
            let mut b = Rational::one();
            for i in 0..k as i64 {
                b = &b * &Rational::new(1 - 2 * i, 2 * (i + 1));
            }
            R::from_rational(&b)
        }))
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, k: i64) -> Result<Self, SeriesError> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = self.one_like();
        let mut b = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    /// Substitutes `v -> s`, where `s` has the same shape and positive
    /// valuation in `v`.
    pub fn compose(&self, v: Var, s: &Self) -> Result<Self, SeriesError> {
        self.check_shape(s);
        let i = self.idx(v)?;
        if s.terms.keys().any(|e| e[i] <= 0) {
            return Err(SeriesError::BadSubstitution(v));
        }
        let mut by_power: BTreeMap<i32, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] < 0 {
                return Err(SeriesError::BadSubstitution(v));
            }
            let mut e0 = e.clone();
            e0[i] = 0;
            by_power.entry(e[i]).or_insert_with(|| self.zero_like()).add_term(e0, c.clone());
        }
        let mut out = self.zero_like();
        let mut pow = self.one_like();
        let mut k = 0;
        for (p, c) in by_power {
            while k < p {
                pow = pow.mul(s);
                k += 1;
            }
            if pow.is_zero() {
                break;
            }
            out = out.add(&c.mul(&pow));
        }
        Ok(out)
    }

    /// Compositional inverse in `v`, other variables acting as parameters:
    /// returns `t` with `self(t) = v`. Uses `[v^n] t = (1/n) [z^{n-1}] (z/s)^n`.
    pub fn reversion(&self, v: Var) -> Result<Self, SeriesError> {
        let i = self.idx(v)?;
        if self.terms.keys().any(|e| e[i] <= 0 || e.iter().any(|&x| x < 0)) {
            return Err(SeriesError::NotReversible(v));
        }
        let h = self.shift(v, -1)?;
        let inv = h.inverse().map_err(|_| SeriesError::NotReversible(v))?;
        let n_max = self.orders[i];
        let mut out = self.zero_like();
        let mut pow = self.one_like();
        for n in 1..=n_max {
            pow = pow.mul(&inv);
            let c = pow.slice(v, n - 1)?.scale_rational(&Rational::new(1, n as i64));
            out = out.add(&c.shift(v, n)?);
        }
        Ok(out)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl<R: fmt::Debug> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedSeries")
            .field("vars", &self.vars)
            .field("orders", &self.orders)
            .field("terms", &self.terms)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr<R> {
    variables: Vec<Var>,
    orders: Vec<i32>,
    terms: Vec<(Vec<i32>, R)>,
}

impl<R: Ring + Serialize> Serialize for TruncatedSeries<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            variables: self.vars.clone(),
            orders: self.orders.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, R: Ring + Deserialize<'de>> Deserialize<'de> for TruncatedSeries<R> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::<R>::deserialize(deserializer)?;
        if repr.variables.len() != repr.orders.len()
            || repr.terms.iter().any(|(e, _)| e.len() != repr.variables.len())
        {
            return Err(serde::de::Error::custom("exponent tuples do not match variable list"));
        }
        Ok(TruncatedSeries::from_terms(&repr.variables, &repr.orders, repr.terms))
    }
}
