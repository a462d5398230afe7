use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Rational, Ring};

/// Laurent polynomial in `u = q^{1/2}` with rational coefficients.
///
/// Stored densely from the lowest exponent upward; both ends are trimmed
/// so the representation is canonical and zero has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentU {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentU {
    pub fn zero() -> Self {
        LaurentU::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    /// `c * u^exp`.
    pub fn monomial(exp: i64, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentU { low: exp, coeffs: vec![c] }
    }

    pub fn u_pow(exp: i64) -> Self {
        Self::monomial(exp, Rational::one())
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let terms: Vec<(i64, Rational)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    /// Builds from a dense coefficient vector starting at `low`, trimming zeros.
    pub fn from_dense(low: i64, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentU { low: low + lead as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent present, or `None` for zero.
    pub fn low_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn high_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Number of exponent slots between lowest and highest, inclusive.
    pub fn span(&self) -> usize {
        self.coeffs.len()
    }

    pub(crate) fn dense(&self) -> (i64, &[Rational]) {
        (self.low, &self.coeffs)
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let idx = exp - self.low;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            return Rational::zero();
        }
        self.coeffs[idx as usize].clone()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    /// Multiplies by `u^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentU { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentU { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// The bar involution `u -> u^{-1}`.
    pub fn bar(&self) -> Self {
        match self.high_exp() {
            None => Self::zero(),
            Some(high) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentU { low: -high, coeffs }
            }
        }
    }

    /// Substitutes `u -> u^j` for a nonzero integer `j`.
    pub fn subs_pow(&self, j: i64) -> Self {
        assert!(j != 0, "substitution u -> u^0 is not an automorphism");
        Self::from_terms(self.terms().map(|(e, c)| (e * j, c.clone())))
    }

    /// Multiplies by the quantum bracket `[k] = u^k - u^{-k}`.
    pub fn mul_bracket(&self, k: i64) -> Self {
        if k == 0 || self.is_zero() {
            return Self::zero();
        }
        let k_abs = k.abs();
        let n = self.coeffs.len();
        let width = n + 2 * k_abs as usize;
        let mut out = vec![Rational::zero(); width];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out[i + 2 * k_abs as usize] += c;
            out[i] -= c;
        }
        let res = Self::from_dense(self.low - k_abs, out);
        if k < 0 {
            -res
        } else {
            res
        }
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &LaurentU) -> Option<LaurentU> {
        assert!(!divisor.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dn = divisor.coeffs.len();
        let mut rem: Vec<Rational> = self.coeffs.clone();
        if rem.len() < dn {
            return None;
        }
        let qlen = rem.len() - dn + 1;
        let lead_inv = divisor.coeffs[dn - 1].recip();
        let mut quot = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dn - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &(&c * d);
                }
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(self.low - divisor.low, quot))
    }

    fn add_impl(&self, rhs: &LaurentU, negate_rhs: bool) -> LaurentU {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate_rhs { -rhs } else { rhs.clone() };
        }
        let low = self.low.min(rhs.low);
        let high = self.high_exp().unwrap().max(rhs.high_exp().unwrap());
        let mut out = vec![Rational::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            let slot = &mut out[(rhs.low - low) as usize + i];
            if negate_rhs {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::from_dense(low, out)
    }

    fn mul_impl(&self, rhs: &LaurentU) -> LaurentU {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Self::from_dense(self.low + rhs.low, out)
    }
}

impl Add<&LaurentU> for &LaurentU {
    type Output = LaurentU;
    fn add(self, rhs: &LaurentU) -> LaurentU {
        self.add_impl(rhs, false)
    }
}

impl Add for LaurentU {
    type Output = LaurentU;
    fn add(self, rhs: LaurentU) -> LaurentU {
        self.add_impl(&rhs, false)
    }
}

impl Sub<&LaurentU> for &LaurentU {
    type Output = LaurentU;
    fn sub(self, rhs: &LaurentU) -> LaurentU {
        self.add_impl(rhs, true)
    }
}

impl Sub for LaurentU {
    type Output = LaurentU;
    fn sub(self, rhs: LaurentU) -> LaurentU {
        self.add_impl(&rhs, true)
    }
}

impl Mul<&LaurentU> for &LaurentU {
    type Output = LaurentU;
    fn mul(self, rhs: &LaurentU) -> LaurentU {
        self.mul_impl(rhs)
    }
}

impl Mul for LaurentU {
    type Output = LaurentU;
    fn mul(self, rhs: LaurentU) -> LaurentU {
        self.mul_impl(&rhs)
    }
}

impl Neg for LaurentU {
    type Output = LaurentU;
    fn neg(self) -> LaurentU {
        LaurentU { low: self.low, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &LaurentU {
    type Output = LaurentU;
    fn neg(self) -> LaurentU {
        LaurentU { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Ring for LaurentU {
    fn zero() -> Self {
        LaurentU::zero()
    }
    fn one() -> Self {
        LaurentU::one()
    }
    fn is_zero(&self) -> bool {
        LaurentU::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        LaurentU::constant(r.clone())
    }
    /// Only monomials are units.
    fn inverse(&self) -> Option<Self> {
        self.is_monomial().then(|| LaurentU::monomial(-self.low, self.coeffs[0].recip()))
    }
    fn scale(&self, r: &Rational) -> Self {
        LaurentU::scale(self, r)
    }
}

impl fmt::Display for LaurentU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<(i64, &Rational)> = self.terms().collect();
        for (idx, (e, c)) in terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "u")?,
                (1, false) => write!(f, "{mag}*u")?,
                (_, true) => write!(f, "u^{e}")?,
                (_, false) => write!(f, "{mag}*u^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as `[[exponent, "p/q"], ...]`, sorted by exponent.
impl Serialize for LaurentU {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms())
    }
}

impl<'de> Deserialize<'de> for LaurentU {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i64, Rational)> = Vec::deserialize(deserializer)?;
        if pairs.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(D::Error::custom("Laurent terms must be strictly increasing in exponent"));
        }
        Ok(LaurentU::from_terms(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentU {
        LaurentU::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from(c))))
    }

    #[test]
    fn trimming_keeps_canonical_zero() {
        let a = lp(&[(2, 1), (-1, 3)]);
        assert_eq!(&a - &a, LaurentU::zero());
        assert_eq!((&a - &a).low_exp(), None);
    }

    #[test]
    fn bracket_multiplication_matches_generic_product() {
        let a = lp(&[(3, 2), (0, -1), (-2, 5)]);
        for k in [-3, 1, 2, 5] {
            let br = lp(&[(k, 1), (-k, -1)]);
            assert_eq!(a.mul_bracket(k), &a * &br);
        }
    }

    #[test]
    fn exact_division() {
        let a = lp(&[(4, 1), (-4, -1)]);
        let b = lp(&[(2, 1), (-2, -1)]);
        assert_eq!(a.div_exact(&b), Some(lp(&[(2, 1), (-2, 1)])));
        assert_eq!(b.div_exact(&a), None);
        assert_eq!(lp(&[(3, 1)]).div_exact(&lp(&[(1, 2)])), Some(LaurentU::monomial(2, Rational::new(1, 2))));
    }

    #[test]
    fn display_and_json() {
        let a = lp(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]);
        assert_eq!(a.to_string(), "u^4 + u^2 + 2 + u^-2 + u^-4");
        let json = serde_json::to_string(&lp(&[(1, 1), (-1, -1)])).unwrap();
        assert_eq!(json, r#"[[-1,"-1"],[1,"1"]]"#);
        let back: LaurentU = serde_json::from_str(&json).unwrap();
        assert_eq!(back, lp(&[(1, 1), (-1, -1)]));
    }

    #[test]
    fn bar_and_substitution() {
        let a = lp(&[(3, 2), (-1, 7)]);
        assert_eq!(a.bar(), lp(&[(-3, 2), (1, 7)]));
        assert_eq!(a.subs_pow(2), lp(&[(6, 2), (-2, 7)]));
        assert_eq!(a.subs_pow(-1), a.bar());
    }
}
