use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Rational, Ring};

/// Dense polynomial in `Q` with coefficients in `R`, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> QPoly<R> {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * Q^d`.
    pub fn monomial(d: usize, c: R) -> Self {
        let mut coeffs = vec![R::zero(); d + 1];
        coeffs[d] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> R {
        self.coeffs.get(d).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Drops every power above `Q^d`.
    pub fn truncate(&self, d: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(d + 1).cloned().collect())
    }

    /// Product truncated at `Q^d`.
    pub fn mul_trunc(&self, rhs: &Self, d: usize) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let len = (self.coeffs.len() + rhs.coeffs.len() - 1).min(d + 1);
        let mut out = vec![R::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale_by(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> QPoly<S> {
        QPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Substitutes `Q -> c Q`.
    pub fn rescale_var(&self, c: &Rational) -> Self {
        let mut p = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            out.push(x.scale(&p));
            p = &p * c;
        }
        Self::from_coeffs(out)
    }
}

impl<R: Ring> Ring for QPoly<R> {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }
    fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_trunc(rhs, usize::MAX - 1)
    }
    fn neg(&self) -> Self {
        QPoly { coeffs: self.coeffs.iter().map(Ring::neg).collect() }
    }
    fn from_rational(r: &Rational) -> Self {
        QPoly::constant(R::from_rational(r))
    }
    fn inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].inverse().map(QPoly::constant)
        } else {
            None
        }
    }
    fn scale(&self, r: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.scale(r)).collect())
    }
}

impl<R: Ring + fmt::Display> fmt::Display for QPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*Q")?,
                _ => write!(f, "({c})*Q^{d}")?,
            }
        }
        Ok(())
    }
}

impl<R: fmt::Debug> fmt::Debug for QPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(v: &[i64]) -> QPoly<Rational> {
        QPoly::from_coeffs(v.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn truncated_product() {
        let a = qp(&[1, 1]);
        assert_eq!(a.mul(&a), qp(&[1, 2, 1]));
        assert_eq!(a.mul_trunc(&a, 1), qp(&[1, 2]));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(qp(&[3, 0, 0]).degree(), Some(0));
        assert!(qp(&[0]).is_zero());
        assert_eq!(qp(&[1, 2, 3]).rescale_var(&Rational::from(-1)), qp(&[1, -2, 3]));
    }
}
