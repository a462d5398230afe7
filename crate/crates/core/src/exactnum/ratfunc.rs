use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::polygcd::{self, IntPoly};
use super::{LaurentU, Rational, Ring};

/// Element of the fraction field Q(u).
///
/// Canonical form: the denominator is a primitive integer polynomial in `u`
/// with nonzero constant term and positive leading coefficient, coprime to
/// the numerator. All constants and `u`-powers live in the numerator, so
/// structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFunctionU {
    num: LaurentU,
    den: LaurentU,
}

impl Default for RationalFunctionU {
    fn default() -> Self {
        Self::zero()
    }
}

fn den_poly(l: &LaurentU) -> IntPoly {
    let (_, _, p) = polygcd::to_primitive(l);
    p
}

impl RationalFunctionU {
    pub fn zero() -> Self {
        RationalFunctionU { num: LaurentU::zero(), den: LaurentU::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentU::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_laurent(LaurentU::constant(r))
    }

    pub fn from_laurent(num: LaurentU) -> Self {
        RationalFunctionU { num, den: LaurentU::one() }
    }

    /// `num / den`, reduced to canonical form.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: LaurentU, den: LaurentU) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        Self::normalize(num, den, true)
    }

    /// `num / den` where the caller guarantees the two share no nontrivial
    /// polynomial factor.
    fn from_coprime(num: LaurentU, den: LaurentU) -> Self {
        Self::normalize(num, den, false)
    }

    fn normalize(num: LaurentU, den: LaurentU, reduce: bool) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (cd, ld, pd) = polygcd::to_primitive(&den);
        if pd.len() == 1 {
            return Self::from_laurent(num.shift(-ld).scale(&cd.recip()));
        }
        let (cn, ln, mut pn) = polygcd::to_primitive(&num);
        let mut pd = pd;
        if reduce && pn.len() > 1 {
            let g = polygcd::gcd(&pn, &pd);
            if !polygcd::is_one(&g) {
                pn = polygcd::div_exact(&pn, &g).expect("gcd divides numerator");
                pd = polygcd::div_exact(&pd, &g).expect("gcd divides denominator");
            }
        }
        let num = polygcd::to_laurent(&pn, ln - ld, &(&cn / &cd));
        let den = polygcd::to_laurent(&pd, 0, &Rational::one());
        RationalFunctionU { num, den }
    }

    /// The quantum bracket `[n] = u^n - u^{-n}`.
    pub fn bracket(n: i64) -> Self {
        Self::from_laurent(super::qbracket(n))
    }

    /// `prod [num_args] / prod [den_args]`, cancelling equal brackets first.
    ///
    /// Panics if any denominator argument is zero.
    pub fn bracket_ratio(num_args: &[i64], den_args: &[i64]) -> Self {
        assert!(den_args.iter().all(|&k| k != 0), "[0] = 0 in a denominator");
        if num_args.iter().any(|&k| k == 0) {
            return Self::zero();
        }
        let mut sign = 1i64;
        let mut num: Vec<i64> = num_args
            .iter()
            .map(|&k| {
                sign *= k.signum();
                k.abs()
            })
            .collect();
        let mut den: Vec<i64> = Vec::with_capacity(den_args.len());
        for &k in den_args {
            sign *= k.signum();
            let k = k.abs();
            if let Some(pos) = num.iter().position(|&x| x == k) {
                num.swap_remove(pos);
            } else {
                den.push(k);
            }
        }
        let n = num.iter().fold(LaurentU::constant(Rational::from(sign)), |acc, &k| acc.mul_bracket(k));
        let d = den.iter().fold(LaurentU::one(), |acc, &k| acc.mul_bracket(k));
        Self::new(n, d)
    }

    pub fn numer(&self) -> &LaurentU {
        &self.num
    }

    pub fn denom(&self) -> &LaurentU {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentU> {
        (self.den == LaurentU::one()).then_some(&self.num)
    }

    pub fn is_laurent(&self) -> bool {
        self.den == LaurentU::one()
    }

    /// Multiplies by `c * u^k` without any gcd work.
    pub fn mul_monomial(&self, k: i64, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunctionU { num: self.num.shift(k).scale(c), den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.mul_monomial(0, c)
    }

    /// The bar involution `u -> u^{-1}`.
    pub fn bar(&self) -> Self {
        Self::from_coprime(self.num.bar(), self.den.bar())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        let rnum = if negate { -&rhs.num } else { rhs.num.clone() };
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return RationalFunctionU { num: rnum, den: rhs.den.clone() };
        }
        if self.den == rhs.den {
            if self.is_laurent() {
                return Self::from_laurent(&self.num + &rnum);
            }
            return Self::new(&self.num + &rnum, self.den.clone());
        }
        // Henrici: only the gcd of the denominators can cancel.
        let b = den_poly(&self.den);
        let d = den_poly(&rhs.den);
        let g = polygcd::gcd(&b, &d);
        if polygcd::is_one(&g) {
            let num = &(&self.num * &rhs.den) + &(&rnum * &self.den);
            return Self::from_coprime(num, &self.den * &rhs.den);
        }
        let b1 = polygcd::div_exact(&b, &g).unwrap();
        let d1 = polygcd::div_exact(&d, &g).unwrap();
        let one = Rational::one();
        let b1l = polygcd::to_laurent(&b1, 0, &one);
        let d1l = polygcd::to_laurent(&d1, 0, &one);
        let t = &(&self.num * &d1l) + &(&rnum * &b1l);
        let den = &(&b1l * &d1l) * &polygcd::to_laurent(&g, 0, &one);
        Self::new(t, den)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        match (self.is_laurent(), rhs.is_laurent()) {
            (true, true) => return Self::from_laurent(&self.num * &rhs.num),
            _ if self.num.is_monomial() || rhs.num.is_monomial() => {
                // A monomial numerator shares no factor with a denominator.
                let (a, b) = if self.num.is_monomial() { (self, rhs) } else { (rhs, self) };
                if b.num.is_monomial() {
                    return Self::from_coprime(&a.num * &b.num, &a.den * &b.den);
                }
                return Self::new(&a.num * &b.num, &a.den * &b.den);
            }
            _ => {}
        }
        // Cross-cancel a with d and c with b.
        let (ca, la, pa) = polygcd::to_primitive(&self.num);
        let (cc, lc, pc) = polygcd::to_primitive(&rhs.num);
        let pb = den_poly(&self.den);
        let pd = den_poly(&rhs.den);
        let g1 = polygcd::gcd(&pa, &pd);
        let g2 = polygcd::gcd(&pc, &pb);
        let pa = polygcd::div_exact(&pa, &g1).unwrap();
        let pd = polygcd::div_exact(&pd, &g1).unwrap();
        let pc = polygcd::div_exact(&pc, &g2).unwrap();
        let pb = polygcd::div_exact(&pb, &g2).unwrap();
        let num = polygcd::to_laurent(&polygcd::mul(&pa, &pc), la + lc, &(&ca * &cc));
        let den = polygcd::to_laurent(&polygcd::mul(&pb, &pd), 0, &Rational::one());
        debug_assert!(polygcd::is_positive_lead(&den_poly(&den)));
        Self::from_coprime(num, den)
    }
}

impl Add<&RationalFunctionU> for &RationalFunctionU {
    type Output = RationalFunctionU;
    fn add(self, rhs: &RationalFunctionU) -> RationalFunctionU {
        self.add_impl(rhs, false)
    }
}

impl Sub<&RationalFunctionU> for &RationalFunctionU {
    type Output = RationalFunctionU;
    fn sub(self, rhs: &RationalFunctionU) -> RationalFunctionU {
        self.add_impl(rhs, true)
    }
}

impl Mul<&RationalFunctionU> for &RationalFunctionU {
    type Output = RationalFunctionU;
    fn mul(self, rhs: &RationalFunctionU) -> RationalFunctionU {
        self.mul_impl(rhs)
    }
}

impl Div<&RationalFunctionU> for &RationalFunctionU {
    type Output = RationalFunctionU;
    fn div(self, rhs: &RationalFunctionU) -> RationalFunctionU {
        self.mul_impl(&rhs.inverse().expect("division by zero rational function"))
    }
}

impl Neg for &RationalFunctionU {
    type Output = RationalFunctionU;
    fn neg(self) -> RationalFunctionU {
        RationalFunctionU { num: -&self.num, den: self.den.clone() }
    }
}

impl Ring for RationalFunctionU {
    fn zero() -> Self {
        RationalFunctionU::zero()
    }
    fn one() -> Self {
        RationalFunctionU::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunctionU::is_zero(self)
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
        RationalFunctionU::from_rational(r.clone())
    }
    fn inverse(&self) -> Option<Self> {
        RationalFunctionU::inverse(self)
    }
    fn scale(&self, r: &Rational) -> Self {
        RationalFunctionU::scale(self, r)
    }
}

impl fmt::Display for RationalFunctionU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunctionU {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<LaurentU> for RationalFunctionU {
    fn from(l: LaurentU) -> Self {
        Self::from_laurent(l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(n: i64) -> RationalFunctionU {
        RationalFunctionU::bracket(n)
    }

    #[test]
    fn canonical_equality_after_cancellation() {
        // [4]/[2] = u^2 + u^-2
        let r = &br(4) / &br(2);
        assert_eq!(r.as_laurent().unwrap().to_string(), "u^2 + u^-2");
        assert_eq!(r, RationalFunctionU::bracket_ratio(&[4], &[2]));
    }

    #[test]
    fn field_axioms_on_samples() {
        let a = RationalFunctionU::bracket_ratio(&[3], &[1, 2]);
        let b = RationalFunctionU::bracket_ratio(&[2, 2], &[1]);
        let c = RationalFunctionU::bracket_ratio(&[5], &[3, 3]);
        assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(&(&a - &a), &RationalFunctionU::zero());
        assert_eq!(&a * &a.inverse().unwrap(), RationalFunctionU::one());
    }

    #[test]
    fn sign_conventions() {
        assert_eq!(RationalFunctionU::bracket_ratio(&[-3], &[]), -&br(3));
        assert_eq!(RationalFunctionU::bracket_ratio(&[3], &[-1]), -&(&br(3) / &br(1)));
        assert!(RationalFunctionU::bracket_ratio(&[0, 5], &[1]).is_zero());
    }

    #[test]
    fn bar_of_bracket_inverse() {
        let a = &RationalFunctionU::one() / &br(1);
        assert_eq!(a.bar(), -&a);
    }
}
