//! Ooguri–Vafa invariants of the one-point function: the genus-zero
//! integers `d`, the half-integers `e` and the all-genus polynomials `N`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::amplitudes::genus0_onepoint;
use crate::exactnum::{binomial, LaurentU, Rational, RationalFunctionU, TruncatedSeries, Var};
use crate::partitions::{divisors, gcd, mobius};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OvError {
    #[error("degree k = {k} exceeds winding m = {m}")]
    OutOfRange { k: u32, m: u32 },
    #[error("winding must be positive")]
    ZeroWinding,
    #[error("{what}({a}, {k}, {m}) = {value} is not integral")]
    NotIntegral { what: &'static str, a: i64, k: u32, m: u32, value: Rational },
    #[error("{what}({a}, {k}, {m}) fails its recursion")]
    Recursion { what: &'static str, a: i64, k: u32, m: u32 },
    #[error("e({a}, {k}, {m}) differs from (-1)^k d although gcd(k, m) = 1")]
    CoprimeMismatch { a: i64, k: u32, m: u32 },
    #[error("N({a}, {m}, {k}) is not a Laurent polynomial with integer coefficients")]
    NotLaurent { a: i64, m: u32, k: u32 },
    #[error("N({a}, {m}, {k}) is not invariant under u -> 1/u")]
    NotBarSymmetric { a: i64, m: u32, k: u32 },
    #[error("sequence value at {index} disagrees with the invariant: {formula} vs {invariant}")]
    Sequence { index: u32, formula: Rational, invariant: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscInvariant {
    pub a: i64,
    pub k: u32,
    pub m: u32,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OVPolynomial {
    pub a: i64,
    pub m: u32,
    pub k: u32,
    pub value: LaurentU,
}

impl OVPolynomial {
    /// The value with the sign `(-1)^{am}` some tables absorb by labelling
    /// coefficients with `(-x)^m` instead of `x^m`.
    pub fn signed_by_framing(&self) -> LaurentU {
        if (self.a * self.m as i64).rem_euclid(2) == 1 {
            -&self.value
        } else {
            self.value.clone()
        }
    }
}

fn parity(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn fact(n: i64) -> Rational {
    (1..=n).map(Rational::from).product()
}

fn check_range(k: u32, m: u32) -> Result<(), OvError> {
    if m == 0 {
        return Err(OvError::ZeroWinding);
    }
    if k > m {
        return Err(OvError::OutOfRange { k, m });
    }
    Ok(())
}

/// `prod_{j=1}^{m-1} (ma+j+k) / (m k! (m-k)!)`.
fn genus0_term(a: i64, k: i64, m: i64) -> Rational {
    let p: Rational = (1..m).map(|j| Rational::from(m * a + j + k)).product();
    &p / &(&Rational::from(m) * &(&fact(k) * &fact(m - k)))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Sign {
    None,
    Degree,
    Framed,
}

fn mobius_sum(a: i64, k: u32, m: u32, sign: Sign) -> Rational {
    let g = gcd(k as u64, m as u64);
    let mut total = Rational::zero();
    for n in divisors(g) {
        let mu = mobius(n as i64).expect("positive divisor");
        if mu == 0 {
            continue;
        }
        let (kk, mm, n) = (k as i64 / n as i64, m as i64 / n as i64, n as i64);
        let s = match sign {
            Sign::None => 1,
            Sign::Degree => parity(kk),
            Sign::Framed => parity(kk + mm * a),
        };
        total += &(&genus0_term(a, kk, mm) * &Rational::new(mu as i64 * s, n * n));
    }
    total
}

/// Left side of the divisor recursion, `sum_{j | (k,m)} x_{k/j, m/j} / j^2`.
fn recursion_lhs(k: u32, m: u32, x: impl Fn(u32, u32) -> Rational) -> Rational {
    divisors(gcd(k as u64, m as u64))
        .into_iter()
        .map(|j| &x(k / j as u32, m / j as u32) / &Rational::from((j * j) as i64))
        .sum()
}

/// `d^(a)_{k,m}` as given by the Möbius sum, with no integrality check.
pub fn disc_d_value(a: i64, k: u32, m: u32) -> Result<Rational, OvError> {
    check_range(k, m)?;
    Ok(mobius_sum(a, k, m, Sign::Degree))
}

/// `d^(a)_{k,m}` via Möbius inversion; checks integrality and the divisor
/// recursion it is supposed to solve.
///
/// For odd `a` the value is only a half-integer at some `m = 2 mod 4`
/// (`d^(1)_{0,2} = 1/2`), and this returns `NotIntegral`. See
/// [`disc_d_framed`].
pub fn disc_d(a: i64, k: u32, m: u32) -> Result<DiscInvariant, OvError> {
    checked_d(a, k, m, Sign::Degree)
}

/// The same invariant expanded in `(-1)^a x` instead of `x`: the sign
/// `(-1)^k` becomes `(-1)^{ma+k}`, matching the all-genus polynomials.
/// Agrees with [`disc_d`] for even `a`.
pub fn disc_d_framed(a: i64, k: u32, m: u32) -> Result<DiscInvariant, OvError> {
    checked_d(a, k, m, Sign::Framed)
}

fn checked_d(a: i64, k: u32, m: u32, sign: Sign) -> Result<DiscInvariant, OvError> {
    check_range(k, m)?;
    let value = mobius_sum(a, k, m, sign);
    let lhs = recursion_lhs(k, m, |kk, mm| mobius_sum(a, kk, mm, sign));
    let s = match sign {
        Sign::Framed => parity(k as i64 + m as i64 * a),
        _ => parity(k as i64),
    };
    if lhs != &genus0_term(a, k as i64, m as i64) * &Rational::from(s) {
        return Err(OvError::Recursion { what: "d", a, k, m });
    }
    if !value.is_integer() {
        return Err(OvError::NotIntegral { what: "d", a, k, m, value });
    }
    Ok(DiscInvariant { a, k, m, value })
}

/// `e^(a)_{k,m}`: the unsigned analogue of `d`. Checks `2e` is integral,
/// the recursion, and `e = (-1)^k d` for coprime `(k, m)` (which is
/// `e = |d|` when `a >= 0`).
pub fn disc_e(a: i64, k: u32, m: u32) -> Result<DiscInvariant, OvError> {
    check_range(k, m)?;
    let value = mobius_sum(a, k, m, Sign::None);
    if !(&value * &Rational::from(2)).is_integer() {
        return Err(OvError::NotIntegral { what: "2e", a, k, m, value });
    }
    let lhs = recursion_lhs(k, m, |kk, mm| mobius_sum(a, kk, mm, Sign::None));
    if lhs != genus0_term(a, k as i64, m as i64) {
        return Err(OvError::Recursion { what: "e", a, k, m });
    }
    if gcd(k as u64, m as u64) == 1 && value != &disc_d_value(a, k, m)? * &Rational::from(parity(k as i64)) {
        return Err(OvError::CoprimeMismatch { a, k, m });
    }
    Ok(DiscInvariant { a, k, m, value })
}

/// `d^(a)_{k,m}` by solving the divisor recursion directly, without the
/// Möbius function.
pub fn disc_d_recursive(a: i64, k: u32, m: u32) -> Result<Rational, OvError> {
    check_range(k, m)?;
    let mut value = &genus0_term(a, k as i64, m as i64) * &Rational::from(parity(k as i64));
    for j in divisors(gcd(k as u64, m as u64)).into_iter().skip(1) {
        let j = j as u32;
        value -= &(&disc_d_recursive(a, k / j, m / j)? / &Rational::from((j * j) as i64));
    }
    Ok(value)
}

/// `d^(a)_{k,m}` when `gcd(k, m)` is 1 or a prime `p` with `k = p` or
/// `k = p^2`, from the explicit two-term formulas. `None` outside those
/// cases.
pub fn disc_d_special(a: i64, k: u32, m: u32) -> Option<Rational> {
    let (k, m) = (k as i64, m as i64);
    let g = gcd(k as u64, m as u64) as i64;
    let lead = &genus0_term(a, k, m) * &Rational::from(parity(k));
    if g == 1 {
        return Some(lead);
    }
    if mobius(g).ok()? != -1 {
        return None;
    }
    let (p, n) = (g, m / g);
    if k == p {
        // lead + prod_{j=2}^n (na+j) / (p^2 n!)
        let p2: Rational = (2..=n).map(|j| Rational::from(n * a + j)).product();
        return Some(&lead + &(&p2 / &(&Rational::from(p * p) * &fact(n))));
    }
    if k == p * p && n % p != 0 {
        // lead + (-1)^{p-1} prod_{i=1}^{n-1} (na+i+p) / (p^2 n p! (n-p)!)
        if n < p {
            return Some(lead);
        }
        let pr: Rational = (1..n).map(|i| Rational::from(n * a + i + p)).product();
        let den = &Rational::from(p * p * n) * &(&fact(p) * &fact(n - p));
        return Some(&lead + &(&(&pr / &den) * &Rational::from(parity(p - 1))));
    }
    None
}

/// `G(u; m, k) = (-1)^{ma+k} prod_{j=1}^{m-1} [am+j+k] / ([k]! [m-k]!)`,
/// with `u` replaced by `u^n`.
fn n_summand(a: i64, m: i64, k: i64, n: i64) -> RationalFunctionU {
    let num: Vec<i64> = (1..m).map(|j| n * (a * m + j + k)).collect();
    let den: Vec<i64> = (1..=k).chain(1..=m - k).map(|j| n * j).collect();
    RationalFunctionU::bracket_ratio(&num, &den).scale(&Rational::from(parity(m * a + k)))
}

/// `N^(a)_{m,k}(u)`: `[1]` times the Möbius inversion of `G`. Checks the
/// result is a bar-symmetric Laurent polynomial with integer coefficients.
pub fn ov_n(a: i64, m: u32, k: u32) -> Result<OVPolynomial, OvError> {
    check_range(k, m)?;
    let mut total = RationalFunctionU::zero();
    for n in divisors(gcd(k as u64, m as u64)) {
        let mu = mobius(n as i64).expect("positive divisor");
        if mu != 0 {
            let n = n as i64;
            total = &total + &n_summand(a, m as i64 / n, k as i64 / n, n).scale(&Rational::from(mu as i64));
        }
    }
    let total = &total * &RationalFunctionU::bracket(1);
    let value = match total.as_laurent() {
        Some(l) if l.has_integer_coeffs() => l.clone(),
        _ => return Err(OvError::NotLaurent { a, m, k }),
    };
    if value.bar() != value {
        return Err(OvError::NotBarSymmetric { a, m, k });
    }
    Ok(OVPolynomial { a, m, k, value })
}

/// Checks `sum_{j | (k,m)} N_{m/j,k/j}(u^j) / [j] = G(u; m, k)`.
pub fn ov_n_consistency(a: i64, m: u32, k: u32) -> Result<bool, OvError> {
    check_range(k, m)?;
    let mut lhs = RationalFunctionU::zero();
    for j in divisors(gcd(k as u64, m as u64)) {
        let j = j as u32;
        let n = ov_n(a, m / j, k / j)?.value.subs_pow(j as i64);
        lhs = &lhs + &(&RationalFunctionU::from_laurent(n) / &RationalFunctionU::bracket(j as i64));
    }
    Ok(lhs == n_summand(a, m as i64, k as i64, 1))
}

/// `(1 / 2m^2) sum_{l | m} (-1)^l mu(m/l) binom(2l, l)`; checks it equals
/// `d^(0)_{m,m}`.
pub fn seq_dmm(m: u32) -> Result<Rational, OvError> {
    if m == 0 {
        return Err(OvError::ZeroWinding);
    }
    let mut sum = BigInt::from(0);
    for l in divisors(m as u64) {
        let mu = mobius((m as u64 / l) as i64).expect("positive divisor");
        sum += BigInt::from(mu as i64 * parity(l as i64)) * binomial(2 * l, l);
    }
    let value = Rational::new(sum, 2 * m as i64 * m as i64);
    let d = disc_d(0, m, m)?.value;
    if value != d {
        return Err(OvError::Sequence { index: m, formula: value, invariant: d });
    }
    Ok(value)
}

/// The Catalan number `C(k)`; checks it equals `|d^(0)_{k,k+1}|`.
pub fn seq_catalan(k: u32) -> Result<BigInt, OvError> {
    let c = binomial(2 * k as u64, k as u64) / BigInt::from(k + 1);
    let d = disc_d(0, k, k + 1)?.value;
    if Rational::from(c.clone()) != d.abs() {
        return Err(OvError::Sequence { index: k, formula: Rational::from(c), invariant: d });
    }
    Ok(c)
}

/// Compares `sum_{k,m} m d_{k,m} log(1 - E^k x^m)` with
/// `x d/dx Psi_{0,1}` from the genus-zero amplitude, both in `x` and
/// `E = -Q` through order `order`.
pub fn ov_generating_check(a: i64, order: u32) -> Result<bool, OvError> {
    let vars = [Var::X, Var::E];
    let orders = [order as i32, order as i32];
    let mut lhs = TruncatedSeries::<Rational>::zero(&vars, &orders);
    for m in 1..=order {
        for k in 0..=m.min(order) {
            let d = disc_d_value(a, k, m)?;
            if d.is_zero() {
                continue;
            }
            // log(1 - w) = -sum_r w^r / r with w = E^k x^m
            for r in 1..=order / m {
                if k * r > order {
                    break;
                }
                let c = &(&d * &Rational::from(m as i64)) * &Rational::new(-1, r as i64);
                lhs.add_term(vec![(m * r) as i32, (k * r) as i32], c);
            }
        }
    }
    let mut rhs = TruncatedSeries::<Rational>::zero(&vars, &orders);
    for n in 1..=order {
        for (j, c) in genus0_onepoint(a, n).coeffs().iter().enumerate() {
            let c = &(c * &Rational::from(n as i64)) * &Rational::from(parity(j as i64));
            rhs.add_term(vec![n as i32, j as i32], c);
        }
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentU {
        LaurentU::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from(c))))
    }

    #[test]
    fn d_examples() {
        assert_eq!(disc_d(0, 1, 2).unwrap().value, r(-1, 1));
        assert_eq!(disc_d(0, 2, 2).unwrap().value.abs(), r(1, 1));
        assert_eq!(disc_d(0, 4, 5).unwrap().value, r(14, 1));
        assert_eq!(disc_d(0, 0, 1).unwrap().value, r(1, 1));
        assert_eq!(disc_d(0, 0, 2).unwrap().value, r(0, 1));
        assert!(matches!(disc_d(0, 3, 2), Err(OvError::OutOfRange { .. })));
    }

    #[test]
    fn odd_framing_half_integers() {
        // x d/dx Psi contains a log(1 - x^2), so 2 d_{0,2} = a
        assert_eq!(disc_d_value(1, 0, 2).unwrap(), r(1, 2));
        assert!(matches!(disc_d(1, 0, 2), Err(OvError::NotIntegral { .. })));
        assert_eq!(disc_d_value(3, 0, 2).unwrap(), r(3, 2));
        assert_eq!(disc_d_framed(1, 0, 2).unwrap().value, r(1, 1));
        for a in -3..=3 {
            for m in 1..=12 {
                for k in 0..=m {
                    let f = disc_d_framed(a, k, m).unwrap().value;
                    if a % 2 == 0 {
                        assert_eq!(f, disc_d(a, k, m).unwrap().value);
                    }
                }
            }
        }
    }

    #[test]
    fn e_examples() {
        assert_eq!(disc_e(0, 2, 2).unwrap().value, r(1, 2));
        assert_eq!(disc_e(0, 5, 10).unwrap().value, r(5045, 1));
        assert_eq!(disc_e(0, 6, 10).unwrap().value, r(10507, 1));
    }

    #[test]
    fn recursion_agrees_with_mobius() {
        for a in -2..=2 {
            for m in 1..=12 {
                for k in 0..=m {
                    assert_eq!(disc_d_recursive(a, k, m).unwrap(), disc_d_value(a, k, m).unwrap());
                }
            }
        }
    }

    #[test]
    fn special_case_formulas() {
        let mut hits = 0;
        for a in -3..=3 {
            for m in 1..=20 {
                for k in 1..=m {
                    if let Some(v) = disc_d_special(a, k, m) {
                        assert_eq!(v, disc_d_value(a, k, m).unwrap(), "a = {a}, k = {k}, m = {m}");
                        hits += 1;
                    }
                }
            }
        }
        assert!(hits > 500);
    }

    #[test]
    fn n_examples_zero_framing() {
        assert_eq!(ov_n(0, 1, 0).unwrap().value, lp(&[(0, 1)]));
        assert_eq!(ov_n(0, 1, 1).unwrap().value, lp(&[(0, -1)]));
        assert!(ov_n(0, 2, 0).unwrap().value.is_zero());
        assert_eq!(ov_n(0, 2, 1).unwrap().value, lp(&[(1, -1), (-1, -1)]));
        assert_eq!(ov_n(0, 3, 2).unwrap().value, lp(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]));
        assert_eq!(ov_n(0, 3, 3).unwrap().value, lp(&[(4, -1), (0, -1), (-4, -1)]));
    }

    #[test]
    fn n_examples_framing_one() {
        assert_eq!(ov_n(1, 2, 2).unwrap().value, lp(&[(3, 1), (-3, 1)]));
        assert_eq!(ov_n(1, 2, 0).unwrap().value, lp(&[(1, 1), (-1, 1)]));
        assert_eq!(ov_n(1, 3, 0).unwrap().value, lp(&[(4, -1), (0, -1), (-4, -1)]));
        assert_eq!(ov_n(1, 1, 1).unwrap().signed_by_framing(), lp(&[(0, -1)]));
    }

    #[test]
    fn n_consistency() {
        for a in -2..=2 {
            for m in 1..=6 {
                for k in 0..=m {
                    assert!(ov_n_consistency(a, m, k).unwrap(), "a = {a}, m = {m}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn sequences() {
        let dmm: Vec<i64> = vec![-1, 1, -1, 2, -5, 13, -35, 100, -300, 925];
        for (i, v) in dmm.iter().enumerate() {
            assert_eq!(seq_dmm(i as u32 + 1).unwrap(), r(*v, 1));
        }
        assert_eq!(seq_dmm(4).unwrap(), r(2, 1));
        let cat: Vec<u32> = (1..=9).map(|k| seq_catalan(k).unwrap().try_into().unwrap()).collect();
        assert_eq!(cat, vec![1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
    }

    #[test]
    fn generating_function() {
        for a in -1..=1 {
            assert!(ov_generating_check(a, 6).unwrap(), "a = {a}");
        }
    }
}
