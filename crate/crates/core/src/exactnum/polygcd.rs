//! Univariate polynomial arithmetic over Z, used to normalize rational
//! functions. Polynomials are coefficient vectors in ascending degree with
//! no trailing zeros.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LaurentU, Rational};

pub(crate) type IntPoly = Vec<BigInt>;

fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn degree(p: &IntPoly) -> usize {
    p.len() - 1
}

fn content(p: &IntPoly) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive_part(p: &IntPoly) -> IntPoly {
    let mut c = content(p);
    if p.last().is_some_and(Signed::is_negative) {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

/// Splits a nonzero Laurent polynomial as `content * u^low * p(u)` where `p`
/// is a primitive integer polynomial with `p(0) != 0` and positive leading
/// coefficient.
pub(crate) fn to_primitive(l: &LaurentU) -> (Rational, i64, IntPoly) {
    let (low, coeffs) = l.dense();
    assert!(!coeffs.is_empty(), "to_primitive of zero");
    let den_lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: IntPoly = coeffs.iter().map(|c| c.numer() * (&den_lcm / c.denom())).collect();
    let mut c = content(&ints);
    if ints.last().unwrap().is_negative() {
        c = -c;
    }
    let prim: IntPoly = ints.iter().map(|x| x / &c).collect();
    (Rational::new(c, den_lcm), low, prim)
}

pub(crate) fn to_laurent(p: &IntPoly, low: i64, scale: &Rational) -> LaurentU {
    LaurentU::from_dense(low, p.iter().map(|c| Rational::from_integer(c.clone()) * scale).collect())
}

pub(crate) fn is_one(p: &IntPoly) -> bool {
    p.len() == 1 && p[0].is_one()
}

pub(crate) fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if is_one(a) {
        return b.clone();
    }
    if is_one(b) {
        return a.clone();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division over Z; `None` if `b` does not divide `a` in Z[u].
pub(crate) fn div_exact(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    if is_one(b) {
        return Some(a.clone());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let db = degree(b);
    let lead = b.last().unwrap();
    let qlen = a.len() - b.len() + 1;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let top = &rem[i + db];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, c) in b.iter().enumerate() {
            rem[i + j] -= &q * c;
        }
        quot[i] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

fn eval(p: &IntPoly, x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Recovers a polynomial from its value at `xi` using balanced digits.
fn interpolate(mut h: BigInt, xi: &BigInt) -> IntPoly {
    let half = xi / 2;
    let mut out = Vec::new();
    while !h.is_zero() {
        let mut g = h.mod_floor(xi);
        if g > half {
            g -= xi;
        }
        h = (h - &g) / xi;
        out.push(g);
    }
    trim(&mut out);
    out
}

fn max_norm(p: &IntPoly) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Heuristic gcd: evaluate at a large integer, take the integer gcd and
/// reconstruct. Returns `None` if every attempt failed verification.
fn gcd_heuristic(f: &IntPoly, g: &IntPoly) -> Option<IntPoly> {
    let fm = max_norm(f);
    let gm = max_norm(g);
    let b: BigInt = BigInt::from(2) * fm.clone().min(gm.clone()) + BigInt::from(29);
    let lc_bound = {
        let a = &fm / f.last().unwrap().abs();
        let c = &gm / g.last().unwrap().abs();
        BigInt::from(2) * a.min(c) + 2
    };
    let mut xi = b.sqrt() * 99;
    if xi > b {
        xi = b;
    }
    if xi < lc_bound {
        xi = lc_bound;
    }
    for _ in 0..6 {
        let fv = eval(f, &xi);
        let gv = eval(g, &xi);
        if !fv.is_zero() && !gv.is_zero() {
            let hv = fv.gcd(&gv);
            let h = interpolate(hv, &xi);
            if !h.is_empty() {
                let h = primitive_part(&h);
                if div_exact(f, &h).is_some() && div_exact(g, &h).is_some() {
                    return Some(h);
                }
            }
        }
        xi = (&xi * BigInt::from(73794) * xi.sqrt().sqrt()) / BigInt::from(27011);
    }
    None
}

fn pseudo_rem(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let mut r = f.clone();
    let dg = degree(g);
    let lc = g.last().unwrap().clone();
    while r.len() >= g.len() {
        let dr = degree(&r);
        let top = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lc;
        }
        for (j, c) in g.iter().enumerate() {
            r[dr - dg + j] -= &top * c;
        }
        trim(&mut r);
    }
    r
}

fn gcd_prs(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let (mut a, mut b) = (primitive_part(f), primitive_part(g));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { primitive_part(&r) };
    }
    primitive_part(&a)
}

/// Greatest common divisor of two nonzero primitive polynomials, normalized
/// to be primitive with positive leading coefficient.
pub(crate) fn gcd(f: &IntPoly, g: &IntPoly) -> IntPoly {
    if f.len() == 1 || g.len() == 1 {
        return vec![BigInt::one()];
    }
    if f == g {
        return primitive_part(f);
    }
    gcd_heuristic(f, g).unwrap_or_else(|| gcd_prs(f, g))
}

pub(crate) fn is_positive_lead(p: &IntPoly) -> bool {
    p.last().is_some_and(|c| c.sign() == Sign::Plus)
}
