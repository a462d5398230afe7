//! Checks shared by the property suite and the acceptance runner. Each
//! returns the number of cases checked, or a description of the first
//! failure.

#![allow(dead_code)]

use conifold_core::exactnum::{binomial, qbinomial, LaurentU, Rational};
use conifold_core::fock::{cutjoin_apply, FockVector};
use conifold_core::partitions::{character_table, partitions_of, Partition};
use conifold_core::RationalFunctionU;

pub type Check = Result<usize, String>;

fn laurent(r: &RationalFunctionU) -> Result<LaurentU, String> {
    r.as_laurent().cloned().ok_or_else(|| format!("{r} is not a Laurent polynomial"))
}

/// Pascal rules, symmetry, bar invariance, positivity, the `u = 1` limit
/// and `[-n choose j] = (-1)^j [n+j-1 choose j]`, for `0 <= j <= n <= m`.
pub fn qbinomial_identities(m: i64) -> Check {
    let mut count = 0;
    for n in 0..=m {
        for j in 0..=n as u32 {
            let b = laurent(&qbinomial(n, j))?;
            let jj = j as i64;
            if b != laurent(&qbinomial(n, (n - jj) as u32))? {
                return Err(format!("symmetry fails at ({n}, {j})"));
            }
            if b.bar() != b {
                return Err(format!("bar invariance fails at ({n}, {j})"));
            }
            if b.terms().any(|(_, c)| !c.is_integer() || c.is_negative()) {
                return Err(format!("coefficients of ({n}, {j}) are not nonnegative integers"));
            }
            let total: Rational = b.terms().map(|(_, c)| c.clone()).sum();
            if total != Rational::from(binomial(n as u64, j as u64)) {
                return Err(format!("u = 1 limit fails at ({n}, {j})"));
            }
            if n >= 1 && j >= 1 {
                let up = laurent(&qbinomial(n - 1, j))?;
                let left = laurent(&qbinomial(n - 1, j - 1))?;
                let pascal1 = &up.shift(jj) + &left.shift(-(n - jj));
                let pascal2 = &up.shift(-jj) + &left.shift(n - jj);
                if pascal1 != b || pascal2 != b {
                    return Err(format!("Pascal rule fails at ({n}, {j})"));
                }
            }
            let sign = Rational::from(if j % 2 == 0 { 1 } else { -1 });
            if n >= 1 && qbinomial(-n, j) != qbinomial(n + jj - 1, j).scale(&sign) {
                return Err(format!("negative binomial identity fails at ({n}, {j})"));
            }
            count += 1;
        }
    }
    Ok(count)
}

/// Row and column orthogonality of the character tables up to `n_max`.
pub fn character_orthogonality(n_max: u32) -> Check {
    let mut count = 0;
    for n in 1..=n_max {
        let t = character_table(n);
        let parts = t.partitions();
        let len = parts.len();
        for a in 0..len {
            for b in 0..len {
                // sum_mu chi_a(mu) chi_b(mu) / z_mu = delta
                let row: Rational = (0..len)
                    .map(|j| &Rational::from(t.by_index(a, j) * t.by_index(b, j)) / &parts[j].z_aut())
                    .sum();
                let col: i64 = (0..len).map(|i| t.by_index(i, a) * t.by_index(i, b)).sum();
                let expected_col = if a == b { parts[a].z_aut() } else { Rational::zero() };
                if row != Rational::from(i64::from(a == b)) || Rational::from(col) != expected_col {
                    return Err(format!("orthogonality fails at n = {n}, ({}, {})", parts[a], parts[b]));
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `s_lambda` in power sums, `sum_mu chi_lambda(mu) p_mu / z_mu`.
pub fn schur(lambda: &Partition, max_degree: u32) -> FockVector<Rational> {
    let t = character_table(lambda.size());
    let mut v = FockVector::zero(max_degree);
    for mu in t.partitions() {
        let c = t.get(lambda, mu);
        if c != 0 {
            v.add_term(mu.clone(), &Rational::from(c) / &mu.z_aut());
        }
    }
    v
}

/// `K s_lambda = (kappa_lambda / 2) s_lambda` for `|lambda| <= n_max`.
pub fn cutjoin_eigenvalues(n_max: u32) -> Check {
    let mut count = 0;
    for n in 0..=n_max {
        for lambda in partitions_of(n) {
            let s = schur(&lambda, n_max);
            let expected = s.scale(&Rational::new(lambda.kappa(), 2));
            if cutjoin_apply(&s) != expected {
                return Err(format!("cut-and-join eigenvalue fails at {lambda}"));
            }
            count += 1;
        }
    }
    Ok(count)
}

/// `[beta_m, beta_n] = m delta_{m+n,0}` on every `p_mu` with `|mu| <= deg`
/// and `0 < |m|, |n| <= deg`.
pub fn heisenberg_relations(deg: u32) -> Check {
    let cap = 3 * deg;
    let d = deg as i32;
    let mut count = 0;
    for size in 0..=deg {
        for mu in partitions_of(size) {
            let v = FockVector::monomial(mu.clone(), Rational::one(), cap);
            for m in (-d..=d).filter(|&k| k != 0) {
                for n in (-d..=d).filter(|&k| k != 0) {
                    let comm = v.beta(n).beta(m).sub(&v.beta(m).beta(n));
                    let expected = if m + n == 0 { v.scale(&Rational::from(m as i64)) } else { FockVector::zero(cap) };
                    if comm != expected {
                        return Err(format!("[beta_{m}, beta_{n}] fails on p_{mu}"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}
