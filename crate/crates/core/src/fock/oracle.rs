use std::collections::BTreeMap;

use crate::exactnum::{QPoly, Rational, RationalFunctionU, Ring};
use crate::partitions::{partitions_of, Partition};

use super::vector::{qk_apply, vacuum_pairing, FockVector};

/// `exp(sum_n c_n beta_{-n} / n) |0>` up to degree `max_degree`: the
/// coefficient of `p_mu` is `prod_n c_n^{m_n} / z_mu`.
pub fn beta_neg_exp<R: Ring>(coeffs: &BTreeMap<u32, R>, max_degree: u32) -> FockVector<R> {
    let mut v = FockVector::zero(max_degree);
    for d in 0..=max_degree {
        'mu: for mu in partitions_of(d) {
            let mut c = R::one();
            for (k, m) in mu.multiplicities() {
                match coeffs.get(&k) {
                    Some(x) if !x.is_zero() => c = c.mul(&x.pow(m)),
                    _ => continue 'mu,
                }
            }
            v.add_term(mu.clone(), c.scale(&mu.z_aut().recip()));
        }
    }
    v
}

/// `c_m = ((-1)^{m-1} + Q^m) / [m]`.
fn brane_coefficient(m: u32) -> QPoly<RationalFunctionU> {
    let inv = RationalFunctionU::bracket_ratio(&[], &[m as i64]);
    let sign = if m % 2 == 1 { 1 } else { -1 };
    let mut coeffs = vec![RationalFunctionU::zero(); m as usize + 1];
    coeffs[0] = inv.scale(&Rational::from(sign));
    coeffs[m as usize] = inv;
    QPoly::from_coeffs(coeffs)
}

/// `q^{(a+1)K} exp(sum_m c_m beta_{-m} / m) |0>` up to degree `n`.
pub fn onepoint_state(a: i64, n: u32) -> FockVector<QPoly<RationalFunctionU>> {
    let coeffs: BTreeMap<u32, _> = (1..=n).map(|m| (m, brane_coefficient(m))).collect();
    qk_apply(&beta_neg_exp(&coeffs, n), a + 1)
}

/// `n i F_n` computed in the Fock space: build the brane state, apply the
/// framing operator, pair with the vacuum, take the logarithm and read off
/// the `p_n` coefficient. Powers of `Q` above `q_degree` are dropped.
pub fn oracle_onepoint(a: i64, n: u32, q_degree: usize) -> QPoly<RationalFunctionU> {
    assert!(n >= 1, "winding number must be positive");
    let state = onepoint_state(a, n);
    let mut z = FockVector::zero(n);
    for (mu, c) in vacuum_pairing(&state) {
        z.add_term(mu, c);
    }
    let log = z.log().expect("pairing has vacuum coefficient 1");
    // The p_n(x) coefficient of the log is w_(n) / i, and n i F_n = n w_(n).
    log.get(&Partition::row(n)).scale(&Rational::from(n as i64)).truncate(q_degree)
}
