//! One-point amplitudes of the resolved conifold with an outer brane.
//!
//! Values are stored as `F̂_n = n i F_n`, a polynomial in `Q` with
//! coefficients in the bracket ring. The genus expansion puts the
//! `1/(n i)` back.

use serde::{Deserialize, Serialize};

use crate::exactnum::{
    lambda_expand, ExactError, GaussianRational, QPoly, Rational, RationalFunctionU, Ring, TruncatedSeries, Var,
};
use crate::fock::oracle_onepoint;
use crate::partitions::partitions_of;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    ClosedForm,
    PartitionSum,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OnePointAmplitude {
    pub framing: i64,
    pub winding: u32,
    pub value: QPoly<RationalFunctionU>,
    pub provenance: Provenance,
}

impl OnePointAmplitude {
    /// Compares values only, ignoring how they were computed.
    pub fn same_value(&self, other: &Self) -> bool {
        self.framing == other.framing && self.winding == other.winding && self.value == other.value
    }
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Sum over partitions `mu` of `n` of
/// `prod_j ((-1)^{j-1} + Q^j)^{m_j} / (j^{m_j} m_j! [j]^{m_j})
///  * prod_j [(a+1) j n]^{m_j} / [(a+1) n]`.
///
/// At `a = -1` the bracket ratio is replaced by its limit: `n` for the
/// one-row partition and `0` otherwise.
pub fn onepoint_partition_sum(a: i64, n: u32) -> OnePointAmplitude {
    assert!(n >= 1, "winding number must be positive");
    let f = a + 1;
    let nn = n as i64;
    let mut total: QPoly<RationalFunctionU> = QPoly::zero();
    for mu in partitions_of(n) {
        let ratio = if f == 0 {
            if mu.len() == 1 {
                RationalFunctionU::from_rational(Rational::from(nn))
            } else {
                continue;
            }
        } else {
            let num: Vec<i64> = mu.parts().iter().map(|&j| f * j as i64 * nn).collect();
            RationalFunctionU::bracket_ratio(&num, &[f * nn])
        };
        let den: Vec<i64> = mu.parts().iter().map(|&j| j as i64).collect();
        let c = (&ratio * &RationalFunctionU::bracket_ratio(&[], &den)).scale(&mu.z_aut().recip());
        let mut poly: QPoly<Rational> = QPoly::one();
        for &j in mu.parts() {
            let factor = QPoly::from_coeffs(
                (0..=j as usize)
                    .map(|d| match d {
                        0 => Rational::from(sign(j as i64 - 1)),
                        d if d == j as usize => Rational::one(),
                        _ => Rational::zero(),
                    })
                    .collect(),
            );
            poly = poly.mul(&factor);
        }
        total = total.add(&poly.map(|r| c.scale(r)));
    }
    OnePointAmplitude { framing: a, winding: n, value: total, provenance: Provenance::PartitionSum }
}

/// `sum_{j=0}^n prod_{k=1}^{n-1} [an+j+k] / ([j]! [n-j]!) Q^j`.
pub fn onepoint_closed(a: i64, n: u32) -> OnePointAmplitude {
    assert!(n >= 1, "winding number must be positive");
    let nn = n as i64;
    let coeffs = (0..=nn)
        .map(|j| {
            let num: Vec<i64> = (1..nn).map(|k| a * nn + j + k).collect();
            let den: Vec<i64> = (1..=j).chain(1..=nn - j).collect();
            RationalFunctionU::bracket_ratio(&num, &den)
        })
        .collect();
    OnePointAmplitude { framing: a, winding: n, value: QPoly::from_coeffs(coeffs), provenance: Provenance::ClosedForm }
}

/// The Fock-space value, wrapped as an amplitude.
pub fn onepoint_oracle(a: i64, n: u32) -> OnePointAmplitude {
    OnePointAmplitude {
        framing: a,
        winding: n,
        value: oracle_onepoint(a, n, n as usize),
        provenance: Provenance::Oracle,
    }
}

/// Coefficient of `x^n` in the genus-zero one-point function:
/// `-(1/n) sum_j prod_{k=1}^{n-1} (na+j+k) / (j! (n-j)!) Q^j`.
pub fn genus0_onepoint(a: i64, n: u32) -> QPoly<Rational> {
    assert!(n >= 1, "winding number must be positive");
    let nn = n as i64;
    let mut fact = vec![Rational::one()];
    for k in 1..=nn {
        fact.push(&fact[k as usize - 1] * &Rational::from(k));
    }
    let coeffs = (0..=nn)
        .map(|j| {
            let p: Rational = (1..nn).map(|k| Rational::from(nn * a + j + k)).product();
            -(&(&p / &fact[j as usize]) / &(&fact[(nn - j) as usize] * &Rational::from(nn)))
        })
        .collect();
    QPoly::from_coeffs(coeffs)
}

/// `sum_{n=1}^{order} (-1)^{n-1} Q^n / (n [n]^2)`.
pub fn closed_string_logz(q_order: i32) -> TruncatedSeries<RationalFunctionU> {
    assert!(q_order >= 1, "Q order must be positive");
    let terms = (1..=q_order).map(|n| {
        let c = RationalFunctionU::bracket_ratio(&[], &[n as i64, n as i64]).scale(&Rational::new(sign(n as i64 - 1), n as i64));
        (vec![n], c)
    });
    TruncatedSeries::from_terms(&[Var::Q], &[q_order], terms)
}

/// `F_n` as a series in `lambda` and `Q`, through `lambda^{2 g_max - 1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenusSeries {
    pub framing: i64,
    pub winding: u32,
    pub g_max: u32,
    pub series: TruncatedSeries<GaussianRational>,
}

impl GenusSeries {
    /// Coefficient of `lambda^k` as a polynomial in `Q`.
    pub fn lambda_coeff(&self, k: i32) -> QPoly<GaussianRational> {
        QPoly::from_coeffs((0..=self.winding as i32).map(|j| self.series.coeff(&[k, j])).collect())
    }

    /// `F_{g;n}`, the coefficient of `lambda^{2g-1}`.
    pub fn genus(&self, g: u32) -> QPoly<GaussianRational> {
        self.lambda_coeff(2 * g as i32 - 1)
    }
}

pub fn genus_expand(amp: &OnePointAmplitude, g_max: u32) -> Result<GenusSeries, ExactError> {
    let order = 2 * g_max as i32 - 1;
    let n = amp.winding as i32;
    let prefactor = GaussianRational::i().neg().scale(&Rational::new(1, n as i64));
    let mut series = TruncatedSeries::zero(&[Var::Lambda, Var::Q], &[order, n]);
    for (j, c) in amp.value.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (e, v) in lambda_expand(c, order)?.terms() {
            series.add_term(vec![e[0], j as i32], v.mul(&prefactor));
        }
    }
    Ok(GenusSeries { framing: amp.framing, winding: amp.winding, g_max, series })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunctionU {
        RationalFunctionU::bracket_ratio(num, den)
    }

    fn qr(v: &[(i64, i64)]) -> QPoly<Rational> {
        QPoly::from_coeffs(v.iter().map(|&(p, q)| Rational::new(p, q)).collect())
    }

    #[test]
    fn winding_one() {
        let expected = QPoly::from_coeffs(vec![rf(&[], &[1]), rf(&[], &[1])]);
        for a in -3..=3 {
            assert_eq!(onepoint_closed(a, 1).value, expected);
            assert_eq!(onepoint_partition_sum(a, 1).value, expected);
        }
    }

    #[test]
    fn framing_one_winding_two() {
        // [3]/([1][2]) + [4]Q/[1]^2 + [5]Q^2/([1][2])
        let expected = QPoly::from_coeffs(vec![rf(&[3], &[1, 2]), rf(&[4], &[1, 1]), rf(&[5], &[1, 2])]);
        assert_eq!(onepoint_closed(1, 2).value, expected);
        assert_eq!(onepoint_partition_sum(1, 2).value, expected);
    }

    #[test]
    fn framing_minus_one_corollary() {
        for n in 1..=6u32 {
            let mut coeffs = vec![RationalFunctionU::zero(); n as usize + 1];
            coeffs[0] = rf(&[], &[n as i64]).scale(&Rational::from(sign(n as i64 - 1)));
            coeffs[n as usize] = rf(&[], &[n as i64]);
            let expected = QPoly::from_coeffs(coeffs);
            assert_eq!(onepoint_closed(-1, n).value, expected, "n = {n}");
            assert_eq!(onepoint_partition_sum(-1, n).value, expected, "n = {n}");
        }
    }

    #[test]
    fn partition_sum_matches_closed_form() {
        for a in -3..=3 {
            for n in 1..=5 {
                assert!(onepoint_partition_sum(a, n).same_value(&onepoint_closed(a, n)), "a = {a}, n = {n}");
            }
        }
    }

    #[test]
    fn genus_zero_tables() {
        assert_eq!(genus0_onepoint(0, 2), qr(&[(-1, 4), (-1, 1), (-3, 4)]));
        assert_eq!(genus0_onepoint(0, 5), qr(&[(-1, 25), (-1, 1), (-6, 1), (-14, 1), (-14, 1), (-126, 25)]));
        for a in -3..=3i64 {
            let expected = QPoly::from_coeffs(vec![
                Rational::new(-(2 * a + 1), 4),
                Rational::from(-(a + 1)),
                Rational::new(-(2 * a + 3), 4),
            ]);
            assert_eq!(genus0_onepoint(a, 2), expected);
        }
    }

    #[test]
    fn genus_expansion_leading_term() {
        for a in -3..=3 {
            for n in 1..=6 {
                let g = genus_expand(&onepoint_closed(a, n), 2).unwrap();
                assert_eq!(g.genus(0), genus0_onepoint(a, n).map(|r| GaussianRational::real(r.clone())));
                for (e, _) in g.series.terms() {
                    assert_eq!(e[0].rem_euclid(2), 1, "even power of lambda");
                }
            }
        }
    }

    #[test]
    fn genus_expansion_at_minus_one_framing() {
        let g = genus_expand(&onepoint_closed(-1, 3), 1).unwrap();
        let c = GaussianRational::real(Rational::new(-1, 9));
        assert_eq!(g.genus(0).coeffs(), &[c.clone(), GaussianRational::zero(), GaussianRational::zero(), c]);
    }

    #[test]
    fn closed_string_free_energy() {
        let z = closed_string_logz(2);
        assert_eq!(z.coeff(&[1]), rf(&[], &[1, 1]));
        assert_eq!(z.coeff(&[2]), rf(&[], &[2, 2]).scale(&Rational::new(-1, 2)));
        let s = lambda_expand(&z.coeff(&[1]), 0).unwrap();
        assert_eq!(s.coeff(&[-2]), GaussianRational::real(Rational::from(-1)));
        assert_eq!(s.coeff(&[0]), GaussianRational::real(Rational::new(-1, 12)));
    }

    #[test]
    fn values_are_odd_under_bar() {
        for a in -2..=2 {
            for n in 1..=5 {
                let v = onepoint_closed(a, n).value;
                assert_eq!(v.map(|c| c.bar()), v.neg());
            }
        }
    }
}
