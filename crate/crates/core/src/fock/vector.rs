use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::exactnum::{LaurentU, QPoly, Rational, RationalFunctionU, Ring};
use crate::partitions::{character_table, Partition};

use super::FockError;

/// Scalars that can be multiplied by a power of `u`.
pub trait MulUPow {
    fn mul_u_pow(&self, k: i64) -> Self;
}

impl MulUPow for LaurentU {
    fn mul_u_pow(&self, k: i64) -> Self {
        self.shift(k)
    }
}

impl MulUPow for RationalFunctionU {
    fn mul_u_pow(&self, k: i64) -> Self {
        self.mul_monomial(k, &Rational::one())
    }
}

impl<R: Ring + MulUPow> MulUPow for QPoly<R> {
    fn mul_u_pow(&self, k: i64) -> Self {
        QPoly::from_coeffs(self.coeffs().iter().map(|c| c.mul_u_pow(k)).collect())
    }
}

/// Finite combination of power-sum monomials `p_mu` with `|mu| <= max_degree`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FockVector<R> {
    terms: BTreeMap<Partition, R>,
    max_degree: u32,
}

impl<R: Ring> FockVector<R> {
    pub fn zero(max_degree: u32) -> Self {
        FockVector { terms: BTreeMap::new(), max_degree }
    }

    pub fn vacuum(max_degree: u32) -> Self {
        Self::monomial(Partition::empty(), R::one(), max_degree)
    }

    pub fn monomial(mu: Partition, c: R, max_degree: u32) -> Self {
        let mut v = Self::zero(max_degree);
        v.add_term(mu, c);
        v
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &R)> {
        self.terms.iter()
    }

    pub fn get(&self, mu: &Partition) -> R {
        self.terms.get(mu).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c p_mu`; monomials above the degree bound are dropped.
    pub fn add_term(&mut self, mu: Partition, c: R) {
        if c.is_zero() || mu.size() > self.max_degree {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.max_degree = out.max_degree.min(rhs.max_degree);
        out.terms.retain(|mu, _| mu.size() <= out.max_degree);
        for (mu, c) in &rhs.terms {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.map_coeffs(|c| c.neg()))
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map_coeffs(|x| x.mul(c))
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> FockVector<S> {
        let mut out = FockVector::zero(self.max_degree);
        for (mu, c) in &self.terms {
            out.add_term(mu.clone(), f(c));
        }
        out
    }

    /// The degree-`n` component.
    pub fn homogeneous(&self, n: u32) -> Self {
        let mut out = Self::zero(self.max_degree);
        for (mu, c) in self.terms.iter().filter(|(mu, _)| mu.size() == n) {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }

    /// `beta_k`: multiplication by `p_{-k}` for `k < 0`, `k d/dp_k` for
    /// `k > 0`, zero for `k = 0`.
    pub fn beta(&self, k: i32) -> Self {
        let mut out = Self::zero(self.max_degree);
        if k < 0 {
            let p = Partition::row(k.unsigned_abs());
            for (mu, c) in &self.terms {
                out.add_term(mu.union(&p), c.clone());
            }
        } else if k > 0 {
            let k = k as u32;
            for (mu, c) in &self.terms {
                let m = mu.multiplicity(k);
                if let Some(rest) = mu.remove_part(k) {
                    out.add_term(rest, c.scale(&Rational::from((k * m) as i64)));
                }
            }
        }
        out
    }

    /// Product in the power-sum algebra, `p_mu p_nu = p_{mu + nu}`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.max_degree.min(rhs.max_degree));
        for (mu, a) in &self.terms {
            for (nu, b) in &rhs.terms {
                if mu.size() + nu.size() <= out.max_degree {
                    out.add_term(mu.union(nu), a.mul(b));
                }
            }
        }
        out
    }

    /// Logarithm in the power-sum algebra; the vacuum coefficient must be 1.
    pub fn log(&self) -> Result<Self, FockError> {
        if !self.get(&Partition::empty()).is_one() {
            return Err(FockError::LogConstantTerm);
        }
        let mut rest = self.clone();
        rest.terms.remove(&Partition::empty());
        let mut out = Self::zero(self.max_degree);
        let mut pow = rest.clone();
        let mut k = 1i64;
        while !pow.is_zero() {
            let c = Rational::new(if k % 2 == 1 { 1 } else { -1 }, k);
            out = out.add(&pow.map_coeffs(|x| x.scale(&c)));
            pow = pow.mul(&rest);
            k += 1;
        }
        Ok(out)
    }
}

/// Cut-and-join operator
/// `K = 1/2 sum_{i,j} (ij p_{i+j} d_i d_j + (i+j) p_i p_j d_{i+j})`.
pub fn cutjoin_apply<R: Ring>(v: &FockVector<R>) -> FockVector<R> {
    let mut out = FockVector::zero(v.max_degree());
    let half = Rational::new(1, 2);
    for (mu, c) in v.terms() {
        let mults = mu.multiplicities();
        // join: two parts i, j merge into i + j
        for &(i, mi) in &mults {
            for &(j, mj) in &mults {
                let pairs = if i == j { mi * (mi - 1) } else { mi * mj };
                if pairs == 0 {
                    continue;
                }
                let rest = mu.remove_part(i).and_then(|r| r.remove_part(j)).expect("parts present");
                let w = &Rational::from((i * j * pairs) as i64) * &half;
                out.add_term(rest.union(&Partition::row(i + j)), c.scale(&w));
            }
        }
        // cut: a part k splits into i + (k - i)
        for &(k, mk) in &mults {
            let rest = mu.remove_part(k).expect("part present");
            for i in 1..k {
                let w = &Rational::from((k * mk) as i64) * &half;
                let split = Partition::from_unsorted(vec![i, k - i]);
                out.add_term(rest.union(&split), c.scale(&w));
            }
        }
    }
    out
}

/// `q^{f K}`: on each homogeneous part, expands in Schur functions,
/// scales `s_nu` by `u^{f kappa_nu}` and converts back to power sums.
pub fn qk_apply<R: Ring + MulUPow>(v: &FockVector<R>, f: i64) -> FockVector<R> {
    if f == 0 {
        return v.clone();
    }
    let mut out = FockVector::zero(v.max_degree());
    let top = v.terms().map(|(mu, _)| mu.size()).max().unwrap_or(0);
    for d in 0..=top {
        let table = character_table(d);
        let parts = table.partitions();
        let coeffs: Vec<R> = parts.iter().map(|mu| v.get(mu)).collect();
        if coeffs.iter().all(Ring::is_zero) {
            continue;
        }
        // Schur coordinates: S_nu = sum_mu chi_nu(mu) v_mu
        let schur: Vec<R> = (0..parts.len())
            .map(|i| {
                let mut s = R::zero();
                for (j, c) in coeffs.iter().enumerate() {
                    let x = table.by_index(i, j);
                    if x != 0 && !c.is_zero() {
                        s = s.add(&c.scale(&Rational::from(x)));
                    }
                }
                s.mul_u_pow(f * parts[i].kappa())
            })
            .collect();
        for (j, lambda) in parts.iter().enumerate() {
            let zinv = lambda.z_aut().recip();
            let mut s = R::zero();
            for (i, c) in schur.iter().enumerate() {
                let x = table.by_index(i, j);
                if x != 0 && !c.is_zero() {
                    s = s.add(&c.scale(&Rational::from(x)));
                }
            }
            out.add_term(lambda.clone(), s.scale(&zinv));
        }
    }
    out
}

/// Pairs `v` with `<0| exp(sum_n p_n(x) beta_n / (n i))`.
///
/// Each `p_mu` contributes `prod_j p_{mu_j}(x)/i`; the returned map sends
/// `mu` to the coefficient of that product.
pub fn vacuum_pairing<R: Ring>(v: &FockVector<R>) -> BTreeMap<Partition, R> {
    v.terms().map(|(mu, c)| (mu.clone(), c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    type V = FockVector<Rational>;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn schur(mu: &Partition, max_degree: u32) -> V {
        let n = mu.size();
        let t = character_table(n);
        let mut v = V::zero(max_degree);
        for lambda in partitions_of(n) {
            v.add_term(lambda.clone(), &Rational::from(t.get(mu, &lambda)) / &lambda.z_aut());
        }
        v
    }

    #[test]
    fn cutjoin_small_cases() {
        let p1 = V::monomial(p(&[1]), Rational::one(), 4);
        assert!(cutjoin_apply(&p1).is_zero());
        let half = Rational::new(1, 2);
        let s2 = V::monomial(p(&[1, 1]), half.clone(), 4).add(&V::monomial(p(&[2]), half.clone(), 4));
        assert_eq!(cutjoin_apply(&s2), s2);
        let s11 = V::monomial(p(&[1, 1]), half.clone(), 4).add(&V::monomial(p(&[2]), -&half, 4));
        assert_eq!(cutjoin_apply(&s11), s11.scale(&Rational::from(-1)));
    }

    #[test]
    fn schur_eigenvalues() {
        for n in 0..=6 {
            for mu in partitions_of(n) {
                let s = schur(&mu, 6);
                assert_eq!(cutjoin_apply(&s), s.scale(&Rational::new(mu.kappa(), 2)), "{mu}");
            }
        }
    }

    fn all_monomials(max: u32, cap: u32) -> Vec<V> {
        (0..=max)
            .flat_map(partitions_of)
            .map(|mu| {
                let w = Rational::new(mu.size() as i64 + 1, mu.len() as i64 + 2);
                V::monomial(mu, w, cap)
            })
            .collect()
    }

    #[test]
    fn heisenberg_relations() {
        for v in all_monomials(5, 12) {
            for m in -5..=5i32 {
                for n in -5..=5i32 {
                    let lhs = v.beta(n).beta(m).sub(&v.beta(m).beta(n));
                    let expected = if m == -n { v.scale(&Rational::from(m as i64)) } else { V::zero(12) };
                    assert_eq!(lhs, expected, "m={m} n={n}");
                }
            }
        }
    }

    #[test]
    fn qk_on_p2() {
        type W = FockVector<RationalFunctionU>;
        let v = W::monomial(p(&[2]), RationalFunctionU::one(), 2);
        let out = qk_apply(&v, 1);
        let u2 = RationalFunctionU::from_laurent(LaurentU::u_pow(2));
        let um2 = RationalFunctionU::from_laurent(LaurentU::u_pow(-2));
        let half = Rational::new(1, 2);
        assert_eq!(out.get(&p(&[1, 1])), (&u2 - &um2).scale(&half));
        assert_eq!(out.get(&p(&[2])), (&u2 + &um2).scale(&half));
        let vac = W::vacuum(3);
        assert_eq!(qk_apply(&vac, 3), vac);
        let p1 = W::monomial(p(&[1]), RationalFunctionU::one(), 3);
        assert_eq!(qk_apply(&p1, 2), p1);
    }

    #[test]
    fn qk_composes_additively() {
        type W = FockVector<RationalFunctionU>;
        let mut v = W::zero(4);
        for (k, mu) in (0..=4).flat_map(partitions_of).enumerate() {
            v.add_term(mu, RationalFunctionU::from_rational(Rational::from(k as i64 + 1)));
        }
        assert_eq!(qk_apply(&qk_apply(&v, 1), 2), qk_apply(&v, 3));
        assert_eq!(qk_apply(&qk_apply(&v, 2), -2), v);
    }

    #[test]
    fn log_inverts_exponential() {
        // exp(c p_1) to degree 3, then log
        let c = Rational::new(3, 5);
        let mut v = V::zero(3);
        let mut term = Rational::one();
        for k in 0..=3u32 {
            v.add_term(Partition::from_unsorted(vec![1; k as usize]), term.clone());
            term = &(&term * &c) / &Rational::from(k as i64 + 1);
        }
        let l = v.log().unwrap();
        assert_eq!(l, V::monomial(p(&[1]), c, 3));
        assert!(V::zero(2).log().is_err());
    }

    #[test]
    fn pairing_is_coefficient_map() {
        let v = V::vacuum(2);
        assert_eq!(vacuum_pairing(&v).get(&Partition::empty()), Some(&Rational::one()));
    }
}
