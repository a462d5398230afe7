use std::collections::HashMap;

use crate::exactnum::{RationalFunctionU, Ring};

use super::FockError;

/// A product `prefactor * E_{r_1}(c_1 i lambda) ... E_{r_k}(c_k i lambda)`.
///
/// Arguments are integer multiples of `i lambda`, so every `varsigma` value
/// that appears is a quantum bracket: `varsigma(c i lambda) = [c]`.
#[derive(Clone, Debug, PartialEq)]
pub struct EWord {
    pub factors: Vec<(i64, i64)>,
    pub prefactor: RationalFunctionU,
}

impl EWord {
    pub fn new(factors: Vec<(i64, i64)>) -> Self {
        EWord { factors, prefactor: RationalFunctionU::one() }
    }

    /// `beta_n E_{r_1}(c_1) ...`, using `beta_n = E_n(0)`.
    pub fn beta_prefixed(n: i64, factors: &[(i64, i64)]) -> Self {
        let mut all = vec![(n, 0)];
        all.extend_from_slice(factors);
        Self::new(all)
    }

    pub fn weight(&self) -> i64 {
        self.factors.iter().map(|f| f.0).sum()
    }
}

type Memo = HashMap<Vec<(i64, i64)>, RationalFunctionU>;

fn reduce(word: &[(i64, i64)], memo: &mut Memo) -> Result<RationalFunctionU, FockError> {
    if word.iter().map(|f| f.0).sum::<i64>() != 0 {
        return Ok(RationalFunctionU::zero());
    }
    match (word.first(), word.last()) {
        (None, _) => return Ok(RationalFunctionU::one()),
        (Some(f), _) if f.0 < 0 => return Ok(RationalFunctionU::zero()),
        (_, Some(l)) if l.0 > 0 => return Ok(RationalFunctionU::zero()),
        _ => {}
    }
    if let Some(v) = memo.get(word) {
        return Ok(v.clone());
    }
    let value = match word.windows(2).position(|w| w[0].0 > 0 && w[1].0 <= 0) {
        None => {
            // Only E_0 factors remain; each acts on the vacuum by 1/[c].
            let args: Vec<i64> = word.iter().map(|f| f.1).collect();
            if args.contains(&0) {
                return Err(FockError::SingularArgument);
            }
            RationalFunctionU::bracket_ratio(&[], &args)
        }
        Some(i) => {
            // E_a(z) E_b(w) = E_b(w) E_a(z) + [a w - b z] E_{a+b}(z + w)
            let (a, z) = word[i];
            let (b, w) = word[i + 1];
            let mut swapped = word.to_vec();
            swapped.swap(i, i + 1);
            let mut merged = word[..i].to_vec();
            merged.push((a + b, z + w));
            merged.extend_from_slice(&word[i + 2..]);
            let c = a * w - b * z;
            let mut v = reduce(&swapped, memo)?;
            if c != 0 {
                let m = reduce(&merged, memo)?;
                if !m.is_zero() {
                    v = v.add(&m.mul(&RationalFunctionU::bracket(c)));
                }
            }
            v
        }
    };
    memo.insert(word.to_vec(), value.clone());
    Ok(value)
}

/// Vacuum expectation of an E-word, by repeated commutation of the first
/// positive-weight factor past its right neighbour.
pub fn correlator_reduce(w: &EWord) -> Result<RationalFunctionU, FockError> {
    let v = reduce(&w.factors, &mut Memo::new())?;
    Ok(v.mul(&w.prefactor))
}

/// Closed form of `<beta_n E_{-m_1}(a_1) ... E_{-m_l}(a_l)>`:
/// `prod_j [d_j] / [a_1 + ... + a_l]` with `d_1 = n a_1` and
/// `d_j = (n - m_1 - ... - m_{j-1}) a_j + m_j (a_1 + ... + a_{j-1})`.
pub fn correlator_closed(n: u32, m: &[u32], a: &[i64]) -> Result<RationalFunctionU, FockError> {
    if m.len() != a.len() {
        return Err(FockError::LengthMismatch(m.len(), a.len()));
    }
    if m.contains(&0) {
        return Err(FockError::ZeroWeight);
    }
    let total: u32 = m.iter().sum();
    if total != n {
        return Err(FockError::SumMismatch { expected: n, got: total });
    }
    let sum_a: i64 = a.iter().sum();
    if sum_a == 0 {
        return Err(FockError::SingularArgument);
    }
    let mut d = Vec::with_capacity(m.len());
    let (mut m_before, mut a_before) = (0i64, 0i64);
    for (&mj, &aj) in m.iter().zip(a) {
        let mj = mj as i64;
        d.push((n as i64 - m_before) * aj + mj * a_before);
        m_before += mj;
        a_before += aj;
    }
    Ok(RationalFunctionU::bracket_ratio(&d, &[sum_a]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_factor() {
        for n in 1..5 {
            for c in 1..4 {
                let w = EWord::beta_prefixed(n, &[(-n, c)]);
                let expected = RationalFunctionU::bracket_ratio(&[n * c], &[c]);
                assert_eq!(correlator_reduce(&w).unwrap(), expected);
                assert_eq!(correlator_closed(n as u32, &[n as u32], &[c]).unwrap(), expected);
            }
        }
        assert_eq!(correlator_closed(1, &[1], &[1]).unwrap(), RationalFunctionU::one());
    }

    #[test]
    fn vanishing_rules() {
        assert!(correlator_reduce(&EWord::new(vec![(-1, 1), (1, 1)])).unwrap().is_zero());
        assert!(correlator_reduce(&EWord::new(vec![(2, 0), (-1, 1)])).unwrap().is_zero());
        assert!(correlator_reduce(&EWord::new(vec![(1, 0), (-2, 1), (1, 3)])).unwrap().is_zero());
    }

    #[test]
    fn two_factor_word_by_hand() {
        // <E_2(0) E_{-1}(c1) E_{-1}(c2)> = [2 c1] after one merge, one
        // more merge and the E_0 vacuum value.
        for c1 in 1..4 {
            for c2 in 1..4 {
                let w = EWord::beta_prefixed(2, &[(-1, c1), (-1, c2)]);
                let got = correlator_reduce(&w).unwrap();
                assert_eq!(got, RationalFunctionU::bracket(2 * c1));
                assert_eq!(got, correlator_closed(2, &[1, 1], &[c1, c2]).unwrap());
            }
        }
    }

    #[test]
    fn zero_weight_words() {
        let w = EWord::new(vec![(0, 2), (0, 3)]);
        assert_eq!(correlator_reduce(&w).unwrap(), RationalFunctionU::bracket_ratio(&[], &[2, 3]));
        assert!(correlator_reduce(&EWord::new(vec![(0, 0)])).is_err());
    }

    #[test]
    fn closed_form_argument_checks() {
        assert!(correlator_closed(3, &[1, 1], &[1, 1]).is_err());
        assert!(correlator_closed(2, &[2], &[1, 1]).is_err());
        assert!(correlator_closed(2, &[2, 0], &[1, 1]).is_err());
    }
}
