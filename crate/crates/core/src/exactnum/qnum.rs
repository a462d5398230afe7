use super::{ExactError, LaurentU, RationalFunctionU};

/// `[n] = u^n - u^{-n}`.
pub fn qbracket(n: i64) -> LaurentU {
    LaurentU::one().mul_bracket(n)
}

/// `[n]! = [1][2]...[n]`, with `[0]! = 1`.
pub fn qfactorial(n: i64) -> Result<LaurentU, ExactError> {
    if n < 0 {
        return Err(ExactError::NegativeArgument { op: "qfactorial", value: n });
    }
    Ok((1..=n).fold(LaurentU::one(), |acc, k| acc.mul_bracket(k)))
}

/// `[n][n-1]...[n-j+1] / [j]!` for any integer `n`.
pub fn qbinomial(n: i64, j: u32) -> RationalFunctionU {
    let j = j as i64;
    let num: Vec<i64> = (0..j).map(|i| n - i).collect();
    let den: Vec<i64> = (1..=j).collect();
    RationalFunctionU::bracket_ratio(&num, &den)
}
