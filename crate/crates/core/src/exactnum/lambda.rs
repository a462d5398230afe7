use super::{ExactError, GaussianRational, LaurentU, Rational, RationalFunctionU, Ring, TruncatedSeries, Var};

/// Taylor coefficients of `l(e^{i lambda/2})` up to `lambda^k_max`.
///
/// The `lambda^k` coefficient is `i^k/k! * sum_e c_e (e/2)^k`.
pub fn laurent_lambda_coeffs(l: &LaurentU, k_max: usize) -> Vec<GaussianRational> {
    let terms: Vec<(Rational, Rational)> =
        l.terms().map(|(e, c)| (Rational::new(e, 2), c.clone())).collect();
    let mut powers: Vec<Rational> = terms.iter().map(|(_, c)| c.clone()).collect();
    let mut fact = Rational::one();
    let mut out = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        if k > 0 {
            fact = &fact * &Rational::from(k as i64);
            for (p, (h, _)) in powers.iter_mut().zip(&terms) {
                *p = &*p * h;
            }
        }
        let s: Rational = powers.iter().cloned().sum();
        out.push(GaussianRational::i_pow(k as i64).scale(&(&s / &fact)));
    }
    out
}

/// Expands `f(u)` at `u = e^{i lambda/2}` as a Laurent series in `lambda`,
/// keeping powers up to and including `lambda^order`.
pub fn lambda_expand(f: &RationalFunctionU, order: i32) -> Result<TruncatedSeries<GaussianRational>, ExactError> {
    let den = f.denom();
    if den.is_zero() {
        return Err(ExactError::ZeroDenominator);
    }
    // The vanishing order of den at u = 1 is at most its span.
    let probe = laurent_lambda_coeffs(den, den.span());
    let v = probe.iter().position(|c| !c.is_zero()).ok_or(ExactError::ZeroDenominator)?;
    let mut out = TruncatedSeries::zero(&[Var::Lambda], &[order]);
    let len = order as i64 + v as i64 + 1;
    if len <= 0 {
        return Ok(out);
    }
    let len = len as usize;
    let n = laurent_lambda_coeffs(f.numer(), len - 1);
    let d: Vec<GaussianRational> = laurent_lambda_coeffs(den, len - 1 + v)[v..].to_vec();
    let d0_inv = d[0].inverse().expect("leading coefficient is nonzero");
    let mut r: Vec<GaussianRational> = Vec::with_capacity(len);
    for j in 0..len {
        let mut acc = n[j].clone();
        for i in 1..=j {
            acc = acc.sub(&d[i].mul(&r[j - i]));
        }
        r.push(acc.mul(&d0_inv));
    }
    for (j, c) in r.into_iter().enumerate() {
        out.add_term(vec![j as i32 - v as i32], c);
    }
    Ok(out)
}
