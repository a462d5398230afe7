//! Exact scalars, Laurent polynomials in `u = q^{1/2}`, rational functions
//! and truncated power series.

mod gaussian;
mod lambda;
mod laurent;
mod polygcd;
mod qnum;
mod qpoly;
mod ratfunc;
mod rational;
mod ring;
mod series;

pub use gaussian::GaussianRational;
pub use lambda::{lambda_expand, laurent_lambda_coeffs};
pub use laurent::LaurentU;
pub use qnum::{qbinomial, qbracket, qfactorial};
pub use qpoly::QPoly;
pub use ratfunc::RationalFunctionU;
pub use rational::{binomial, factorial, Rational};
pub use ring::Ring;
pub use series::{SeriesError, TruncatedSeries, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("invalid rational literal {0:?}")]
    Rational(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("{op} is undefined for negative argument {value}")]
    NegativeArgument { op: &'static str, value: i64 },
    #[error("denominator vanishes identically")]
    ZeroDenominator,
    #[error(transparent)]
    Series(#[from] SeriesError),
}
