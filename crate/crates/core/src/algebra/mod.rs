//! Exact arithmetic: polynomials in `s, t`, truncated power series with
//! square roots, Eulerian polynomials and gamma expansions.

mod eulerian;
mod gamma;
mod poly;
mod series;

use thiserror::Error;

pub use eulerian::{eulerian, eulerian_numbers};
pub use gamma::{gamma_expand, GammaExpansion};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
pub use poly::{rat, Exponent, MultiPoly};
pub use series::TruncSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by a series with zero constant term")]
    NonUnit,
    #[error("square root needs constant term 1, got {0}")]
    SqrtConstantTerm(String),
    #[error("series not divisible by {var}: nonzero s^{deg_s} t^{deg_t} term")]
    NotDivisible { var: char, deg_s: u32, deg_t: u32 },
    #[error("no precision left to extract a factor")]
    PrecisionExhausted,
    #[error("series known to order {order}, need at least {needed}")]
    PrecisionTooLow { order: usize, needed: usize },
    #[error(
        "nonzero residue at s^{deg_s} t^{deg_t}: truncation order too low or not a polynomial"
    )]
    Residue { deg_s: u32, deg_t: u32 },
    #[error("polynomial involves s where a polynomial in t alone was expected")]
    NotUnivariate,
    #[error("coefficient of s^{deg_s} t^{deg_t} is {coeff}, not an integer")]
    NonIntegral {
        deg_s: u32,
        deg_t: u32,
        coeff: String,
    },
    #[error("degree {degree} exceeds the expansion width {width}")]
    DegreeExceedsCenter { degree: usize, width: usize },
    #[error("coefficients are not symmetric about {width}/2 (t^{low} vs t^{high})")]
    NotSymmetric {
        width: usize,
        low: usize,
        high: usize,
    },
}
