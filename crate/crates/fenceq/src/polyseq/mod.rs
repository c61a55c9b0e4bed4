//! Exact polynomials in `q` and predicates on their coefficient sequences.

mod poly;
mod scalar;
mod seq;

pub use poly::{poly_add, poly_exact_div, poly_mul, Poly};
pub use scalar::Coeff;
pub use seq::{seq_report, SeqReport};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("coefficient of q^{index} is negative")]
    NegativeCoefficient { index: usize },
}
