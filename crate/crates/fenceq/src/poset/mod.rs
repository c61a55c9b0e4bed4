//! Fence-type posets, order-ideal rank counting and poset surgery.

mod build;
mod composition;
mod decompose;
mod finite;
mod rank;

pub use build::{circular_fence, fence, ij_fence, notched, Notch};
pub use composition::Composition;
pub use decompose::{check_notched_decompositions, DecompositionReport};
pub use finite::{FinitePoset, PosetJson, MAX_ELEMENTS};
pub use rank::{
    rank_sequence, rank_sequence_bounded, rank_sequence_fence_fast, DEFAULT_RANK_BOUND,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("relation {below} < {above} would create a cycle")]
    CycleCreated { below: String, above: String },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: i64, max: usize },
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("{0} < {1} is not a cover relation")]
    UnknownCover(String, String),
    #[error("poset has {size} elements, bound is {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("decomposition is degenerate for {0}: the notch loop reaches x1")]
    DegenerateDecomposition(String),
}
