//! Seed mutation with lamination coefficients under `x = 1`, `y = q`.

mod classify;
mod expansion;
mod instance;
mod seed;

pub use classify::{classify_flip_recurrence, Configuration, RecurrenceStep};
pub use expansion::{
    c_polynomial, c_polynomial_along, f_polynomial_q, flip_sequence_to_arc, plan_flips, FlipPlanner,
};
pub use instance::ArcInstance;
pub use seed::{principal_seed, seed_from, ExtendedSeed};

use thiserror::Error;

use crate::polyseq::PolyError;
use crate::surface::SurfaceError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClusterError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error("exchange relation: {0}")]
    Poly(#[from] PolyError),
    #[error("mutation index {index} out of range (width {width})")]
    IndexOutOfRange { index: usize, width: usize },
    #[error("expected a single lamination with a single curve")]
    NotSingleLamination,
    #[error("arc crosses {0} diagonals; at least 2 are needed")]
    TooFewCrossings(usize),
}
