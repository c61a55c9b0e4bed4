//! Triangulated polygons, arcs, flips, lamination curves and shear coordinates.

mod curve;
mod enumerate;
mod triangulation;

pub use curve::{
    all_single_curves, elementary_lamination, elementary_laminations, shear_vector, EdgePoint,
    LamCurve, MultiLamination,
};
pub use enumerate::{all_arcs, all_triangulations, catalan, random_triangulation};
pub use triangulation::{arcs_cross, Arc, PolygonTriangulation, TriangulationJson, MAX_VERTICES};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("polygon must have between 3 and {max} vertices, got {n}", max = MAX_VERTICES)]
    InvalidPolygon { n: usize },
    #[error("({a},{b}) is not an arc of the {n}-gon")]
    InvalidArc { a: usize, b: usize, n: usize },
    #[error("a triangulation of the {n}-gon needs {expected} diagonals, got {got}")]
    WrongDiagonalCount {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("diagonals {0} and {1} cross")]
    CrossingDiagonals(Arc, Arc),
    #[error("diagonal {0} listed twice")]
    DuplicateDiagonal(Arc),
    #[error("{0} is not a diagonal of the triangulation")]
    NotADiagonal(Arc),
    #[error("invalid lamination curve: {0}")]
    InvalidCurve(String),
}
