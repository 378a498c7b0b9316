//! Exact moments, classical cumulants and free cumulants of the q-semicircular
//! and free Poisson laws, computed as integer polynomials along several
//! independent combinatorial routes so each identity can be machine-checked.

pub mod combinat;
pub mod exactpoly;
pub mod freepoisson;
pub mod graphs;
pub mod qsemicircular;
pub mod report;
pub mod verify;

use thiserror::Error;

pub use combinat::CombinatError;
pub use exactpoly::{IntPoly, PolyError};
pub use graphs::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Combinat(#[from] CombinatError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("odd cumulant k_{0} is nonzero")]
    OddCumulantNonzero(usize),
    #[error("series coefficient {0} is not an integer polynomial")]
    NonIntegral(usize),
    #[error("augmented matchings have overlapping ground sets")]
    OverlappingGroundSets,
    #[error("piece {0} is not a primitive augmented matching")]
    NotPrimitive(usize),
    #[error("order must be at least {min}, got {got}")]
    OrderTooSmall { min: usize, got: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
