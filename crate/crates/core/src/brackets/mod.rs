//! Higher derived Dorfman brackets generated by an inner derivation.
//!
//! Sections of `E` are represented by their images `χ_u ∈ A¹`. Everything
//! here is a finite combination of brackets and the projectors `P` and `W`.

mod derivation;
mod dorfman;
mod koszul;
mod loday;
mod section;

use thiserror::Error;

use crate::superalgebra::AlgebraError;

pub use derivation::{project_p, project_w, HamiltonianDerivation};
pub use dorfman::{courant, courant_polynomial, pairing_g};
pub use koszul::{koszul_sign, permutations, KoszulSign};
pub use loday::{LodayReport, LodayTerm};
pub use section::SectionExpr;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error("θ must be odd, got {0}")]
    ThetaNotOdd(String),
    #[error("θ must satisfy Pθ = 0, but has low-weight part {0}")]
    ThetaNotProjected(String),
    #[error("derived brackets need a symplectic chart")]
    NotSymplectic,
    #[error("at least one argument is required")]
    EmptyArguments,
    #[error("section image {0} is not of weight one")]
    NotWeightOne(String),
    #[error("section image {0} has the wrong parity")]
    ParityMismatch(String),
    #[error("{0} is not a function on the base")]
    NotBaseFunction(String),
    #[error("position {index} is out of range for {len} arguments")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("polarisation needs an even section")]
    OddDiagonal,
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
