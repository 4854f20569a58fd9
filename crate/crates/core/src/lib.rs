//! Higher derived Dorfman brackets on a symplectic 2-manifold, computed
//! exactly over the rationals.

pub mod brackets;
pub mod combinatorics;
pub mod expr;
pub mod geometry;
pub mod random;
pub mod superalgebra;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
