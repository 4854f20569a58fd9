//! Exact sparse super-polynomials over a Darboux chart.
//!
//! Elements are polynomials in the chart coordinates with `BigRational`
//! coefficients. Products carry Koszul signs, derivatives act from the left,
//! and [`Chart::bracket`] is the canonical even (symplectic) or odd
//! (Schouten) Poisson bracket. The sign convention for both brackets is
//! documented once, on [`Chart`].

mod chart;
mod coordinate;
mod monomial;
mod polynomial;

use thiserror::Error;

pub use chart::{Chart, ChartKind};
pub use coordinate::{CoordKind, Coordinate, Parity};
pub use monomial::Monomial;
pub use polynomial::{integer, rational, Rational, SuperPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("coordinate {coordinate} does not belong to {chart}")]
    ChartMismatch { coordinate: String, chart: String },
    #[error("a chart needs at least one base direction")]
    EmptyChart,
}
