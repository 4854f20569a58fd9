//! The tangent-plus-cotangent example: `T*ΠTM`, the de Rham Hamiltonian
//! `Δ`, homotopy Poisson multivectors on `ΠT*M` and their lifts `K_P`.

mod cartan;
pub mod classical;
mod poisson;
mod presets;
mod proposition;

use thiserror::Error;

use crate::brackets::BracketError;
use crate::superalgebra::{AlgebraError, Chart, ChartKind, CoordKind, Parity, SuperPolynomial};

pub use cartan::{cartan, CartanOp, FormOrField, TensorKind};
pub use poisson::{higher_poisson_bracket, poisson_jacobiator, raw_poisson_bracket};
pub use presets::{bivector_preset, delta_preset, so3_preset, trivector_preset, Preset};
pub use proposition::{proposition_oracle, Slot};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("dimension must be at least one")]
    ZeroDimension,
    #[error("expected a {expected:?} chart")]
    WrongChart { expected: ChartKind },
    #[error("a multivector lifts only when even, got {0}")]
    OddMultivector(String),
    #[error("{0} is not parity homogeneous")]
    Inhomogeneous(String),
    #[error("{0} is not a function on the base")]
    NotBaseFunction(String),
    #[error("argument kinds do not fit {0}")]
    KindMismatch(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
}

/// `T*ΠTM` over `R^dim`, coordinates `x, ξ, π, p` of weights `0, 1, 1, 2`.
pub fn symplectic_chart(dim: u16) -> Result<Chart, GeometryError> {
    if dim == 0 {
        return Err(GeometryError::ZeroDimension);
    }
    Ok(Chart::symplectic(dim)?)
}

/// `ΠT*M` over `R^dim`, coordinates `x, x*`.
pub fn odd_chart(dim: u16) -> Result<Chart, GeometryError> {
    if dim == 0 {
        return Err(GeometryError::ZeroDimension);
    }
    Ok(Chart::odd_cotangent(dim)?)
}

/// `Δ = Σ_a ξ^a p_a`, the Hamiltonian of the de Rham differential.
pub fn delta(chart: &Chart) -> Result<SuperPolynomial, GeometryError> {
    if chart.kind() != ChartKind::Symplectic {
        return Err(GeometryError::WrongChart {
            expected: ChartKind::Symplectic,
        });
    }
    Ok(
        (1..=chart.base_dim()).fold(SuperPolynomial::zero(), |acc, a| {
            acc + &chart.xi(a) * &chart.p(a)
        }),
    )
}

/// The Euler field `ε₁ = p ∂_p + ξ ∂_ξ` applied to `f`.
pub fn euler_first(f: &SuperPolynomial) -> SuperPolynomial {
    f.bidegree_components()
        .into_iter()
        .fold(SuperPolynomial::zero(), |acc, ((e1, _), part)| {
            acc + part.scale_int(e1 as i64)
        })
}

/// A multivector field on `ΠT*M`, held as a function of `x, x*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multivector {
    chart: Chart,
    value: SuperPolynomial,
}

impl Multivector {
    pub fn new(chart: Chart, value: SuperPolynomial) -> Result<Self, GeometryError> {
        if chart.kind() != ChartKind::OddCotangent {
            return Err(GeometryError::WrongChart {
                expected: ChartKind::OddCotangent,
            });
        }
        chart.check(&value)?;
        if value.parity().is_none() {
            return Err(GeometryError::Inhomogeneous(value.to_string()));
        }
        Ok(Multivector { chart, value })
    }

    /// `Σ_{a<b} P^{ab} x*_a x*_b` from the upper triangle `(a, b, P^{ab})`.
    pub fn bivector(
        chart: Chart,
        entries: &[(u16, u16, SuperPolynomial)],
    ) -> Result<Self, GeometryError> {
        let value = entries
            .iter()
            .fold(SuperPolynomial::zero(), |acc, (a, b, f)| {
                acc + &(f * &chart.xs(*a)) * &chart.xs(*b)
            });
        Multivector::new(chart, value)
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn value(&self) -> &SuperPolynomial {
        &self.value
    }

    pub fn parity(&self) -> Parity {
        self.value.parity().unwrap_or(Parity::Even)
    }

    /// `[P, P]` under the Schouten bracket.
    pub fn self_bracket(&self) -> SuperPolynomial {
        self.chart.bracket(&self.value, &self.value)
    }

    pub fn is_homotopy_poisson(&self) -> bool {
        self.self_bracket().is_zero()
    }

    /// The same function read on `T*ΠTM` with `x* ↦ π`.
    pub fn transported(&self, target: &Chart) -> Result<SuperPolynomial, GeometryError> {
        if target.kind() != ChartKind::Symplectic {
            return Err(GeometryError::WrongChart {
                expected: ChartKind::Symplectic,
            });
        }
        if target.even_dim() != self.chart.even_dim() || target.odd_dim() != self.chart.odd_dim() {
            return Err(GeometryError::KindMismatch("a chart over the same base"));
        }
        Ok(self.value.substitute(|c| match c.kind {
            CoordKind::AntiMomentum => target
                .coordinate(CoordKind::FiberOdd2, c.index)
                .map(SuperPolynomial::var),
            CoordKind::Base => target
                .coordinate(CoordKind::Base, c.index)
                .map(SuperPolynomial::var),
            _ => None,
        }))
    }
}

/// The Hamiltonian `K_P = -[Δ, P̂]` of the higher Koszul brackets, where `P̂`
/// is `P` transported by `x* ↦ π`. In coordinates
/// `K_P = -(∂P̂/∂π_a) p_a - ξ^a ∂P̂/∂x^a` on an ordinary base.
pub fn lift_multivector(p: &Multivector, target: &Chart) -> Result<SuperPolynomial, GeometryError> {
    if p.parity().is_odd() {
        return Err(GeometryError::OddMultivector(p.value().to_string()));
    }
    let hat = p.transported(target)?;
    Ok(-target.bracket(&delta(target)?, &hat))
}
