use crate::superalgebra::{rational, Chart, ChartKind, Parity, SuperPolynomial};

use super::BracketError;

/// `P`: keeps the weight 0 and weight 1 terms.
pub fn project_p(f: &SuperPolynomial) -> SuperPolynomial {
    f.filter(|m| m.weight() <= 1)
}

/// `W`: keeps the weight 0 terms.
pub fn project_w(f: &SuperPolynomial) -> SuperPolynomial {
    f.weight_component(0)
}

/// The inner derivation `Q = [θ, -]` of an odd Hamiltonian with `Pθ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianDerivation {
    chart: Chart,
    theta: SuperPolynomial,
    half_square: SuperPolynomial,
}

impl HamiltonianDerivation {
    pub fn new(chart: Chart, theta: SuperPolynomial) -> Result<Self, BracketError> {
        if chart.kind() != ChartKind::Symplectic {
            return Err(BracketError::NotSymplectic);
        }
        chart.check(&theta)?;
        if theta.parity() != Some(Parity::Odd) && !theta.is_zero() {
            return Err(BracketError::ThetaNotOdd(theta.to_string()));
        }
        let low = project_p(&theta);
        if !low.is_zero() {
            return Err(BracketError::ThetaNotProjected(low.to_string()));
        }
        let half_square = chart.bracket(&theta, &theta).scale(&rational(1, 2));
        Ok(HamiltonianDerivation {
            chart,
            theta,
            half_square,
        })
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn theta(&self) -> &SuperPolynomial {
        &self.theta
    }

    /// `½[θ, θ]`, the Hamiltonian of `Q²`.
    pub fn half_square(&self) -> &SuperPolynomial {
        &self.half_square
    }

    pub fn is_homological(&self) -> bool {
        self.half_square.is_zero()
    }

    pub fn apply(&self, f: &SuperPolynomial) -> SuperPolynomial {
        self.chart.bracket(&self.theta, f)
    }

    pub fn try_apply(&self, f: &SuperPolynomial) -> Result<SuperPolynomial, BracketError> {
        Ok(self.chart.poisson_bracket(&self.theta, f)?)
    }

    /// `Q² f`, computed as `½[[θ,θ], f]`.
    pub fn apply_squared(&self, f: &SuperPolynomial) -> SuperPolynomial {
        self.chart.bracket(&self.half_square, f)
    }

    /// `[···[Q a₁, a₂], …, a_k]`.
    pub fn nested_bracket(
        &self,
        args: &[SuperPolynomial],
    ) -> Result<SuperPolynomial, BracketError> {
        if args.is_empty() {
            return Err(BracketError::EmptyArguments);
        }
        for a in args {
            self.chart.check(a)?;
        }
        Ok(args
            .iter()
            .fold(self.theta.clone(), |acc, a| self.chart.bracket(&acc, a)))
    }

    /// `Φ^k_Q = [···[Qξ, ξ], …, ξ]` with `k` copies of `ξ`; `Φ^0_Q = θ`.
    pub fn phi(&self, xi: &SuperPolynomial, k: usize) -> SuperPolynomial {
        (0..k).fold(self.theta.clone(), |acc, _| self.chart.bracket(&acc, xi))
    }

    /// The whole tower `Φ^0_Q, …, Φ^max_Q`.
    pub fn phi_tower(&self, xi: &SuperPolynomial, max: usize) -> Vec<SuperPolynomial> {
        let mut out = Vec::with_capacity(max + 1);
        out.push(self.theta.clone());
        for k in 0..max {
            let next = self.chart.bracket(&out[k], xi);
            out.push(next);
        }
        out
    }
}
