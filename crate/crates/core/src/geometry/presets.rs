use crate::brackets::HamiltonianDerivation;
use crate::superalgebra::{Chart, ChartKind, SuperPolynomial};

use super::{delta, lift_multivector, odd_chart, symplectic_chart, GeometryError, Multivector};

/// A ready-made `θ = Δ + K_P` together with the data it came from.
#[derive(Clone, Debug)]
pub struct Preset {
    pub name: &'static str,
    pub chart: Chart,
    pub multivector: Option<Multivector>,
    /// `K_P`, zero without a multivector.
    pub lift: SuperPolynomial,
    pub theta: SuperPolynomial,
}

impl Preset {
    /// `θ = Δ + K_P` on the symplectic chart over the base of `p`.
    pub fn from_multivector(name: &'static str, p: Multivector) -> Result<Self, GeometryError> {
        let odd = p.chart();
        let chart = Chart::new(ChartKind::Symplectic, odd.even_dim(), odd.odd_dim())?;
        let lift = lift_multivector(&p, &chart)?;
        let theta = delta(&chart)? + lift.clone();
        Ok(Preset {
            name,
            chart,
            multivector: Some(p),
            lift,
            theta,
        })
    }

    pub fn derivation(&self) -> HamiltonianDerivation {
        HamiltonianDerivation::new(self.chart.clone(), self.theta.clone())
            .expect("presets are odd with Pθ = 0")
    }

    /// `Δ` alone, for the Cartan operators on forms.
    pub fn delta(&self) -> SuperPolynomial {
        delta(&self.chart).expect("symplectic chart")
    }
}

/// `θ = Δ` on `R^dim`.
pub fn delta_preset(dim: u16) -> Result<Preset, GeometryError> {
    let chart = symplectic_chart(dim)?;
    let theta = delta(&chart)?;
    Ok(Preset {
        name: "delta",
        chart,
        multivector: None,
        lift: SuperPolynomial::zero(),
        theta,
    })
}

/// `P = x^1 x*_1 x*_2` on `R^2`.
pub fn bivector_preset() -> Result<Preset, GeometryError> {
    let odd = odd_chart(2)?;
    let p = Multivector::bivector(odd.clone(), &[(1, 2, odd.x(1))])?;
    Preset::from_multivector("bivector", p)
}

/// The Lie-Poisson structure of `so(3)`, `{x^1, x^2} = x^3` and cyclic.
pub fn so3_preset() -> Result<Preset, GeometryError> {
    let odd = odd_chart(3)?;
    let p = Multivector::bivector(
        odd.clone(),
        &[(1, 2, odd.x(3)), (2, 3, odd.x(1)), (1, 3, -odd.x(2))],
    )?;
    Preset::from_multivector("so3", p)
}

/// `P = x^4 x*_1 x*_2 x*_3` on `R^{3|1}`: the constant trivector of `R^3`
/// times the odd coordinate `x^4`, which makes it even.
pub fn trivector_preset() -> Result<Preset, GeometryError> {
    let odd = Chart::new(ChartKind::OddCotangent, 3, 1)?;
    let value = &(&(&odd.x(4) * &odd.xs(1)) * &odd.xs(2)) * &odd.xs(3);
    Preset::from_multivector("trivector", Multivector::new(odd, value)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::euler_first;

    #[test]
    fn presets_are_homological() {
        let all = [
            delta_preset(1).unwrap(),
            delta_preset(3).unwrap(),
            bivector_preset().unwrap(),
            so3_preset().unwrap(),
            trivector_preset().unwrap(),
        ];
        for p in &all {
            assert!(p.derivation().is_homological(), "{}", p.name);
            assert_eq!(euler_first(&p.lift), p.lift);
            if let Some(m) = &p.multivector {
                assert!(m.is_homotopy_poisson());
            }
        }
    }

    #[test]
    fn trivector_lift_has_weight_four() {
        let t = trivector_preset().unwrap();
        assert_eq!(t.lift.weights().into_iter().collect::<Vec<_>>(), vec![4]);
        assert_eq!(
            t.lift.bidegree_components().into_keys().collect::<Vec<_>>(),
            vec![(1, 3)]
        );
    }
}
