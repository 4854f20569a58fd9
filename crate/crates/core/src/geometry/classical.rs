//! Cartan calculus on component arrays over an ordinary base `R^n`, written
//! without any Poisson bracket. Used as ground truth for the bracket-defined
//! operators.

use std::collections::BTreeMap;

use crate::superalgebra::{Chart, CoordKind, Coordinate, Monomial, SuperPolynomial};

use super::{GeometryError, Multivector};

fn coord(a: u16) -> Coordinate {
    Coordinate::new(CoordKind::Base, a, false)
}

/// `∂f/∂x^a` for a function of the base coordinates.
pub fn partial(f: &SuperPolynomial, a: u16) -> SuperPolynomial {
    f.derivative(coord(a))
}

fn ordinary(chart: &Chart) -> Result<(), GeometryError> {
    if chart.odd_dim() != 0 {
        return Err(GeometryError::KindMismatch("an ordinary base"));
    }
    Ok(())
}

/// Splits each term of `chi` into its base coefficient and its fibre part.
fn split_terms(
    chi: &SuperPolynomial,
    fibre: CoordKind,
) -> Result<Vec<(Vec<u16>, SuperPolynomial)>, GeometryError> {
    let mut out = Vec::new();
    for (m, c) in chi.terms() {
        let mut base = Vec::new();
        let mut idx = Vec::new();
        for &(z, e) in m.factors() {
            match z.kind {
                CoordKind::Base => base.push((z, e)),
                k if k == fibre => idx.push(z.index),
                _ => return Err(GeometryError::KindMismatch("a pure form or field")),
            }
        }
        let (_, bm) = Monomial::from_product(&base).expect("even base factors");
        out.push((idx, SuperPolynomial::monomial(bm, c.clone())));
    }
    Ok(out)
}

/// Sign of sorting `idx`, or `None` on a repeated index.
fn sort_sign(idx: &[u16]) -> Option<(bool, Vec<u16>)> {
    let mut v = idx.to_vec();
    let mut negative = false;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                negative = !negative;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((negative, v))
}

/// A k-form `Σ_{I increasing} ω_I dx^{I_1} ∧ ⋯ ∧ dx^{I_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalForm {
    dim: u16,
    degree: usize,
    comps: BTreeMap<Vec<u16>, SuperPolynomial>,
}

impl ClassicalForm {
    pub fn zero(dim: u16, degree: usize) -> Self {
        ClassicalForm {
            dim,
            degree,
            comps: BTreeMap::new(),
        }
    }

    pub fn function(dim: u16, f: SuperPolynomial) -> Self {
        let mut out = ClassicalForm::zero(dim, 0);
        out.add_component(&[], f);
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Adds `f dx^{idx}` with `idx` in any order.
    pub fn add_component(&mut self, idx: &[u16], f: SuperPolynomial) {
        assert_eq!(idx.len(), self.degree);
        assert!(idx.iter().all(|&a| a >= 1 && a <= self.dim));
        let Some((negative, sorted)) = sort_sign(idx) else {
            return;
        };
        let entry = self
            .comps
            .entry(sorted.clone())
            .or_insert_with(SuperPolynomial::zero);
        *entry += f.signed(negative);
        if entry.is_zero() {
            self.comps.remove(&sorted);
        }
    }

    /// `ω(∂_{idx_1}, …, ∂_{idx_k})`, antisymmetric in the indices.
    pub fn component(&self, idx: &[u16]) -> SuperPolynomial {
        match sort_sign(idx) {
            None => SuperPolynomial::zero(),
            Some((negative, sorted)) => self
                .comps
                .get(&sorted)
                .cloned()
                .unwrap_or_else(SuperPolynomial::zero)
                .signed(negative),
        }
    }

    pub fn add(&self, other: &ClassicalForm) -> ClassicalForm {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (i, f) in &other.comps {
            out.add_component(i, f.clone());
        }
        out
    }

    pub fn scale(&self, f: &SuperPolynomial) -> ClassicalForm {
        let mut out = ClassicalForm::zero(self.dim, self.degree);
        for (i, g) in &self.comps {
            out.add_component(i, f * g);
        }
        out
    }

    pub fn d(&self) -> ClassicalForm {
        let mut out = ClassicalForm::zero(self.dim, self.degree + 1);
        for (i, f) in &self.comps {
            for a in 1..=self.dim {
                let mut idx = vec![a];
                idx.extend_from_slice(i);
                out.add_component(&idx, partial(f, a));
            }
        }
        out
    }

    /// `ι_X ω`, contracting the first slot.
    pub fn interior(&self, x: &VectorField) -> ClassicalForm {
        if self.degree == 0 {
            return ClassicalForm::zero(self.dim, 0);
        }
        let mut out = ClassicalForm::zero(self.dim, self.degree - 1);
        for (i, f) in &self.comps {
            for (p, &a) in i.iter().enumerate() {
                let mut rest = i.clone();
                rest.remove(p);
                out.add_component(&rest, (&x.comps[a as usize - 1] * f).signed(p % 2 == 1));
            }
        }
        out
    }

    /// `(L_X ω)_I = X^a ∂_a ω_I + Σ_p ∂_{I_p} X^a ω_{I_1 … a … I_k}`.
    pub fn lie(&self, x: &VectorField) -> ClassicalForm {
        let mut out = ClassicalForm::zero(self.dim, self.degree);
        for idx in increasing_tuples(self.dim, self.degree) {
            let mut acc = x.apply(&self.component(&idx));
            for p in 0..idx.len() {
                for a in 1..=self.dim {
                    let mut moved = idx.clone();
                    moved[p] = a;
                    acc += &partial(&x.comps[a as usize - 1], idx[p]) * &self.component(&moved);
                }
            }
            out.add_component(&idx, acc);
        }
        out
    }

    pub fn wedge(&self, other: &ClassicalForm) -> ClassicalForm {
        let mut out = ClassicalForm::zero(self.dim, self.degree + other.degree);
        for (i, f) in &self.comps {
            for (j, g) in &other.comps {
                let mut idx = i.clone();
                idx.extend_from_slice(j);
                out.add_component(&idx, f * g);
            }
        }
        out
    }

    /// `χ(ω) = Σ ω_I ξ^{I_1} ⋯ ξ^{I_k}`.
    pub fn to_chi(&self, chart: &Chart) -> Result<SuperPolynomial, GeometryError> {
        ordinary(chart)?;
        Ok(self
            .comps
            .iter()
            .fold(SuperPolynomial::zero(), |acc, (i, f)| {
                acc + i.iter().fold(f.clone(), |m, &a| &m * &chart.xi(a))
            }))
    }

    pub fn from_chi(
        chart: &Chart,
        chi: &SuperPolynomial,
        degree: usize,
    ) -> Result<Self, GeometryError> {
        ordinary(chart)?;
        let mut out = ClassicalForm::zero(chart.base_dim(), degree);
        for (idx, f) in split_terms(chi, CoordKind::FiberOdd1)? {
            if idx.len() != degree {
                return Err(GeometryError::KindMismatch("a form of the given degree"));
            }
            out.add_component(&idx, f);
        }
        Ok(out)
    }
}

fn increasing_tuples(dim: u16, k: usize) -> Vec<Vec<u16>> {
    use itertools::Itertools;
    (1..=dim).combinations(k).collect()
}

/// A vector field `X^a ∂_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    comps: Vec<SuperPolynomial>,
}

impl VectorField {
    pub fn new(comps: Vec<SuperPolynomial>) -> Self {
        VectorField { comps }
    }

    pub fn components(&self) -> &[SuperPolynomial] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn apply(&self, f: &SuperPolynomial) -> SuperPolynomial {
        self.comps
            .iter()
            .enumerate()
            .fold(SuperPolynomial::zero(), |acc, (a, xa)| {
                acc + xa * &partial(f, a as u16 + 1)
            })
    }

    /// `[X, Y]^b = X(Y^b) - Y(X^b)`.
    pub fn commutator(&self, other: &VectorField) -> VectorField {
        VectorField::new(
            self.comps
                .iter()
                .zip(&other.comps)
                .map(|(xb, yb)| self.apply(yb) - other.apply(xb))
                .collect(),
        )
    }

    pub fn add(&self, other: &VectorField) -> VectorField {
        VectorField::new(
            self.comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn to_chi(&self, chart: &Chart) -> Result<SuperPolynomial, GeometryError> {
        ordinary(chart)?;
        Ok(self
            .comps
            .iter()
            .enumerate()
            .fold(SuperPolynomial::zero(), |acc, (a, xa)| {
                acc + xa * &chart.pi(a as u16 + 1)
            }))
    }

    pub fn from_chi(chart: &Chart, chi: &SuperPolynomial) -> Result<Self, GeometryError> {
        ordinary(chart)?;
        let mut comps = vec![SuperPolynomial::zero(); chart.base_dim() as usize];
        for (idx, f) in split_terms(chi, CoordKind::FiberOdd2)? {
            match idx.as_slice() {
                [a] => comps[*a as usize - 1] += f,
                _ => return Err(GeometryError::KindMismatch("a vector field")),
            }
        }
        Ok(VectorField::new(comps))
    }
}

/// An antisymmetric `P^{ab}`, stored for `a < b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalBivector {
    dim: u16,
    upper: BTreeMap<(u16, u16), SuperPolynomial>,
}

impl ClassicalBivector {
    /// Reads `P = Σ_{a<b} P^{ab} x*_a x*_b` off a multivector on an ordinary base.
    pub fn from_multivector(p: &Multivector) -> Result<Self, GeometryError> {
        ordinary(p.chart())?;
        let mut upper = BTreeMap::new();
        for (idx, f) in split_terms(p.value(), CoordKind::AntiMomentum)? {
            match idx.as_slice() {
                [a, b] => {
                    let e = upper.entry((*a, *b)).or_insert_with(SuperPolynomial::zero);
                    *e += f;
                }
                _ => return Err(GeometryError::KindMismatch("a bivector")),
            }
        }
        Ok(ClassicalBivector {
            dim: p.chart().base_dim(),
            upper,
        })
    }

    pub fn entry(&self, a: u16, b: u16) -> SuperPolynomial {
        use std::cmp::Ordering::*;
        let get = |a, b| {
            self.upper
                .get(&(a, b))
                .cloned()
                .unwrap_or_else(SuperPolynomial::zero)
        };
        match a.cmp(&b) {
            Less => get(a, b),
            Greater => -get(b, a),
            Equal => SuperPolynomial::zero(),
        }
    }

    /// `{f, g} = P^{ab} ∂_a f ∂_b g`.
    pub fn poisson(&self, f: &SuperPolynomial, g: &SuperPolynomial) -> SuperPolynomial {
        let mut acc = SuperPolynomial::zero();
        for a in 1..=self.dim {
            for b in 1..=self.dim {
                acc += &(&self.entry(a, b) * &partial(f, a)) * &partial(g, b);
            }
        }
        acc
    }

    /// `(P♯α)^b = P^{ab} α_a`.
    pub fn sharp(&self, alpha: &ClassicalForm) -> VectorField {
        assert_eq!(alpha.degree(), 1);
        VectorField::new(
            (1..=self.dim)
                .map(|b| {
                    (1..=self.dim).fold(SuperPolynomial::zero(), |acc, a| {
                        acc + &self.entry(a, b) * &alpha.component(&[a])
                    })
                })
                .collect(),
        )
    }

    /// `P(α, β) = P^{ab} α_a β_b`.
    pub fn pair(&self, alpha: &ClassicalForm, beta: &ClassicalForm) -> SuperPolynomial {
        self.sharp(alpha)
            .components()
            .iter()
            .enumerate()
            .fold(SuperPolynomial::zero(), |acc, (b, v)| {
                acc + v * &beta.component(&[b as u16 + 1])
            })
    }

    /// `[α, β]_P = L_{P♯α} β - L_{P♯β} α - d P(α, β)` on 1-forms.
    pub fn koszul(&self, alpha: &ClassicalForm, beta: &ClassicalForm) -> ClassicalForm {
        let first = beta.lie(&self.sharp(alpha));
        let second = alpha
            .lie(&self.sharp(beta))
            .scale(&SuperPolynomial::int(-1));
        let third = ClassicalForm::function(self.dim, -self.pair(alpha, beta)).d();
        first.add(&second).add(&third)
    }
}
