use std::fmt;

use super::coordinate::{CoordKind, Coordinate, Parity};
use super::polynomial::SuperPolynomial;
use super::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChartKind {
    /// T*ΠTM with coordinates x, ξ, π, p and the even weight −2 bracket.
    Symplectic,
    /// ΠT*M with coordinates x, x* and the odd (Schouten) bracket.
    OddCotangent,
}

/// A Darboux super chart.
///
/// Base directions `1..=even_dim` are even; `even_dim+1..=even_dim+odd_dim`
/// are odd, which shifts the parity of every coordinate attached to them.
///
/// # Bracket convention
///
/// With left derivatives throughout, the bracket is
///
/// ```text
/// [f, g] = Σ_{(i,j)} (-1)^{z̃_i (f̃ + 1)} ω^{ij} ∂_i f ∂_j g
/// ```
///
/// where the sum runs over ordered conjugate pairs. For each pair one entry is
/// fixed to `+1`: `ω^{p x} = 1`, `ω^{ξ π} = 1` on the symplectic chart and
/// `ω^{x* x} = 1` on the odd chart. The transposed entry is then forced by
/// graded antisymmetry, `ω^{ji} = -(-1)^{(z̃_i + b)(z̃_j + b)} ω^{ij}` with `b`
/// the bracket parity. On an ordinary base this gives
/// `[p_a, x^b] = δ`, `[ξ^a, π_b] = [π_b, ξ^a] = δ` and `[x*_a, x^b] = δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chart {
    kind: ChartKind,
    even_dim: u16,
    odd_dim: u16,
    omega: Vec<(Coordinate, Coordinate, bool)>,
}

impl Chart {
    pub fn new(kind: ChartKind, even_dim: u16, odd_dim: u16) -> Result<Self, AlgebraError> {
        if even_dim + odd_dim == 0 {
            return Err(AlgebraError::EmptyChart);
        }
        let mut chart = Chart {
            kind,
            even_dim,
            odd_dim,
            omega: Vec::new(),
        };
        chart.omega = chart.build_omega();
        Ok(chart)
    }

    pub fn symplectic(dim: u16) -> Result<Self, AlgebraError> {
        Chart::new(ChartKind::Symplectic, dim, 0)
    }

    pub fn odd_cotangent(dim: u16) -> Result<Self, AlgebraError> {
        Chart::new(ChartKind::OddCotangent, dim, 0)
    }

    pub fn kind(&self) -> ChartKind {
        self.kind
    }

    pub fn even_dim(&self) -> u16 {
        self.even_dim
    }

    pub fn odd_dim(&self) -> u16 {
        self.odd_dim
    }

    pub fn base_dim(&self) -> u16 {
        self.even_dim + self.odd_dim
    }

    /// The chart of the same base with the other bracket.
    pub fn partner(&self) -> Chart {
        let kind = match self.kind {
            ChartKind::Symplectic => ChartKind::OddCotangent,
            ChartKind::OddCotangent => ChartKind::Symplectic,
        };
        Chart::new(kind, self.even_dim, self.odd_dim).expect("non-empty base")
    }

    pub fn bracket_parity(&self) -> Parity {
        match self.kind {
            ChartKind::Symplectic => Parity::Even,
            ChartKind::OddCotangent => Parity::Odd,
        }
    }

    pub fn bracket_weight(&self) -> i32 {
        match self.kind {
            ChartKind::Symplectic => -2,
            ChartKind::OddCotangent => -1,
        }
    }

    pub fn kinds(&self) -> &'static [CoordKind] {
        match self.kind {
            ChartKind::Symplectic => &[
                CoordKind::Base,
                CoordKind::FiberOdd1,
                CoordKind::FiberOdd2,
                CoordKind::Momentum,
            ],
            ChartKind::OddCotangent => &[CoordKind::Base, CoordKind::AntiMomentum],
        }
    }

    pub fn is_odd_direction(&self, index: u16) -> bool {
        index > self.even_dim
    }

    /// Coordinate of the given kind over base direction `index`, if it exists.
    pub fn coordinate(&self, kind: CoordKind, index: u16) -> Option<Coordinate> {
        (self.kinds().contains(&kind) && index >= 1 && index <= self.base_dim())
            .then(|| Coordinate::new(kind, index, self.is_odd_direction(index)))
    }

    fn expect(&self, kind: CoordKind, index: u16) -> SuperPolynomial {
        let c = self
            .coordinate(kind, index)
            .unwrap_or_else(|| panic!("{}{} is not a coordinate of {self}", kind.prefix(), index));
        SuperPolynomial::var(c)
    }

    /// `x^a` as a polynomial; panics if out of range.
    pub fn x(&self, a: u16) -> SuperPolynomial {
        self.expect(CoordKind::Base, a)
    }
    pub fn xi(&self, a: u16) -> SuperPolynomial {
        self.expect(CoordKind::FiberOdd1, a)
    }
    pub fn pi(&self, a: u16) -> SuperPolynomial {
        self.expect(CoordKind::FiberOdd2, a)
    }
    pub fn p(&self, a: u16) -> SuperPolynomial {
        self.expect(CoordKind::Momentum, a)
    }
    pub fn xs(&self, a: u16) -> SuperPolynomial {
        self.expect(CoordKind::AntiMomentum, a)
    }

    pub fn coordinates(&self) -> Vec<Coordinate> {
        let mut out = Vec::new();
        for &kind in self.kinds() {
            for a in 1..=self.base_dim() {
                out.push(self.coordinate(kind, a).unwrap());
            }
        }
        out
    }

    pub fn base_coordinates(&self) -> Vec<Coordinate> {
        (1..=self.base_dim())
            .map(|a| self.coordinate(CoordKind::Base, a).unwrap())
            .collect()
    }

    /// The Darboux partner of a coordinate.
    pub fn conjugate(&self, c: Coordinate) -> Option<Coordinate> {
        if !self.contains(c) {
            return None;
        }
        let kind = match (self.kind, c.kind) {
            (ChartKind::Symplectic, CoordKind::Base) => CoordKind::Momentum,
            (ChartKind::Symplectic, CoordKind::Momentum) => CoordKind::Base,
            (ChartKind::Symplectic, CoordKind::FiberOdd1) => CoordKind::FiberOdd2,
            (ChartKind::Symplectic, CoordKind::FiberOdd2) => CoordKind::FiberOdd1,
            (ChartKind::OddCotangent, CoordKind::Base) => CoordKind::AntiMomentum,
            (ChartKind::OddCotangent, CoordKind::AntiMomentum) => CoordKind::Base,
            _ => return None,
        };
        self.coordinate(kind, c.index)
    }

    pub fn contains(&self, c: Coordinate) -> bool {
        self.coordinate(c.kind, c.index) == Some(c)
    }

    pub fn check(&self, f: &SuperPolynomial) -> Result<(), AlgebraError> {
        match f.coordinates().into_iter().find(|c| !self.contains(*c)) {
            Some(c) => Err(AlgebraError::ChartMismatch {
                coordinate: c.name(),
                chart: self.to_string(),
            }),
            None => Ok(()),
        }
    }

    fn build_omega(&self) -> Vec<(Coordinate, Coordinate, bool)> {
        let b = self.bracket_parity();
        let lead: &[(CoordKind, CoordKind)] = match self.kind {
            ChartKind::Symplectic => &[
                (CoordKind::Momentum, CoordKind::Base),
                (CoordKind::FiberOdd1, CoordKind::FiberOdd2),
            ],
            ChartKind::OddCotangent => &[(CoordKind::AntiMomentum, CoordKind::Base)],
        };
        let mut out = Vec::new();
        for a in 1..=self.base_dim() {
            for &(ki, kj) in lead {
                let i = self.coordinate(ki, a).unwrap();
                let j = self.coordinate(kj, a).unwrap();
                out.push((i, j, false));
                // ω^{ji} = -(-1)^{(z̃_i + b)(z̃_j + b)} ω^{ij}
                let twist = (i.parity() + b).times(j.parity() + b);
                out.push((j, i, !twist.is_odd()));
            }
        }
        out
    }

    /// The canonical bracket, assuming both arguments live on this chart.
    pub fn bracket(&self, f: &SuperPolynomial, g: &SuperPolynomial) -> SuperPolynomial {
        debug_assert!(self.check(f).is_ok() && self.check(g).is_ok());
        let mut out = SuperPolynomial::zero();
        if f.is_zero() || g.is_zero() {
            return out;
        }
        for parity in [Parity::Even, Parity::Odd] {
            let fp = f.parity_component(parity);
            if fp.is_zero() {
                continue;
            }
            for &(i, j, negative) in &self.omega {
                let dfi = fp.derivative(i);
                if dfi.is_zero() {
                    continue;
                }
                let dgj = g.derivative(j);
                if dgj.is_zero() {
                    continue;
                }
                let twist = i.parity().times(parity.flip()).is_odd();
                out += (&dfi * &dgj).signed(negative ^ twist);
            }
        }
        out
    }

    /// Checked bracket: fails if either argument uses a foreign coordinate.
    pub fn poisson_bracket(
        &self,
        f: &SuperPolynomial,
        g: &SuperPolynomial,
    ) -> Result<SuperPolynomial, AlgebraError> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.bracket(f, g))
    }

    /// Checked left derivative.
    pub fn partial_derivative(
        &self,
        f: &SuperPolynomial,
        z: Coordinate,
    ) -> Result<SuperPolynomial, AlgebraError> {
        self.check(f)?;
        if !self.contains(z) {
            return Err(AlgebraError::ChartMismatch {
                coordinate: z.name(),
                chart: self.to_string(),
            });
        }
        Ok(f.derivative(z))
    }

    /// Checked product.
    pub fn multiply(
        &self,
        f: &SuperPolynomial,
        g: &SuperPolynomial,
    ) -> Result<SuperPolynomial, AlgebraError> {
        self.check(f)?;
        self.check(g)?;
        Ok(f * g)
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            ChartKind::Symplectic => "T*ΠTM",
            ChartKind::OddCotangent => "ΠT*M",
        };
        if self.odd_dim == 0 {
            write!(f, "{name} over R^{}", self.even_dim)
        } else {
            write!(f, "{name} over R^{}|{}", self.even_dim, self.odd_dim)
        }
    }
}
