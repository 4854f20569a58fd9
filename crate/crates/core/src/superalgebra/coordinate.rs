use std::fmt;
use std::ops::{Add, AddAssign};

/// Z₂ grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: usize) -> Self {
        if bit.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Self {
        self + Parity::Odd
    }

    /// `(-1)^{self * other}`, as a parity.
    pub fn times(self, other: Parity) -> Parity {
        Parity::from_bit(self.bit() * other.bit())
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

impl AddAssign for Parity {
    fn add_assign(&mut self, rhs: Parity) {
        *self = *self + rhs;
    }
}

impl std::iter::Sum for Parity {
    fn sum<I: Iterator<Item = Parity>>(iter: I) -> Parity {
        iter.fold(Parity::Even, |a, b| a + b)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// The role a coordinate plays in a Darboux chart.
///
/// The declaration order is the canonical monomial order: x < ξ < π < p < x*.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoordKind {
    /// Base coordinate `x^a` (weight 0).
    Base,
    /// First odd fibre coordinate `ξ^a` (weight 1, bidegree (1,0)); the 1-form direction.
    FiberOdd1,
    /// Second odd fibre coordinate `π_a` (weight 1, bidegree (0,1)); the vector-field direction.
    FiberOdd2,
    /// Momentum `p_a` conjugate to `x^a` (weight 2, bidegree (1,1)).
    Momentum,
    /// Antimomentum `x*_a` on ΠT*M, conjugate to `x^a` under the odd bracket.
    AntiMomentum,
}

impl CoordKind {
    pub const ALL: [CoordKind; 5] = [
        CoordKind::Base,
        CoordKind::FiberOdd1,
        CoordKind::FiberOdd2,
        CoordKind::Momentum,
        CoordKind::AntiMomentum,
    ];

    /// Parity of the coordinate over an even base direction.
    pub fn intrinsic_parity(self) -> Parity {
        match self {
            CoordKind::Base | CoordKind::Momentum => Parity::Even,
            CoordKind::FiberOdd1 | CoordKind::FiberOdd2 | CoordKind::AntiMomentum => Parity::Odd,
        }
    }

    /// (ε₁, ε₂) eigenvalues.
    pub fn bidegree(self) -> (u32, u32) {
        match self {
            CoordKind::Base => (0, 0),
            CoordKind::FiberOdd1 => (1, 0),
            CoordKind::FiberOdd2 | CoordKind::AntiMomentum => (0, 1),
            CoordKind::Momentum => (1, 1),
        }
    }

    pub fn weight(self) -> u32 {
        let (a, b) = self.bidegree();
        a + b
    }

    pub fn prefix(self) -> &'static str {
        match self {
            CoordKind::Base => "x",
            CoordKind::FiberOdd1 => "xi",
            CoordKind::FiberOdd2 => "pi",
            CoordKind::Momentum => "p",
            CoordKind::AntiMomentum => "xs",
        }
    }
}

/// A single coordinate function.
///
/// `shifted` records that the underlying base direction `x^index` is odd
/// (the base is a supermanifold); every coordinate attached to that direction
/// then has its parity flipped relative to [`CoordKind::intrinsic_parity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coordinate {
    pub kind: CoordKind,
    pub index: u16,
    pub shifted: bool,
}

impl Coordinate {
    pub fn new(kind: CoordKind, index: u16, shifted: bool) -> Self {
        assert!(index >= 1, "coordinate indices start at 1");
        Coordinate {
            kind,
            index,
            shifted,
        }
    }

    pub fn parity(&self) -> Parity {
        let base = self.kind.intrinsic_parity();
        if self.shifted {
            base.flip()
        } else {
            base
        }
    }

    pub fn is_odd(&self) -> bool {
        self.parity().is_odd()
    }

    pub fn weight(&self) -> u32 {
        self.kind.weight()
    }

    pub fn bidegree(&self) -> (u32, u32) {
        self.kind.bidegree()
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind.prefix(), self.index)
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.prefix(), self.index)
    }
}
