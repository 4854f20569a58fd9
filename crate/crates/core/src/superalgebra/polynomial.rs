use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::coordinate::{CoordKind, Coordinate, Parity};
use super::monomial::Monomial;

/// Exact rational coefficient.
pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// A sparse element of the free supercommutative algebra on the coordinates.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SuperPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl SuperPolynomial {
    pub fn zero() -> Self {
        SuperPolynomial::default()
    }

    pub fn one() -> Self {
        SuperPolynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = SuperPolynomial::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn int(n: i64) -> Self {
        SuperPolynomial::constant(integer(n))
    }

    pub fn var(c: Coordinate) -> Self {
        SuperPolynomial::monomial(Monomial::var(c), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = SuperPolynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return SuperPolynomial::zero();
        }
        SuperPolynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&integer(n))
    }

    /// Multiplies by `-1` when `negative` is set.
    pub fn signed(self, negative: bool) -> Self {
        if negative {
            -self
        } else {
            self
        }
    }

    pub fn coordinates(&self) -> BTreeSet<Coordinate> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(c, _)| *c))
            .collect()
    }

    /// The parity if the element is parity-homogeneous; zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        match it.next() {
            None => Some(Parity::Even),
            Some(first) => it.all(|p| p == first).then_some(first),
        }
    }

    pub fn parity_component(&self, parity: Parity) -> Self {
        self.filter(|m| m.parity() == parity)
    }

    pub fn weight_component(&self, k: u32) -> Self {
        self.filter(|m| m.weight() == k)
    }

    pub fn weights(&self) -> BTreeSet<u32> {
        self.terms.keys().map(Monomial::weight).collect()
    }

    /// The single weight of a non-zero weight-homogeneous element.
    pub fn weight(&self) -> Option<u32> {
        let w = self.weights();
        (w.len() == 1).then(|| *w.iter().next().unwrap())
    }

    /// Decomposition into simultaneous ε₁/ε₂ eigencomponents.
    pub fn bidegree_components(&self) -> BTreeMap<(u32, u32), SuperPolynomial> {
        let mut out: BTreeMap<(u32, u32), SuperPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree())
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Self {
        SuperPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sets every coordinate of the given kinds to zero.
    pub fn drop_kinds(&self, kinds: &[CoordKind]) -> Self {
        self.filter(|m| m.factors().iter().all(|(c, _)| !kinds.contains(&c.kind)))
    }

    /// Left partial derivative `∂/∂z`.
    pub fn derivative(&self, z: Coordinate) -> Self {
        let mut out = SuperPolynomial::zero();
        for (m, c) in &self.terms {
            if let Some((neg, k, rest)) = m.derivative(z) {
                let mut coeff = c * integer(k as i64);
                if neg {
                    coeff = -coeff;
                }
                out.add_term(rest, coeff);
            }
        }
        out
    }

    /// Replaces each coordinate by a polynomial, multiplying factors in their
    /// canonical order so that Koszul signs are tracked.
    pub fn substitute(&self, mut image: impl FnMut(Coordinate) -> Option<SuperPolynomial>) -> Self {
        let mut cache: BTreeMap<Coordinate, Option<SuperPolynomial>> = BTreeMap::new();
        let mut out = SuperPolynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = SuperPolynomial::constant(c.clone());
            for &(z, e) in m.factors() {
                let img = cache.entry(z).or_insert_with(|| image(z)).clone();
                let base = img.unwrap_or_else(|| SuperPolynomial::var(z));
                for _ in 0..e {
                    acc = &acc * &base;
                }
                if acc.is_zero() {
                    break;
                }
            }
            out += acc;
        }
        out
    }

    /// The term printed first.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next()
    }

    pub fn max_abs_coefficient(&self) -> Rational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl Add<&SuperPolynomial> for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn add(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for SuperPolynomial {
    type Output = SuperPolynomial;
    fn add(mut self, rhs: SuperPolynomial) -> SuperPolynomial {
        self += rhs;
        self
    }
}

impl AddAssign<&SuperPolynomial> for SuperPolynomial {
    fn add_assign(&mut self, rhs: &SuperPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for SuperPolynomial {
    fn add_assign(&mut self, rhs: SuperPolynomial) {
        if self.terms.is_empty() {
            *self = rhs;
            return;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Sub<&SuperPolynomial> for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(mut self, rhs: SuperPolynomial) -> SuperPolynomial {
        self -= &rhs;
        self
    }
}

impl SubAssign<&SuperPolynomial> for SuperPolynomial {
    fn sub_assign(&mut self, rhs: &SuperPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Neg for SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(mut self) -> SuperPolynomial {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        -self.clone()
    }
}

impl Mul<&SuperPolynomial> for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn mul(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                if let Some((neg, m)) = ma.mul(mb) {
                    let c = ca * cb;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }
}

impl Mul for SuperPolynomial {
    type Output = SuperPolynomial;
    fn mul(self, rhs: SuperPolynomial) -> SuperPolynomial {
        &self * &rhs
    }
}

impl From<Coordinate> for SuperPolynomial {
    fn from(c: Coordinate) -> Self {
        SuperPolynomial::var(c)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Prints in the expression grammar accepted by [`crate::expr::parse_polynomial`].
impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write_rational(f, &magnitude)?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write_rational(f, &magnitude)?;
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}
