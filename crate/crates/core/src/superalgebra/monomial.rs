use std::fmt;

use super::coordinate::{Coordinate, Parity};

/// A normalized product of coordinates.
///
/// Factors are stored in canonical coordinate order with positive exponents;
/// odd coordinates never carry an exponent above one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Coordinate, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(c: Coordinate) -> Self {
        Monomial {
            factors: vec![(c, 1)],
        }
    }

    /// Builds a monomial from factors in the order given, returning the
    /// Koszul sign of sorting them (`None` if an odd coordinate repeats).
    pub fn from_product(factors: &[(Coordinate, u32)]) -> Option<(bool, Monomial)> {
        let mut acc = (false, Monomial::one());
        for &(c, e) in factors {
            if e == 0 {
                continue;
            }
            if c.is_odd() && e > 1 {
                return None;
            }
            let rhs = Monomial {
                factors: vec![(c, e)],
            };
            let (neg, m) = acc.1.mul(&rhs)?;
            acc = (acc.0 ^ neg, m);
        }
        Some(acc)
    }

    pub fn factors(&self) -> &[(Coordinate, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, c: Coordinate) -> u32 {
        self.factors
            .iter()
            .find(|(d, _)| *d == c)
            .map_or(0, |(_, e)| *e)
    }

    pub fn parity(&self) -> Parity {
        self.factors
            .iter()
            .filter(|(c, _)| c.is_odd())
            .map(|_| Parity::Odd)
            .sum()
    }

    pub fn weight(&self) -> u32 {
        self.factors.iter().map(|(c, e)| c.weight() * e).sum()
    }

    pub fn bidegree(&self) -> (u32, u32) {
        self.factors.iter().fold((0, 0), |(a, b), (c, e)| {
            let (ca, cb) = c.bidegree();
            (a + ca * e, b + cb * e)
        })
    }

    /// Supercommutative product `self * other`.
    ///
    /// Returns `None` when an odd coordinate would appear squared, otherwise
    /// the sign flag (true = negative) and the normalized product.
    pub fn mul(&self, other: &Monomial) -> Option<(bool, Monomial)> {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        // odd factors of `self` not yet passed; each odd factor of `other`
        // that moves in front of them picks up one sign per such factor.
        let mut odd_remaining_in_a = a.iter().filter(|(c, _)| c.is_odd()).count();
        let mut negative = false;
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                if a[i].0.is_odd() {
                    odd_remaining_in_a -= 1;
                }
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                if b[j].0.is_odd() && odd_remaining_in_a % 2 == 1 {
                    negative = !negative;
                }
                out.push(b[j]);
                j += 1;
            } else {
                let c = a[i].0;
                if c.is_odd() {
                    return None;
                }
                out.push((c, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
        Some((negative, Monomial { factors: out }))
    }

    /// Left partial derivative: `(sign_negative, multiplicity, result)`.
    pub fn derivative(&self, z: Coordinate) -> Option<(bool, u32, Monomial)> {
        let pos = self.factors.iter().position(|(c, _)| *c == z)?;
        let e = self.factors[pos].1;
        let mut factors = self.factors.clone();
        if e == 1 {
            factors.remove(pos);
        } else {
            factors[pos].1 = e - 1;
        }
        let negative = if z.is_odd() {
            self.factors[..pos]
                .iter()
                .filter(|(c, _)| c.is_odd())
                .count()
                % 2
                == 1
        } else {
            false
        };
        Some((negative, e, Monomial { factors }))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (n, (c, e)) in self.factors.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalgebra::coordinate::CoordKind;

    fn xi(i: u16) -> Coordinate {
        Coordinate::new(CoordKind::FiberOdd1, i, false)
    }
    fn pi(i: u16) -> Coordinate {
        Coordinate::new(CoordKind::FiberOdd2, i, false)
    }
    fn x(i: u16) -> Coordinate {
        Coordinate::new(CoordKind::Base, i, false)
    }

    #[test]
    fn odd_square_vanishes() {
        assert!(Monomial::var(xi(1)).mul(&Monomial::var(xi(1))).is_none());
    }

    #[test]
    fn odd_swap_sign() {
        let (neg, m) = Monomial::var(pi(1)).mul(&Monomial::var(xi(1))).unwrap();
        assert!(neg);
        assert_eq!(m.factors(), &[(xi(1), 1), (pi(1), 1)]);
        let (neg, _) = Monomial::var(xi(1)).mul(&Monomial::var(pi(1))).unwrap();
        assert!(!neg);
    }

    #[test]
    fn even_factors_merge() {
        let (neg, m) = Monomial::var(x(1)).mul(&Monomial::var(x(1))).unwrap();
        assert!(!neg);
        assert_eq!(m.exponent(x(1)), 2);
    }

    #[test]
    fn product_sign_counts_crossings() {
        // (pi1 pi2) * (xi1 xi2): each xi crosses both pis -> 4 swaps
        let a = Monomial::from_product(&[(pi(1), 1), (pi(2), 1)]).unwrap().1;
        let b = Monomial::from_product(&[(xi(1), 1), (xi(2), 1)]).unwrap().1;
        let (neg, _) = a.mul(&b).unwrap();
        assert!(!neg);
        // pi1 * (xi1 xi2): 2 swaps
        let (neg, _) = Monomial::var(pi(1)).mul(&b).unwrap();
        assert!(!neg);
        // (pi1 pi2) * xi1: 2 swaps; pi2 * (xi1 pi1): xi1 crosses pi2 once, pi1 once
        let c = Monomial::from_product(&[(xi(1), 1), (pi(1), 1)]).unwrap().1;
        let (neg, _) = Monomial::var(pi(2)).mul(&c).unwrap();
        assert!(!neg);
        let (neg, _) = Monomial::var(pi(2)).mul(&Monomial::var(pi(1))).unwrap();
        assert!(neg);
    }

    #[test]
    fn left_derivative_sign() {
        let m = Monomial::from_product(&[(xi(1), 1), (pi(1), 1)]).unwrap().1;
        let (neg, k, r) = m.derivative(pi(1)).unwrap();
        assert!(neg);
        assert_eq!(k, 1);
        assert_eq!(r, Monomial::var(xi(1)));
        let (neg, _, _) = m.derivative(xi(1)).unwrap();
        assert!(!neg);
    }
}
