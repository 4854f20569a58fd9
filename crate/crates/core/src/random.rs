//! Seeded random generators for polynomials, sections and Hamiltonians.
//!
//! Coefficients are integers in `[-3, 3]` (never zero) and base polynomial
//! degree is at most two unless configured otherwise.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::brackets::SectionExpr;
use crate::superalgebra::{
    integer, Chart, ChartKind, CoordKind, Monomial, Parity, SuperPolynomial,
};

#[derive(Clone, Debug)]
pub struct PolyGen {
    chart: Chart,
    max_terms: usize,
    max_weight: u32,
    max_base_degree: u32,
    coefficient_bound: i64,
}

impl PolyGen {
    pub fn new(chart: Chart) -> Self {
        PolyGen {
            chart,
            max_terms: 3,
            max_weight: 4,
            max_base_degree: 2,
            coefficient_bound: 3,
        }
    }

    pub fn max_terms(mut self, n: usize) -> Self {
        self.max_terms = n.max(1);
        self
    }

    pub fn max_weight(mut self, w: u32) -> Self {
        self.max_weight = w;
        self
    }

    pub fn max_base_degree(mut self, d: u32) -> Self {
        self.max_base_degree = d;
        self
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    fn coefficient<R: Rng + ?Sized>(&self, rng: &mut R) -> i64 {
        let b = self.coefficient_bound;
        loop {
            let c = rng.gen_range(-b..=b);
            if c != 0 {
                return c;
            }
        }
    }

    /// Every monomial in the base coordinates of degree at most the bound.
    pub fn base_monomials(&self) -> Vec<Monomial> {
        let base = self.chart.base_coordinates();
        let mut out = vec![Monomial::one()];
        let mut frontier = vec![Monomial::one()];
        for _ in 0..self.max_base_degree {
            let mut next = Vec::new();
            for m in &frontier {
                for &c in &base {
                    // multiply only by coordinates >= the last factor to avoid duplicates
                    if let Some(&(last, _)) = m.factors().last() {
                        if c < last {
                            continue;
                        }
                    }
                    if let Some((_, prod)) = m.mul(&Monomial::var(c)) {
                        if !next.contains(&prod) {
                            next.push(prod);
                        }
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Every monomial in the fibre coordinates of exactly the given weight.
    pub fn fiber_monomials(&self, weight: u32) -> Vec<Monomial> {
        let fiber: Vec<_> = self
            .chart
            .coordinates()
            .into_iter()
            .filter(|c| c.kind != CoordKind::Base)
            .collect();
        let mut out = Vec::new();
        fn rec(
            fiber: &[crate::superalgebra::Coordinate],
            start: usize,
            remaining: u32,
            current: Monomial,
            out: &mut Vec<Monomial>,
        ) {
            if remaining == 0 {
                out.push(current);
                return;
            }
            for (i, &c) in fiber.iter().enumerate().skip(start) {
                let w = c.weight();
                if w == 0 || w > remaining {
                    continue;
                }
                if let Some((_, m)) = current.mul(&Monomial::var(c)) {
                    // even coordinates may repeat, odd ones may not
                    let next = if c.is_odd() { i + 1 } else { i };
                    rec(fiber, next, remaining - w, m, out);
                }
            }
        }
        rec(&fiber, 0, weight, Monomial::one(), &mut out);
        out
    }

    fn candidates(&self, weights: &[u32], parity: Option<Parity>) -> Vec<(Monomial, Monomial)> {
        let base = self.base_monomials();
        let mut out = Vec::new();
        for &w in weights {
            for f in self.fiber_monomials(w) {
                for b in &base {
                    if parity.is_none_or(|p| f.parity() + b.parity() == p) {
                        out.push((b.clone(), f.clone()));
                    }
                }
            }
        }
        out
    }

    /// A random polynomial whose terms have weights drawn from `weights`
    /// and (optionally) a fixed parity. May be zero if no monomial fits.
    pub fn sample<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        weights: &[u32],
        parity: Option<Parity>,
        terms: usize,
    ) -> SuperPolynomial {
        let candidates = self.candidates(weights, parity);
        let mut out = SuperPolynomial::zero();
        if candidates.is_empty() {
            return out;
        }
        for _ in 0..terms {
            let (b, f) = candidates.choose(rng).unwrap();
            let (neg, m) = b.mul(f).expect("base and fibre monomials are disjoint");
            let c = self.coefficient(rng);
            out.add_term(m, integer(if neg { -c } else { c }));
        }
        out
    }

    /// Whether some non-zero polynomial of the given weight and parity exists.
    /// On an ordinary base the parity of a monomial equals its weight mod 2.
    pub fn admits(&self, weight: u32, parity: Parity) -> bool {
        !self.candidates(&[weight], Some(parity)).is_empty()
    }

    /// Random parity-homogeneous polynomial of weight at most `max_weight`.
    pub fn homogeneous<R: Rng + ?Sized>(&self, rng: &mut R) -> SuperPolynomial {
        let parity = if rng.gen_bool(0.5) {
            Parity::Odd
        } else {
            Parity::Even
        };
        let weights: Vec<u32> = (0..=self.max_weight).collect();
        let terms = rng.gen_range(1..=self.max_terms);
        self.sample(rng, &weights, Some(parity), terms)
    }

    /// Random polynomial, not necessarily homogeneous in anything.
    pub fn any<R: Rng + ?Sized>(&self, rng: &mut R) -> SuperPolynomial {
        let weights: Vec<u32> = (0..=self.max_weight).collect();
        let terms = rng.gen_range(1..=self.max_terms);
        self.sample(rng, &weights, None, terms)
    }

    pub fn weight_homogeneous<R: Rng + ?Sized>(&self, rng: &mut R, w: u32) -> SuperPolynomial {
        let parity = if rng.gen_bool(0.5) {
            Parity::Odd
        } else {
            Parity::Even
        };
        let terms = rng.gen_range(1..=self.max_terms);
        self.sample(rng, &[w], Some(parity), terms)
    }

    /// A random odd Hamiltonian with every admissible weight in `weights`
    /// present (weights must be at least 2 so that `Pθ = 0`). Weights that
    /// carry no odd monomial on this chart are skipped.
    pub fn hamiltonian<R: Rng + ?Sized>(&self, rng: &mut R, weights: &[u32]) -> SuperPolynomial {
        assert!(weights.iter().all(|&w| w >= 2));
        let mut out = SuperPolynomial::zero();
        for &w in weights {
            if !self.admits(w, Parity::Odd) {
                continue;
            }
            let mut part = SuperPolynomial::zero();
            while part.is_zero() {
                let terms = rng.gen_range(1..=self.max_terms);
                part = self.sample(rng, &[w], Some(Parity::Odd), terms);
            }
            out += part;
        }
        out
    }

    /// A random section of E with the requested section parity.
    pub fn section<R: Rng + ?Sized>(&self, rng: &mut R, parity: Parity) -> SectionExpr {
        assert_eq!(self.chart.kind(), ChartKind::Symplectic);
        assert!(
            self.admits(1, parity.flip()),
            "no section of parity {parity} on {}",
            self.chart
        );
        loop {
            let terms = rng.gen_range(1..=self.max_terms);
            let value = self.sample(rng, &[1], Some(parity.flip()), terms);
            if !value.is_zero() {
                return SectionExpr::new(value, parity).expect("weight one by construction");
            }
        }
    }

    /// A random even section (the only kind an ordinary base supports).
    pub fn even_section<R: Rng + ?Sized>(&self, rng: &mut R) -> SectionExpr {
        self.section(rng, Parity::Even)
    }

    /// A random section whose parity is even on an ordinary base and random
    /// when the base has odd directions.
    pub fn any_section<R: Rng + ?Sized>(&self, rng: &mut R) -> SectionExpr {
        if self.chart.odd_dim() > 0 && rng.gen_bool(0.5) {
            self.section(rng, Parity::Odd)
        } else {
            self.section(rng, Parity::Even)
        }
    }

    /// Random weight-zero function (a polynomial on the base).
    pub fn base_function<R: Rng + ?Sized>(&self, rng: &mut R, parity: Parity) -> SuperPolynomial {
        let terms = rng.gen_range(1..=self.max_terms);
        self.sample(rng, &[0], Some(parity), terms)
    }

    pub fn odd_linear<R: Rng + ?Sized>(&self, rng: &mut R) -> SuperPolynomial {
        assert!(self.admits(1, Parity::Odd));
        loop {
            let terms = rng.gen_range(1..=self.max_terms);
            let v = self.sample(rng, &[1], Some(Parity::Odd), terms);
            if !v.is_zero() {
                return v;
            }
        }
    }
}
