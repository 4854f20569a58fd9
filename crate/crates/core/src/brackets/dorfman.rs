use num_bigint::BigInt;
use num_rational::BigRational;

use crate::superalgebra::{Chart, Parity, SuperPolynomial};

use super::derivation::{project_p, project_w, HamiltonianDerivation};
use super::koszul::{koszul_sign_unchecked, permutations};
use super::{BracketError, SectionExpr};

/// `Σ_{i<m} (m - i) ũ_i` mod 2 for sections `u_1, …, u_m`.
fn epsilon(parities: impl ExactSizeIterator<Item = Parity>) -> bool {
    let m = parities.len();
    parities
        .enumerate()
        .filter(|(i, p)| p.is_odd() && (m - 1 - i) % 2 == 1)
        .count()
        % 2
        == 1
}

/// Left-nested brackets `N_0 = h, N_i = [N_{i-1}, a_i]`, keeping in `N_i`
/// only the weights that can still reach weight ≤ 1 after the remaining
/// linear arguments.
fn truncated_tower(
    chart: &Chart,
    h: &SuperPolynomial,
    args: &[&SuperPolynomial],
) -> Vec<SuperPolynomial> {
    let k = args.len() as u32;
    let cut = |f: SuperPolynomial, i: u32| f.filter(|m| m.weight() <= k - i + 1);
    let mut out = vec![cut(h.clone(), 0)];
    for (i, a) in args.iter().enumerate() {
        let next = chart.bracket(&out[i], a);
        out.push(cut(next, i as u32 + 1));
    }
    out
}

/// The derived bracket formula for an arbitrary generator `h`:
/// `ε (P N_k - [P N_{k-1}, χ_k])`, returned as a bare image.
pub(crate) fn derived_image(
    chart: &Chart,
    h: &SuperPolynomial,
    args: &[SectionExpr],
) -> SuperPolynomial {
    let k = args.len();
    let values: Vec<&SuperPolynomial> = args.iter().map(|u| u.value()).collect();
    let tower = truncated_tower(chart, h, &values);
    let first = project_p(&tower[k]);
    let second = chart.bracket(&project_p(&tower[k - 1]), values[k - 1]);
    (first - second).signed(epsilon(args.iter().map(|u| u.parity())))
}

impl HamiltonianDerivation {
    fn check_sections(&self, args: &[SectionExpr]) -> Result<(), BracketError> {
        if args.is_empty() {
            return Err(BracketError::EmptyArguments);
        }
        for u in args {
            self.chart().check(u.value())?;
        }
        Ok(())
    }

    /// The k-th higher derived Dorfman bracket `d_k(u_1, …, u_k)`.
    pub fn dorfman(&self, args: &[SectionExpr]) -> Result<SectionExpr, BracketError> {
        self.check_sections(args)?;
        Ok(self.dorfman_unchecked(args))
    }

    pub(crate) fn dorfman_unchecked(&self, args: &[SectionExpr]) -> SectionExpr {
        let parity = Parity::from_bit(args.len()) + args.iter().map(|u| u.parity()).sum();
        SectionExpr::new_unchecked(derived_image(self.chart(), self.theta(), args), parity)
    }

    /// The same formula with `Q` replaced by `Q² = ½[[θ,θ], -]`.
    pub fn q_squared_dorfman(&self, args: &[SectionExpr]) -> Result<SectionExpr, BracketError> {
        self.check_sections(args)?;
        Ok(self.q_squared_dorfman_unchecked(args))
    }

    pub(crate) fn q_squared_dorfman_unchecked(&self, args: &[SectionExpr]) -> SectionExpr {
        let parity = Parity::from_bit(args.len() + 1) + args.iter().map(|u| u.parity()).sum();
        SectionExpr::new_unchecked(
            derived_image(self.chart(), self.half_square(), args),
            parity,
        )
    }

    /// `D_k(u_1, …, u_{k-2} | f)` where `k - 2 = args.len()` and `f` is a base function.
    pub fn defect_map(
        &self,
        args: &[SectionExpr],
        f: &SuperPolynomial,
    ) -> Result<SectionExpr, BracketError> {
        for u in args {
            self.chart().check(u.value())?;
        }
        self.chart().check(f)?;
        let fp = match f.parity() {
            Some(p) if f.weights().iter().all(|&w| w == 0) => p,
            _ => return Err(BracketError::NotBaseFunction(f.to_string())),
        };
        let ch = self.chart();
        let mut nested = self.theta().clone();
        for u in args {
            nested = ch.bracket(&nested, u.value());
        }
        let b = ch.bracket(&nested, f);
        let image =
            (project_p(&b) - project_w(&b)).signed(epsilon(args.iter().map(|u| u.parity())));
        let parity = Parity::from_bit(args.len()) + fp + args.iter().map(|u| u.parity()).sum();
        Ok(SectionExpr::new_unchecked(image, parity))
    }

    /// Both sides of the symmetry relation at adjacent positions `i, i+1`
    /// (one-based): the swap sum and the signed defect term.
    pub fn symmetry_defect(
        &self,
        args: &[SectionExpr],
        i: usize,
    ) -> Result<(SectionExpr, SectionExpr), BracketError> {
        self.check_sections(args)?;
        let k = args.len();
        if i == 0 || i >= k {
            return Err(BracketError::IndexOutOfRange { index: i, len: k });
        }
        let (a, b) = (&args[i - 1], &args[i]);
        let mut swapped = args.to_vec();
        swapped.swap(i - 1, i);
        let direct = self.dorfman_unchecked(args);
        let reverse = self.dorfman_unchecked(&swapped);
        let swap_sign = a.parity().times(b.parity()).is_odd();
        let lhs = SectionExpr::new_unchecked(
            direct.value() + &reverse.value().clone().signed(swap_sign),
            direct.parity(),
        );

        let g = pairing_g(self.chart(), a, b);
        let rest: Vec<SectionExpr> = args
            .iter()
            .enumerate()
            .filter(|(t, _)| *t != i - 1 && *t != i)
            .map(|(_, u)| u.clone())
            .collect();
        let tail: Parity = args[i + 1..].iter().map(|u| u.parity()).sum();
        let sign = (a.parity() + b.parity()).times(tail).is_odd();
        let d = self.defect_map(&rest, &g)?;
        let rhs = SectionExpr::new_unchecked(d.value().clone().signed(sign), d.parity());
        Ok((lhs, rhs))
    }

    pub fn symmetry_defect_check(
        &self,
        args: &[SectionExpr],
        i: usize,
    ) -> Result<bool, BracketError> {
        let (lhs, rhs) = self.symmetry_defect(args, i)?;
        Ok(lhs.value() == rhs.value())
    }
}

/// `g(u, v) = (-1)^ũ [χ_u, χ_v]`.
pub fn pairing_g(chart: &Chart, u: &SectionExpr, v: &SectionExpr) -> SuperPolynomial {
    chart
        .bracket(u.value(), v.value())
        .signed(u.parity().is_odd())
}

/// The image of the k-th Courant bracket, `(1/k!) Σ_σ K(σ) d_k(u_σ)`.
pub fn courant_polynomial(
    d: &HamiltonianDerivation,
    args: &[SectionExpr],
) -> Result<SuperPolynomial, BracketError> {
    d.check_sections(args)?;
    let parities: Vec<Parity> = args.iter().map(|u| u.parity()).collect();
    let mut acc = SuperPolynomial::zero();
    let mut count = 0i64;
    for perm in permutations(args.len()) {
        let permuted: Vec<SectionExpr> = perm.iter().map(|&i| args[i].clone()).collect();
        let sign = koszul_sign_unchecked(&perm, &parities);
        acc += d
            .dorfman_unchecked(&permuted)
            .into_value()
            .signed(sign.total_negative());
        count += 1;
    }
    Ok(acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(count))))
}

pub fn courant(
    d: &HamiltonianDerivation,
    args: &[SectionExpr],
) -> Result<SectionExpr, BracketError> {
    let image = courant_polynomial(d, args)?;
    let parity = Parity::from_bit(args.len()) + args.iter().map(|u| u.parity()).sum();
    Ok(SectionExpr::new_unchecked(image, parity))
}
