use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::combinatorics::{enumerate_unshuffles, signed_count_closed_form, SignedUnshuffle};
use crate::superalgebra::{Parity, SuperPolynomial};

use super::derivation::HamiltonianDerivation;
use super::koszul::koszul_sign_unchecked;
use super::{BracketError, SectionExpr};

/// One summand `d_i(u_σ(1..k-j), d_j(u_σ(k-j+1..k-1), u_k), u_{k+1..n})`
/// of `J_n`, before signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LodayTerm {
    pub outer: usize,
    pub inner: usize,
    pub k: usize,
    pub unshuffle: SignedUnshuffle,
}

impl LodayTerm {
    /// All summands of `J_n` in a fixed order.
    pub fn all(n: usize) -> Vec<LodayTerm> {
        let mut out = Vec::new();
        for j in 1..=n {
            let i = n + 1 - j;
            for k in j..=n {
                for unshuffle in enumerate_unshuffles(k, j).expect("1 <= j <= k") {
                    out.push(LodayTerm {
                        outer: i,
                        inner: j,
                        k,
                        unshuffle,
                    });
                }
            }
        }
        out
    }

    /// `K(σ) (-1)^{(k+1)(j+1)} (-1)^{j(ũ_σ(1) + ⋯ + ũ_σ(k-j))}` is negative.
    fn sign(&self, parities: &[Parity]) -> bool {
        let (j, k) = (self.inner, self.k);
        let perm = self.unshuffle.zero_based();
        let koszul = koszul_sign_unchecked(&perm, &parities[..k - 1]).total_negative();
        let split = (k + 1) * (j + 1) % 2 == 1;
        let moved: Parity = perm[..k - j].iter().map(|&t| parities[t]).sum();
        let shift = j % 2 == 1 && moved.is_odd();
        koszul ^ split ^ shift
    }
}

/// Outcome of evaluating the n-th Loday identity on concrete arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LodayReport {
    pub arity: usize,
    pub arguments: Vec<SectionExpr>,
    /// The image `χ(J_n(u_1, …, u_n))`.
    pub residual: SuperPolynomial,
    /// The image of the n-th derived bracket of `Q²` on the same arguments.
    pub q_squared: SuperPolynomial,
    /// `residual = -q_squared`.
    pub matched: bool,
}

impl LodayReport {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

impl HamiltonianDerivation {
    /// `χ(J_n(u_1, …, u_n))`, summed over every unshuffle.
    pub fn loday_residual(&self, args: &[SectionExpr]) -> Result<SuperPolynomial, BracketError> {
        if args.is_empty() {
            return Err(BracketError::EmptyArguments);
        }
        for u in args {
            self.chart().check(u.value())?;
        }
        let n = args.len();
        let parities: Vec<Parity> = args.iter().map(|u| u.parity()).collect();
        let mut acc = SuperPolynomial::zero();
        for term in LodayTerm::all(n) {
            let perm = term.unshuffle.zero_based();
            let (j, k) = (term.inner, term.k);
            let inner_args: Vec<SectionExpr> = perm[k - j..]
                .iter()
                .map(|&t| args[t].clone())
                .chain(std::iter::once(args[k - 1].clone()))
                .collect();
            let inner = self.dorfman_unchecked(&inner_args);
            if inner.is_zero() {
                continue;
            }
            let outer_args: Vec<SectionExpr> = perm[..k - j]
                .iter()
                .map(|&t| args[t].clone())
                .chain(std::iter::once(inner))
                .chain(args[k..].iter().cloned())
                .collect();
            acc += self
                .dorfman_unchecked(&outer_args)
                .into_value()
                .signed(term.sign(&parities));
        }
        Ok(acc)
    }

    /// Evaluates `J_n` and the `Q²` bracket side by side.
    pub fn loday_identity(&self, args: &[SectionExpr]) -> Result<LodayReport, BracketError> {
        let residual = self.loday_residual(args)?;
        let q_squared = self.q_squared_dorfman(args)?.into_value();
        let matched = (&residual + &q_squared).is_zero();
        Ok(LodayReport {
            arity: args.len(),
            arguments: args.to_vec(),
            residual,
            q_squared,
            matched,
        })
    }

    /// `J_n(u, …, u)` for an even section, using the signed counts `𝒞(k, j)`
    /// in place of the sum over unshuffles.
    pub fn polarised_loday(
        &self,
        u: &SectionExpr,
        n: usize,
    ) -> Result<SuperPolynomial, BracketError> {
        if u.parity().is_odd() {
            return Err(BracketError::OddDiagonal);
        }
        if n == 0 {
            return Err(BracketError::EmptyArguments);
        }
        self.chart().check(u.value())?;
        let mut acc = SuperPolynomial::zero();
        for j in 1..=n {
            let i = n + 1 - j;
            let inner = self.dorfman_unchecked(&vec![u.clone(); j]);
            if inner.is_zero() {
                continue;
            }
            for k in j..=n {
                let count: BigInt = signed_count_closed_form(k, j).expect("1 <= j <= k");
                if count.is_zero() {
                    continue;
                }
                let mut outer_args = vec![u.clone(); i];
                outer_args[k - j] = inner.clone();
                let value = self.dorfman_unchecked(&outer_args).into_value();
                let sign = (k + 1) * (j + 1) % 2 == 1;
                acc += value.scale(&BigRational::from_integer(count)).signed(sign);
            }
        }
        Ok(acc)
    }
}
