use crate::combinatorics::enumerate_unshuffles;
use crate::superalgebra::{CoordKind, Parity, SuperPolynomial};

use super::{GeometryError, Multivector};

fn restrict_to_base(f: &SuperPolynomial) -> SuperPolynomial {
    f.filter(|m| m.factors().iter().all(|(c, _)| c.kind == CoordKind::Base))
}

fn check_base(p: &Multivector, fs: &[SuperPolynomial]) -> Result<(), GeometryError> {
    for f in fs {
        p.chart().check(f)?;
        if f.coordinates().iter().any(|c| c.kind != CoordKind::Base) || f.parity().is_none() {
            return Err(GeometryError::NotBaseFunction(f.to_string()));
        }
    }
    Ok(())
}

/// `[⋯[P, f_1], …, f_k]` restricted to `M` (every `x*` set to zero).
pub fn raw_poisson_bracket(
    p: &Multivector,
    fs: &[SuperPolynomial],
) -> Result<SuperPolynomial, GeometryError> {
    check_base(p, fs)?;
    Ok(raw_unchecked(p, fs))
}

fn raw_unchecked(p: &Multivector, fs: &[SuperPolynomial]) -> SuperPolynomial {
    let ch = p.chart();
    // only the x*-degree k part of P survives k brackets and the restriction
    let k = fs.len() as u32;
    let mut acc = p.value().filter(|m| {
        m.factors()
            .iter()
            .filter(|(c, _)| c.kind == CoordKind::AntiMomentum)
            .count() as u32
            == k
    });
    for f in fs {
        acc = ch.bracket(&acc, f);
    }
    restrict_to_base(&acc)
}

/// `{f_1, …, f_k} = (-1)^{k(k+3)/2} [⋯[P, f_1], …, f_k]|_M`.
///
/// The sign makes `x*_1 ⋯ x*_k` give `{x^1, …, x^k} = 1`; for a bivector
/// `Σ_{a<b} P^{ab} x*_a x*_b` this is `P^{ab} ∂_a f ∂_b g` summed over all `a, b`.
pub fn higher_poisson_bracket(
    p: &Multivector,
    fs: &[SuperPolynomial],
) -> Result<SuperPolynomial, GeometryError> {
    let k = fs.len();
    Ok(raw_poisson_bracket(p, fs)?.signed((k * (k + 3) / 2) % 2 == 1))
}

/// The n-th generalised Jacobi expression of the raw brackets,
/// `Σ_k Σ_{σ ∈ Sh(k, n-k)} ε(σ) ⟨⟨f_σ(1), …, f_σ(k)⟩, f_σ(k+1), …, f_σ(n)⟩`,
/// with `ε` the Koszul sign for the shifted parities `f̃ + 1`. It vanishes for
/// every `n` exactly when `[P, P] = 0`.
pub fn poisson_jacobiator(
    p: &Multivector,
    fs: &[SuperPolynomial],
) -> Result<SuperPolynomial, GeometryError> {
    check_base(p, fs)?;
    let n = fs.len();
    let shifted: Vec<Parity> = fs.iter().map(|f| f.parity().unwrap().flip()).collect();
    let mut acc = SuperPolynomial::zero();
    for k in 1..=n {
        for sh in enumerate_unshuffles(n + 1, n - k + 1).expect("valid range") {
            let perm = sh.zero_based();
            let mut negative = false;
            for a in 0..n {
                for b in a + 1..n {
                    if perm[a] > perm[b] {
                        negative ^= shifted[perm[a]].times(shifted[perm[b]]).is_odd();
                    }
                }
            }
            let inner_args: Vec<SuperPolynomial> =
                perm[..k].iter().map(|&i| fs[i].clone()).collect();
            let inner = raw_unchecked(p, &inner_args);
            if inner.is_zero() {
                continue;
            }
            let mut outer_args = vec![inner];
            outer_args.extend(perm[k..].iter().map(|&i| fs[i].clone()));
            acc += raw_unchecked(p, &outer_args).signed(negative);
        }
    }
    Ok(acc)
}
