use itertools::Itertools;

use crate::superalgebra::Parity;

use super::BracketError;

/// Signs attached to a permutation of graded elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KoszulSign {
    /// `sgn(σ) = -1`
    pub sign_negative: bool,
    /// `κ(σ) = -1`
    pub koszul_negative: bool,
}

impl KoszulSign {
    /// `K(σ) = sgn(σ) κ(σ)` is negative.
    pub fn total_negative(self) -> bool {
        self.sign_negative ^ self.koszul_negative
    }

    pub fn total(self) -> i64 {
        if self.total_negative() {
            -1
        } else {
            1
        }
    }
}

/// Signs of the rearrangement `(v_1, …, v_n) ↦ (v_{σ(0)}, …, v_{σ(n-1)})`.
///
/// `perm` is zero-based and `parities[i]` is the parity of `v_i`. Every
/// inversion contributes to `sgn`, and to `κ` when both elements are odd.
pub fn koszul_sign(perm: &[usize], parities: &[Parity]) -> Result<KoszulSign, BracketError> {
    if perm.len() != parities.len() {
        return Err(BracketError::LengthMismatch {
            expected: parities.len(),
            got: perm.len(),
        });
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(BracketError::IndexOutOfRange {
                index: p,
                len: perm.len(),
            });
        }
        seen[p] = true;
    }
    Ok(koszul_sign_unchecked(perm, parities))
}

pub(crate) fn koszul_sign_unchecked(perm: &[usize], parities: &[Parity]) -> KoszulSign {
    let mut sign_negative = false;
    let mut koszul_negative = false;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                sign_negative ^= true;
                koszul_negative ^= parities[perm[a]].times(parities[perm[b]]).is_odd();
            }
        }
    }
    KoszulSign {
        sign_negative,
        koszul_negative,
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}
