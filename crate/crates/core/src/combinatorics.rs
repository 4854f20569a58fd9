//! Signed unshuffles and the counts `𝒞(k, j)`.
//!
//! An unshuffle in `Sh(k-j, j-1)` is a permutation `σ` of `1..=k-1` with
//! `σ(1) < ⋯ < σ(k-j)` and `σ(k-j+1) < ⋯ < σ(k-1)`; the element `x_k` stays
//! fixed at the end. `𝒞(k, j)` is the number of even ones minus the odd ones.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("need 1 <= j <= k, got k = {k}, j = {j}")]
    OutOfRange { k: usize, j: usize },
    #[error("for j = k the first block is empty and no element can be fixed first")]
    EmptyFirstBlock,
}

/// `C^n_m`, zero outside `0 <= m <= n`.
pub fn binomial(n: i64, m: i64) -> BigInt {
    if n < 0 || m < 0 || m > n {
        return BigInt::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for i in 0..m {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedUnshuffle {
    images: Vec<usize>,
    first_block: usize,
    negative: bool,
}

impl SignedUnshuffle {
    /// `σ(1), …, σ(k-1)`, one-based.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Zero-based images, convenient for indexing argument lists.
    pub fn zero_based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i - 1).collect()
    }

    pub fn first_block(&self) -> &[usize] {
        &self.images[..self.first_block]
    }

    pub fn second_block(&self) -> &[usize] {
        &self.images[self.first_block..]
    }

    pub fn is_odd(&self) -> bool {
        self.negative
    }

    pub fn sign(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for SignedUnshuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |b: &[usize]| b.iter().map(|i| i.to_string()).join(" ");
        write!(
            f,
            "{}({} | {})",
            if self.negative { '-' } else { '+' },
            show(self.first_block()),
            show(self.second_block())
        )
    }
}

fn check(k: usize, j: usize) -> Result<(), CombinatoricsError> {
    if j == 0 || j > k {
        Err(CombinatoricsError::OutOfRange { k, j })
    } else {
        Ok(())
    }
}

/// All of `Sh(k-j, j-1)`, ordered lexicographically by the first block.
pub fn enumerate_unshuffles(
    k: usize,
    j: usize,
) -> Result<Vec<SignedUnshuffle>, CombinatoricsError> {
    check(k, j)?;
    let a = k - j;
    Ok((1..k)
        .combinations(a)
        .map(|first| {
            let second: Vec<usize> = (1..k).filter(|i| !first.contains(i)).collect();
            // inversions: pairs (s in first, t in second) with s > t
            let inversions: usize = first
                .iter()
                .map(|&s| second.iter().filter(|&&t| t < s).count())
                .sum();
            let mut images = first;
            images.extend(second);
            SignedUnshuffle {
                images,
                first_block: a,
                negative: inversions % 2 == 1,
            }
        })
        .collect())
}

pub fn signed_count_brute_force(k: usize, j: usize) -> Result<BigInt, CombinatoricsError> {
    Ok(enumerate_unshuffles(k, j)?
        .iter()
        .map(|s| BigInt::from(s.sign()))
        .sum())
}

/// The four-case binomial formula for `𝒞(k, j)`.
pub fn signed_count_closed_form(k: usize, j: usize) -> Result<BigInt, CombinatoricsError> {
    check(k, j)?;
    let (p, q) = ((k / 2) as i64, (j / 2) as i64);
    Ok(match (k % 2, j % 2) {
        (0, 0) => binomial(p - 1, q - 1),
        (1, 0) => BigInt::zero(),
        (0, 1) => binomial(p - 1, q),
        _ => binomial(p, q),
    })
}

/// Right-hand side of the parity-transfer recursion obtained by fixing the
/// first element `x_r` of the first block:
/// `Σ_{r=1}^{j} (-1)^{(r-1)(k-j)} 𝒞(k-r, j-r+1)`. Needs `j < k`.
pub fn parity_transfer_sum(k: usize, j: usize) -> Result<BigInt, CombinatoricsError> {
    check(k, j)?;
    if j == k {
        return Err(CombinatoricsError::EmptyFirstBlock);
    }
    let mut acc = BigInt::zero();
    for r in 1..=j {
        let term = signed_count_brute_force(k - r, j - r + 1)?;
        if ((r - 1) * (k - j)) % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc)
}

/// Number of unshuffles with `σ(1) = r` for `r = 1..=j`; the entries are
/// `C^{k-1-r}_{k-j-1}` and sum to `C^{k-1}_{j-1}`. Needs `j < k`.
pub fn hockey_stick_decomposition(k: usize, j: usize) -> Result<Vec<BigInt>, CombinatoricsError> {
    check(k, j)?;
    if j == k {
        return Err(CombinatoricsError::EmptyFirstBlock);
    }
    Ok((1..=j)
        .map(|r| binomial((k - 1 - r) as i64, (k - j - 1) as i64))
        .collect())
}

/// The three index-eliminating sums, each compared against its closed form:
/// `Σ_{r=p}^{m-1} C^{r-1}_{p-1} = C^{m-1}_p`,
/// `Σ_{u=q}^{m-1} C^u_q = C^m_{q+1}`,
/// `Σ_{v=q+1}^{m-1} C^{v-1}_q = C^{m-1}_{q+1}`.
pub fn binomial_telescopes(m: i64, p: i64, q: i64) -> [bool; 3] {
    let first: BigInt = (p..m).map(|r| binomial(r - 1, p - 1)).sum();
    let second: BigInt = (q..m).map(|u| binomial(u, q)).sum();
    let third: BigInt = (q + 1..m).map(|v| binomial(v - 1, q)).sum();
    [
        first == binomial(m - 1, p),
        second == binomial(m, q + 1),
        third == binomial(m - 1, q + 1),
    ]
}
