//! Independent oracles shared by the integration tests. Nothing here calls
//! into the cell or positivity machinery of the crate.
#![allow(dead_code)]

use num_traits::Signed;
use tnnflag_core::rational::RationalMatrix;

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

/// `g B^+` is totally nonnegative iff, for each `k`, the nonzero minors on
/// the first `k` columns all share a sign (column scaling by `B^+` fixes the
/// sign of each level independently).
pub fn tnn_flag(g: &RationalMatrix) -> bool {
    let n = g.n();
    (1..n).all(|k| {
        let cols: Vec<usize> = (0..k).collect();
        let (mut pos, mut neg) = (false, false);
        for r in subsets(n, k) {
            let x = g.minor(&r, &cols);
            pos |= x.is_positive();
            neg |= x.is_negative();
        }
        !(pos && neg)
    })
}

/// Rank-matrix criterion for Bruhat order on permutations of `0..n`.
pub fn perm_bruhat_leq(v: &[usize], w: &[usize]) -> bool {
    let n = v.len();
    let count = |p: &[usize], i: usize, j: usize| (0..=i).filter(|&a| p[a] >= j).count();
    (0..n).all(|i| (0..n).all(|j| count(v, i, j) <= count(w, i, j)))
}

pub fn perm_length(p: &[usize]) -> usize {
    let n = p.len();
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count()
}
