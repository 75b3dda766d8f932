//! Dense ranking of sorted multisets.
//!
//! A multiset `c_0 <= c_1 <= ... <= c_{k-1}` over `0..p` maps to the strictly
//! increasing combination `c_i + i` over `0..p+k-1`, which is ranked in
//! colexicographic order: `rank = sum_i C(c_i + i, i + 1)`.

use alloc::vec;
use alloc::vec::Vec;

/// `C(n, k)` with saturation at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Number of size-`k` multisets over `p` symbols.
pub fn multiset_count(p: usize, k: usize) -> u64 {
    if p == 0 {
        return u64::from(k == 0);
    }
    binomial((p + k - 1) as u64, k as u64)
}

#[derive(Debug, Clone)]
pub struct MultisetIndex {
    p: usize,
    k: usize,
    /// `table[i][x] = C(x, i + 1)` for `x < p + k`.
    table: Vec<Vec<u64>>,
    count: usize,
}

impl MultisetIndex {
    /// Panics if the count does not fit in `usize`; callers check budgets first.
    pub fn new(p: usize, k: usize) -> Self {
        let count = multiset_count(p, k);
        assert!(count < usize::MAX as u64, "multiset space too large");
        let width = p + k;
        let table = (0..k).map(|i| (0..width).map(|x| binomial(x as u64, i as u64 + 1)).collect()).collect();
        MultisetIndex { p, k, table, count: count as usize }
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn symbols(&self) -> usize {
        self.p
    }

    pub fn size(&self) -> usize {
        self.k
    }

    /// Rank of a sorted multiset of length `k`.
    pub fn rank(&self, sorted: &[usize]) -> usize {
        debug_assert_eq!(sorted.len(), self.k);
        debug_assert!(sorted.windows(2).all(|w| w[0] <= w[1]));
        sorted.iter().enumerate().map(|(i, &c)| self.table[i][c + i] as usize).sum()
    }

    /// Writes the multiset with the given rank into `out`.
    pub fn unrank_into(&self, mut rank: usize, out: &mut [usize]) {
        debug_assert!(rank < self.count);
        let mut hi = self.p + self.k - 1;
        for i in (0..self.k).rev() {
            // Largest x <= hi with C(x, i+1) <= rank.
            let row = &self.table[i];
            let mut x = hi;
            while row[x] as usize > rank {
                x -= 1;
            }
            rank -= row[x] as usize;
            out[i] = x - i;
            hi = x.saturating_sub(1);
        }
    }

    pub fn unrank(&self, rank: usize) -> Vec<usize> {
        let mut out = vec![0; self.k];
        self.unrank_into(rank, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(17, 3), 680);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(multiset_count(15, 3), 680);
        assert_eq!(multiset_count(0, 0), 1);
        assert_eq!(multiset_count(0, 2), 0);
    }

    #[test]
    fn ranks_are_dense_and_ordered() {
        let idx = MultisetIndex::new(4, 3);
        assert_eq!(idx.len(), 20);
        let mut seen = vec![false; idx.len()];
        for a in 0..4 {
            for b in a..4 {
                for c in b..4 {
                    let r = idx.rank(&[a, b, c]);
                    assert!(!seen[r]);
                    seen[r] = true;
                    assert_eq!(idx.unrank(r), vec![a, b, c]);
                }
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    proptest! {
        #[test]
        fn unrank_inverts_rank(p in 1usize..20, k in 1usize..5, seed in any::<u64>()) {
            let idx = MultisetIndex::new(p, k);
            let r = (seed % idx.len() as u64) as usize;
            let ms = idx.unrank(r);
            prop_assert!(ms.windows(2).all(|w| w[0] <= w[1]));
            prop_assert!(ms.iter().all(|&c| c < p));
            prop_assert_eq!(idx.rank(&ms), r);
        }
    }
}
