//! Machine-word graph representation shared by the exponential solvers.
//!
//! The solver cap keeps the order at or below 64, so a vertex subset is one
//! u64 and the hot closure loop stays allocation-free.

use crate::graph::Graph;

pub(crate) struct MaskGraph {
    pub n: usize,
    /// Open neighborhood of each vertex.
    pub adj: Vec<u64>,
    /// Closed neighborhood of each vertex.
    pub closed: Vec<u64>,
    /// Union of closed[v..n], used to prune cover searches: a branch whose
    /// next candidate index is v can still cover only covered | cover_suffix[v].
    pub cover_suffix: Vec<u64>,
    pub full: u64,
    pub max_closed_degree: usize,
}

impl MaskGraph {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        assert!(n <= 64, "mask representation requires order <= 64");
        let adj: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w))
            .collect();
        let closed: Vec<u64> = (0..n).map(|v| adj[v] | 1 << v).collect();
        let mut cover_suffix = vec![0u64; n + 1];
        for v in (0..n).rev() {
            cover_suffix[v] = cover_suffix[v + 1] | closed[v];
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let max_closed_degree = closed.iter().map(|c| c.count_ones() as usize).max().unwrap();
        MaskGraph {
            n,
            adj,
            closed,
            cover_suffix,
            full,
            max_closed_degree,
        }
    }

    /// Ascending ids of a mask's members.
    pub fn mask_ids(mask: u64) -> impl Iterator<Item = usize> {
        let mut m = mask;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(v)
            }
        })
    }

    /// Fixpoint of the color-change rule from `b`.
    pub fn closure(&self, b: u64) -> u64 {
        self.closure_with_rounds(b).0
    }

    /// Closure plus the number of synchronous rounds taken to reach it.
    pub fn closure_with_rounds(&self, b: u64) -> (u64, usize) {
        let mut black = b;
        let mut rounds = 0;
        loop {
            let mut next = 0u64;
            let mut m = black;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let white = self.adj[v] & !black;
                if white.count_ones() == 1 {
                    next |= white;
                }
            }
            if next == 0 {
                return (black, rounds);
            }
            black |= next;
            rounds += 1;
        }
    }

    pub fn is_forcing(&self, b: u64) -> bool {
        self.closure(b) == self.full
    }

    /// ceil(n / (max degree + 1)), the textbook domination lower bound.
    pub fn gamma_lower_bound(&self) -> usize {
        self.n.div_ceil(self.max_closed_degree)
    }

    /// Z(G) >= min degree: when the first force fires, the forcer and all its
    /// other neighbors must already belong to the initial set.
    pub fn z_lower_bound(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .min()
            .unwrap_or(0)
            .max(1)
    }
}
