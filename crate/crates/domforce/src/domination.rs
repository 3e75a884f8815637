//! Dominating-set test and the pruned exact domination search.

use crate::graph::{Graph, VertexSet};
use crate::search::MaskGraph;

/// True iff N[d] = V: every vertex is in `d` or adjacent to a member of `d`.
pub fn is_dominating_set(g: &Graph, d: &VertexSet) -> bool {
    g.closed_neighborhood(d).is_full()
}

/// A dominating set found greedily (repeatedly take the vertex covering the
/// most uncovered vertices). Used as an upper bound by the exact search.
pub(crate) fn greedy_dominating_mask(mg: &MaskGraph) -> u64 {
    let mut chosen = 0u64;
    let mut covered = 0u64;
    while covered != mg.full {
        let best = (0..mg.n)
            .max_by_key(|&v| (mg.closed[v] & !covered).count_ones())
            .expect("nonempty graph");
        chosen |= 1 << best;
        covered |= mg.closed[best];
    }
    chosen
}

/// Exact minimum dominating set: increasing-cardinality lexicographic scan.
///
/// Two prunes keep it exact but fast: a branch dies when even taking every
/// remaining higher id cannot finish the cover, or when the uncovered count
/// exceeds what the remaining slots can cover. The first set found at a
/// cardinality is the lexicographically smallest one of that size.
/// Returns (gamma, witness mask, candidates examined).
pub(crate) fn gamma_search(mg: &MaskGraph) -> (usize, u64, u64) {
    let greedy = greedy_dominating_mask(mg);
    let ub = greedy.count_ones() as usize;
    let lb = mg.gamma_lower_bound().max(1);
    let mut explored = 0u64;
    for k in lb..=ub {
        if let Some(w) = gamma_rec(mg, k, 0, 0, 0, &mut explored) {
            return (k, w, explored);
        }
    }
    unreachable!("the greedy set guarantees success at its own cardinality");
}

fn gamma_rec(
    mg: &MaskGraph,
    remaining: usize,
    start: usize,
    chosen: u64,
    covered: u64,
    explored: &mut u64,
) -> Option<u64> {
    if covered == mg.full {
        *explored += 1;
        // any completion dominates; take the lexicographically least one
        let mut filled = chosen;
        let mut need = remaining;
        let mut v = start;
        while need > 0 {
            filled |= 1 << v;
            v += 1;
            need -= 1;
        }
        return Some(filled);
    }
    if remaining == 0 {
        *explored += 1;
        return None;
    }
    if covered | mg.cover_suffix[start] != mg.full {
        return None;
    }
    let uncovered = (mg.full & !covered).count_ones() as usize;
    if uncovered > remaining * (mg.max_closed_degree) {
        return None;
    }
    for v in start..=mg.n - remaining {
        if let Some(w) = gamma_rec(mg, remaining - 1, v + 1, chosen | 1 << v, covered | mg.closed[v], explored)
        {
            return Some(w);
        }
    }
    None
}
