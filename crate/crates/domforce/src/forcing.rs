//! The zero forcing color-change process.
//!
//! Color-change rule: a black vertex with exactly one white neighbor forces
//! that neighbor black. The engine is round-synchronous: every force eligible
//! at the start of a round commits at the end of it, which is the semantics
//! propagation time is defined over. The final black set is the same as under
//! the one-force-at-a-time rule.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// One force: `forcer` turned `forced` black.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ForceEvent {
    pub forcer: usize,
    pub forced: usize,
}

/// All forces that fired in one synchronous round.
#[derive(Clone, Debug, Serialize)]
pub struct ForcingRound {
    /// 1-based round number.
    pub index: usize,
    pub forces: Vec<ForceEvent>,
}

/// Round-by-round record of the color-change process started from `initial`.
#[derive(Clone, Debug)]
pub struct ForcingTrace {
    pub initial: VertexSet,
    pub rounds: Vec<ForcingRound>,
    pub final_set: VertexSet,
}

impl ForcingTrace {
    /// True when the process blackened the whole graph.
    pub fn is_complete(&self) -> bool {
        self.final_set.is_full()
    }

    /// Rounds until fixpoint. Equals pt(G, B) when the trace is complete.
    pub fn round_count(&self) -> usize {
        self.rounds.len()
    }

    /// Vertices first blackened in the given 1-based round.
    pub fn newly_black(&self, index: usize) -> VertexSet {
        let mut s = VertexSet::empty(self.initial.universe());
        if let Some(r) = self.rounds.iter().find(|r| r.index == index) {
            for e in &r.forces {
                s.insert(e.forced);
            }
        }
        s
    }
}

/// Runs the round-synchronous color-change process to its fixpoint.
///
/// Every round scans the black set against the state at round start; when two
/// black vertices could force the same white vertex, the recorded event goes
/// to the lowest-id forcer (the closure itself does not depend on this).
/// A round with no eligible force terminates the process, so a non-forcing
/// `b` yields a partial trace rather than an error.
pub fn forcing_closure(g: &Graph, b: &VertexSet) -> ForcingTrace {
    assert_eq!(b.universe(), g.order(), "set universe must match graph order");
    let mut black = b.clone();
    let mut rounds = Vec::new();
    loop {
        let mut forces: Vec<ForceEvent> = Vec::new();
        let mut claimed = VertexSet::empty(g.order());
        for v in black.iter() {
            let white = g.neighbors(v).difference(&black);
            if white.len() == 1 {
                let w = white.first().unwrap();
                if !claimed.contains(w) {
                    claimed.insert(w);
                    forces.push(ForceEvent { forcer: v, forced: w });
                }
            }
        }
        if forces.is_empty() {
            break;
        }
        black.union_with(&claimed);
        rounds.push(ForcingRound {
            index: rounds.len() + 1,
            forces,
        });
    }
    ForcingTrace {
        initial: b.clone(),
        rounds,
        final_set: black,
    }
}

/// True iff the closure of `b` is the whole vertex set.
pub fn is_zero_forcing_set(g: &Graph, b: &VertexSet) -> bool {
    forcing_closure(g, b).is_complete()
}

/// pt(G, B): rounds until all of V is black. Errors when `b` does not force.
pub fn propagation_time(g: &Graph, b: &VertexSet) -> Result<usize> {
    let trace = forcing_closure(g, b);
    if trace.is_complete() {
        Ok(trace.round_count())
    } else {
        Err(Error::NotForcingSet)
    }
}

/// Partition of the vertices into forcing chains, one per initial vertex.
#[derive(Clone, Debug)]
pub struct ForcingChains {
    /// Each chain starts at an initial vertex and lists the successive
    /// vertices it forced; chains are ordered by their starting vertex.
    pub chains: Vec<Vec<usize>>,
}

/// Follows the force events of a complete trace: the chain of an initial
/// vertex v is v, the vertex v forced, the vertex that one forced, and so on.
/// Chains partition V and there are exactly |B| of them; each is an induced
/// path (a vertex forces at most once, and a chord would have given some
/// forcer two white neighbors at its forcing round).
pub fn extract_chains(trace: &ForcingTrace) -> Result<ForcingChains> {
    if !trace.is_complete() {
        return Err(Error::IncompleteTrace);
    }
    let n = trace.initial.universe();
    let mut successor = vec![usize::MAX; n];
    for round in &trace.rounds {
        for e in &round.forces {
            debug_assert_eq!(successor[e.forcer], usize::MAX, "a vertex forces at most once");
            successor[e.forcer] = e.forced;
        }
    }
    let mut chains = Vec::with_capacity(trace.initial.len());
    for start in trace.initial.iter() {
        let mut chain = vec![start];
        let mut v = start;
        while successor[v] != usize::MAX {
            v = successor[v];
            chain.push(v);
        }
        chains.push(chain);
    }
    Ok(ForcingChains { chains })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::FamilySpec;

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(n, ids.iter().copied()).unwrap()
    }

    /// The 6-cycle v1..v6 with the tail v6-v7-v8 used by the propagation
    /// time example: pt with {v1,v2} is 5 and with {v5,v8} is 4.
    fn example_graph() -> Graph {
        Graph::build(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (5, 6), (6, 7)],
        )
        .unwrap()
    }

    #[test]
    fn path_end_forces_everything() {
        let p4 = FamilySpec::Path(4).generate().unwrap();
        let trace = forcing_closure(&p4, &set(4, &[0]));
        assert!(trace.is_complete());
        assert_eq!(trace.round_count(), 3);
    }

    #[test]
    fn adjacent_pair_forces_cycle() {
        let c5 = FamilySpec::Cycle(5).generate().unwrap();
        assert!(is_zero_forcing_set(&c5, &set(5, &[0, 1])));
    }

    #[test]
    fn star_center_stalls_immediately() {
        let star = FamilySpec::Star(3).generate().unwrap();
        let trace = forcing_closure(&star, &set(4, &[0]));
        assert!(!trace.is_complete());
        assert_eq!(trace.round_count(), 0);
        assert_eq!(trace.final_set.to_vec(), vec![0]);
    }

    #[test]
    fn full_set_forces_in_zero_rounds() {
        let g = FamilySpec::Cycle(6).generate().unwrap();
        let trace = forcing_closure(&g, &VertexSet::full(6));
        assert!(trace.is_complete());
        assert_eq!(trace.round_count(), 0);
        assert_eq!(propagation_time(&g, &VertexSet::full(6)).unwrap(), 0);
    }

    #[test]
    fn example_graph_propagation_times() {
        let g = example_graph();
        assert_eq!(propagation_time(&g, &set(8, &[0, 1])).unwrap(), 5);
        assert_eq!(propagation_time(&g, &set(8, &[4, 7])).unwrap(), 4);
        // round-by-round for B1 = {v1, v2}
        let trace = forcing_closure(&g, &set(8, &[0, 1]));
        assert_eq!(trace.newly_black(1).to_vec(), vec![2, 5]);
        assert_eq!(trace.newly_black(2).to_vec(), vec![3]);
        assert_eq!(trace.newly_black(3).to_vec(), vec![4]);
        assert_eq!(trace.newly_black(4).to_vec(), vec![6]);
        assert_eq!(trace.newly_black(5).to_vec(), vec![7]);
    }

    #[test]
    fn non_forcing_set_is_an_error_for_pt() {
        let star = FamilySpec::Star(3).generate().unwrap();
        assert!(matches!(
            propagation_time(&star, &set(4, &[0])),
            Err(Error::NotForcingSet)
        ));
    }

    #[test]
    fn round_sets_are_disjoint_and_cover_final() {
        let g = FamilySpec::Ladder(4).generate().unwrap();
        let b = set(8, &[0, 4]);
        let trace = forcing_closure(&g, &b);
        let mut seen = b.clone();
        for round in &trace.rounds {
            for e in &round.forces {
                assert!(!seen.contains(e.forced), "no vertex is forced twice");
                seen.insert(e.forced);
            }
        }
        assert_eq!(seen, trace.final_set);
    }

    #[test]
    fn closure_is_monotone_and_idempotent() {
        let g = FamilySpec::Petersen.generate().unwrap();
        let small = set(10, &[0, 1, 2]);
        let mut big = small.clone();
        big.insert(6);
        let fs = forcing_closure(&g, &small).final_set;
        let fb = forcing_closure(&g, &big).final_set;
        assert!(fs.is_subset_of(&fb));
        let again = forcing_closure(&g, &fs);
        assert_eq!(again.final_set, fs);
        assert_eq!(again.round_count(), 0);
    }

    #[test]
    fn single_chain_along_a_path() {
        let p5 = FamilySpec::Path(5).generate().unwrap();
        let trace = forcing_closure(&p5, &set(5, &[0]));
        let chains = extract_chains(&trace).unwrap();
        assert_eq!(chains.chains, vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn two_chains_cover_c16() {
        let c16 = FamilySpec::Cycle(16).generate().unwrap();
        let trace = forcing_closure(&c16, &set(16, &[0, 1]));
        let chains = extract_chains(&trace).unwrap();
        assert_eq!(chains.chains.len(), 2);
        let mut all: Vec<usize> = chains.chains.iter().flatten().copied().collect();
        all.sort();
        assert_eq!(all, (0..16).collect::<Vec<_>>());
    }

    #[test]
    fn chains_need_a_complete_trace() {
        let star = FamilySpec::Star(3).generate().unwrap();
        let trace = forcing_closure(&star, &set(4, &[0]));
        assert!(matches!(extract_chains(&trace), Err(Error::IncompleteTrace)));
    }
}
