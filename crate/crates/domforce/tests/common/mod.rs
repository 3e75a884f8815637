//! Shared corpus builders for the integration suites.
#![allow(dead_code)]

use domforce::{FamilySpec, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All connected labeled graphs of order 1..=max_n, by edge-mask enumeration.
/// Counts per order for max_n = 5: 1, 1, 4, 38, 728 (772 total).
pub fn exhaustive_connected(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                pairs.push((i, j));
            }
        }
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::build(n, &edges).unwrap();
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

/// Quick-scale instances of every generator family, with their spec strings.
pub fn family_instances() -> Vec<(String, Graph)> {
    let mut specs: Vec<FamilySpec> = Vec::new();
    specs.extend((1..=12).map(FamilySpec::Path));
    specs.extend((3..=15).map(FamilySpec::Cycle));
    specs.extend((2..=8).map(FamilySpec::Ladder));
    for m in 1..=6 {
        for n in 1..=4 {
            specs.push(FamilySpec::CoconutTree(m, n));
        }
    }
    specs.extend((1..=5).map(FamilySpec::DiamondSnake));
    specs.extend((1..=6).map(FamilySpec::TriangularSnake));
    specs.extend((1..=4).map(FamilySpec::Hypercube));
    specs.extend((2..=10).map(FamilySpec::Complete));
    specs.extend((4..=10).map(FamilySpec::Wheel));
    specs.extend((2..=10).map(FamilySpec::DoveTail));
    for m in 2..=6 {
        for n in 2..=6 {
            specs.push(FamilySpec::CompleteBipartite(m, n));
        }
    }
    specs.extend((2..=8).map(FamilySpec::Star));
    for m in 3..=6 {
        for n in 2..=5 {
            specs.push(FamilySpec::Pineapple(m, n));
        }
    }
    specs.extend((4..=7).map(FamilySpec::Helm));
    specs.push(FamilySpec::Petersen);
    specs.extend((2..=10).map(|n| FamilySpec::Split(Box::new(FamilySpec::Path(n)))));
    specs.extend((3..=10).map(|n| FamilySpec::Split(Box::new(FamilySpec::Cycle(n)))));
    specs.extend((2..=6).map(|n| FamilySpec::Split(Box::new(FamilySpec::Star(n)))));
    specs.extend((2..=6).map(|n| FamilySpec::Split(Box::new(FamilySpec::Ladder(n)))));
    specs
        .into_iter()
        .map(|s| (s.to_string(), s.generate().unwrap()))
        .collect()
}

/// Deterministic random connected graphs with orders drawn from lo..=hi.
pub fn random_connected(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.random_range(lo..=hi);
        let p = rng.random_range(0.25..0.75);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.random_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::build(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// True when g is a path graph (including the one-vertex path).
pub fn is_path_graph(g: &Graph) -> bool {
    if !g.is_connected() {
        return false;
    }
    if g.order() == 1 {
        return g.edge_count() == 0;
    }
    let leaves = (0..g.order()).filter(|&v| g.degree(v) == 1).count();
    g.edge_count() == g.order() - 1 && leaves == 2 && g.max_degree() <= 2
}

/// True when `path` is an induced path of g (consecutive vertices adjacent,
/// all other pairs non-adjacent).
pub fn is_induced_path(g: &Graph, path: &[usize]) -> bool {
    for (a, &u) in path.iter().enumerate() {
        for (b, &w) in path.iter().enumerate().skip(a + 1) {
            let adjacent = g.has_edge(u, w);
            if (b == a + 1) != adjacent {
                return false;
            }
        }
    }
    !path.is_empty()
}

/// The order-8 graph used in the propagation-time walkthrough: a 6-cycle
/// v1..v6 with a tail v6-v7-v8.
pub fn tailed_cycle() -> Graph {
    Graph::build(
        8,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (5, 6), (6, 7)],
    )
    .unwrap()
}
