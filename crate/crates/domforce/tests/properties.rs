//! Structural properties and characterizations checked across the corpus:
//! exhaustive connected graphs of order <= 5, quick-scale family instances,
//! and seeded random connected graphs.

mod common;

use domforce::{
    extract_chains, forcing_closure, FamilySpec, Graph, Solver, VertexSet,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = common::exhaustive_connected(5)
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("exhaustive[{i}] order {}", g.order()), g))
        .collect();
    out.extend(common::family_instances());
    out.extend(
        common::random_connected(100, 4, 9, 0xD0F0)
            .into_iter()
            .enumerate()
            .map(|(i, g)| (format!("random[{i}]", i = i), g)),
    );
    out
}

#[test]
fn exhaustive_corpus_has_the_known_counts() {
    let graphs = common::exhaustive_connected(5);
    let count = |n: usize| graphs.iter().filter(|g| g.order() == n).count();
    assert_eq!(count(1), 1);
    assert_eq!(count(2), 1);
    assert_eq!(count(3), 4);
    assert_eq!(count(4), 38);
    assert_eq!(count(5), 728);
    assert_eq!(graphs.len(), 772);
}

#[test]
fn fd_is_one_exactly_for_the_two_smallest_paths() {
    let solver = Solver::new();
    for g in common::exhaustive_connected(5) {
        let fd = solver.dom_forcing_number(&g).unwrap().value;
        let is_tiny_path = g.order() <= 2;
        assert_eq!(
            fd == 1,
            is_tiny_path,
            "order {} edges {:?}: F_d = {fd}",
            g.order(),
            g.edges()
        );
    }
}

#[test]
fn z_is_one_exactly_for_paths() {
    let solver = Solver::new();
    for g in common::exhaustive_connected(5) {
        let z = solver.zero_forcing_number(&g).unwrap().value;
        assert_eq!(
            z == 1,
            common::is_path_graph(&g),
            "order {} edges {:?}: Z = {z}",
            g.order(),
            g.edges()
        );
    }
}

#[test]
fn fd_equals_gamma_residue_characterizations() {
    let solver = Solver::new();
    for n in 1..=12 {
        let g = FamilySpec::Path(n).generate().unwrap();
        let fd = solver.dom_forcing_number(&g).unwrap().value;
        let gamma = solver.domination_number(&g).unwrap().value;
        assert_eq!(fd == gamma, n % 3 != 0, "P_{n}: F_d = {fd}, gamma = {gamma}");
    }
    for n in 3..=15 {
        let g = FamilySpec::Cycle(n).generate().unwrap();
        let fd = solver.dom_forcing_number(&g).unwrap().value;
        let gamma = solver.domination_number(&g).unwrap().value;
        assert_eq!(fd == gamma, n % 3 == 1, "C_{n}: F_d = {fd}, gamma = {gamma}");
    }
}

#[test]
fn sandwich_bound_on_every_corpus_graph() {
    let solver = Solver::new();
    for (name, g) in corpus() {
        let z = solver.zero_forcing_number(&g).unwrap().value;
        let gamma = solver.domination_number(&g).unwrap().value;
        let fd = solver.dom_forcing_number(&g).unwrap().value;
        assert!(
            z.max(gamma) <= fd && fd <= z + gamma,
            "{name}: Z = {z}, gamma = {gamma}, F_d = {fd}"
        );
    }
}

#[test]
fn refined_bound_on_every_corpus_graph() {
    let solver = Solver::new();
    for (name, g) in corpus() {
        let fd = solver.dom_forcing_number(&g).unwrap().value;
        let reports = solver.fd_bounds(&g).unwrap();
        for r in reports {
            assert!(
                r.lower <= fd && fd <= r.upper,
                "{name}: F_d = {fd} outside [{}, {}] ({})",
                r.lower,
                r.upper,
                r.detail
            );
        }
    }
}

/// Grows a random set into a forcing set by adding random white vertices.
fn random_forcing_set(g: &Graph, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut b = VertexSet::empty(g.order());
    for v in 0..g.order() {
        if rng.random_bool(0.3) {
            b.insert(v);
        }
    }
    loop {
        let closure = forcing_closure(g, &b);
        if closure.is_complete() {
            return b;
        }
        let whites: Vec<usize> = closure.final_set.complement().iter().collect();
        b.insert(whites[rng.random_range(0..whites.len())]);
    }
}

#[test]
fn forcing_chains_form_an_induced_path_cover() {
    let corpus = corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC4A1);
    for _ in 0..200 {
        let (name, g) = &corpus[rng.random_range(0..corpus.len())];
        let b = random_forcing_set(g, &mut rng);
        let trace = forcing_closure(g, &b);
        let chains = extract_chains(&trace).unwrap().chains;
        assert_eq!(chains.len(), b.len(), "{name}: one chain per initial vertex");
        let mut seen = VertexSet::empty(g.order());
        for chain in &chains {
            assert!(
                common::is_induced_path(g, chain),
                "{name}: chain {chain:?} from B = {b} is not an induced path"
            );
            assert!(b.contains(chain[0]), "{name}: chain must start in B");
            for &v in chain {
                assert!(!seen.contains(v), "{name}: chains must be disjoint");
                seen.insert(v);
            }
        }
        assert!(seen.is_full(), "{name}: chains must cover every vertex");
    }
}

#[test]
fn path_cover_is_at_most_zero_forcing() {
    let solver = Solver::new();
    for (name, g) in corpus() {
        if g.order() > 12 {
            continue;
        }
        let p = solver.path_cover_number(&g).unwrap().value;
        let z = solver.zero_forcing_number(&g).unwrap().value;
        assert!(p <= z, "{name}: P = {p} > Z = {z}");
    }
}

#[test]
fn pt_one_implies_fd_equals_z() {
    let solver = Solver::new();
    let mut graphs = common::exhaustive_connected(5);
    graphs.push(FamilySpec::Petersen.generate().unwrap());
    let mut hits = 0;
    for g in &graphs {
        let pt = solver.min_propagation_time(g).unwrap().value;
        if pt == 1 {
            hits += 1;
            let z = solver.zero_forcing_number(g).unwrap().value;
            let fd = solver.dom_forcing_number(g).unwrap().value;
            assert_eq!(
                fd, z,
                "pt = 1 but F_d = {fd} != Z = {z} on edges {:?}",
                g.edges()
            );
        }
    }
    assert!(hits > 0, "the corpus contains pt = 1 graphs");

    // the converse fails: the order-6 wheel has F_d = Z but pt = 2
    let wheel = FamilySpec::Wheel(6).generate().unwrap();
    let z = solver.zero_forcing_number(&wheel).unwrap().value;
    let fd = solver.dom_forcing_number(&wheel).unwrap().value;
    let pt = solver.min_propagation_time(&wheel).unwrap().value;
    assert_eq!(fd, 3);
    assert_eq!(z, 3);
    assert_eq!(pt, 2);
}

/// Builds a graph on n vertices from an edge-selection mask.
fn mask_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if mask >> (bit % 64) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::build(n, &edges).unwrap()
}

proptest! {
    #[test]
    fn closure_is_monotone(n in 1usize..=8, mask: u64, black: u64, extra: u64) {
        let g = mask_graph(n, mask);
        let all = (1u64 << n) - 1;
        let b = VertexSet::from_ids(n, bits(black & all)).unwrap();
        let mut bigger = b.clone();
        for v in bits(extra & all) {
            bigger.insert(v);
        }
        let small = forcing_closure(&g, &b).final_set;
        let large = forcing_closure(&g, &bigger).final_set;
        prop_assert!(small.is_subset_of(&large));
    }

    #[test]
    fn closure_is_idempotent_and_extensive(n in 1usize..=8, mask: u64, black: u64) {
        let g = mask_graph(n, mask);
        let all = (1u64 << n) - 1;
        let b = VertexSet::from_ids(n, bits(black & all)).unwrap();
        let once = forcing_closure(&g, &b).final_set;
        prop_assert!(b.is_subset_of(&once));
        let twice = forcing_closure(&g, &once).final_set;
        prop_assert_eq!(once.to_vec(), twice.to_vec());
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}
