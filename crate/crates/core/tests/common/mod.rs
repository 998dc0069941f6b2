#![allow(dead_code)]

use indset_core::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All unordered pairs of `0..n`, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Every labeled simple graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let ps = pairs(n);
    (0u64..1 << ps.len())
        .map(|mask| {
            let edges = ps.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, e)| *e);
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

/// `count` random graphs with sizes in `sizes` and edge densities spread
/// over `0.1..0.9`, from a fixed seed.
pub fn random_graphs(seed: u64, count: usize, sizes: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            let p = rng.gen_range(0.1..0.9);
            random_graph(&mut rng, n, p)
        })
        .collect()
}

/// Independent sets by scanning every subset of the vertex set, sorted by
/// size and then by sorted vertex list. 0-indexed.
pub fn brute_force_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    assert!(n <= 24, "brute force only for small graphs");
    let edges = g.edges();
    let mut sets: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|&mask| edges.iter().all(|&(i, j)| mask >> i & 1 == 0 || mask >> j & 1 == 0))
        .map(|mask| (0..n).filter(|v| mask >> v & 1 == 1).collect())
        .collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets
}

/// Counts by cardinality from the brute-force scan, trailing zeros dropped.
pub fn brute_force_counts(g: &Graph) -> Vec<u64> {
    let mut counts = vec![0u64; g.n() + 1];
    for s in brute_force_independent_sets(g) {
        counts[s.len()] += 1;
    }
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    counts
}

pub fn to_vec(s: &VertexSet) -> Vec<usize> {
    s.iter().collect()
}

/// Ten fixed 4-vertex graphs covering the isomorphism types with varied
/// independence numbers (1-indexed edges).
pub fn ten_four_vertex_graphs() -> Vec<(&'static str, Graph)> {
    let g = |edges: &[(usize, usize)]| {
        Graph::from_edges(4, edges.iter().map(|&(a, b)| (a - 1, b - 1))).unwrap()
    };
    vec![
        ("edgeless", g(&[])),
        ("single edge", g(&[(1, 2)])),
        ("two disjoint edges", g(&[(1, 2), (3, 4)])),
        ("path P4", g(&[(1, 2), (2, 3), (3, 4)])),
        ("star K1,3", g(&[(1, 2), (1, 3), (1, 4)])),
        ("triangle plus isolated", g(&[(1, 2), (2, 3), (1, 3)])),
        ("cycle C4", g(&[(1, 2), (2, 3), (3, 4), (1, 4)])),
        ("paw", g(&[(1, 2), (2, 3), (1, 3), (3, 4)])),
        ("diamond", g(&[(1, 2), (2, 3), (1, 3), (2, 4), (3, 4)])),
        ("complete K4", g(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])),
    ]
}
