#![allow(dead_code)]

use cip_core::clique::{greedy_disjoint_cliques, CliqueFamily, SeedOrder};
use cip_core::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const DENSITIES: [f64; 5] = [0.2, 0.35, 0.5, 0.65, 0.8];

pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// A reproducible stream of `(graph, k)` pairs with `n` in `6..=12`.
pub fn random_instances(seed: u64, count: usize) -> Vec<(Graph, usize)> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(6..=12);
            let p = DENSITIES[i % DENSITIES.len()];
            let k = rng.gen_range(0..=3);
            (gnp(n, p, &mut rng), k)
        })
        .collect()
}

/// ω(G − S) by brute force over the survivors.
pub fn omega_without(g: &Graph, s: &[usize]) -> usize {
    let (rest, _) = g.remove_vertices(s);
    cip_core::oracle::brute_force_omega(&rest).unwrap()
}

/// Optimum of the clique-covering formulation restricted to `cliques`:
/// the smallest `y` such that at most `k` deletions leave every listed
/// clique with at most `y` vertices.
pub fn restricted_optimum(cliques: &[&CliqueFamily], k: usize) -> usize {
    let mut universe: Vec<usize> = cliques
        .iter()
        .flat_map(|f| f.cliques().iter().flat_map(|c| c.vertices().iter().copied()))
        .collect();
    universe.sort_unstable();
    universe.dedup();
    assert!(universe.len() <= 16, "clique union too large for enumeration");
    let members: Vec<u32> = cliques
        .iter()
        .flat_map(|f| f.cliques().iter())
        .map(|c| {
            c.vertices()
                .iter()
                .map(|v| 1u32 << universe.binary_search(v).unwrap())
                .fold(0, |a, b| a | b)
        })
        .collect();
    let mut best = usize::MAX;
    for s in 0u32..1 << universe.len() {
        if s.count_ones() as usize > k {
            continue;
        }
        let worst = members
            .iter()
            .map(|&c| (c & !s).count_ones() as usize)
            .max()
            .unwrap_or(0);
        best = best.min(worst);
    }
    best
}

pub fn families(g: &Graph) -> (CliqueFamily, CliqueFamily) {
    (
        greedy_disjoint_cliques(g, &SeedOrder::DegDesc.order(g)),
        greedy_disjoint_cliques(g, &SeedOrder::DegAsc.order(g)),
    )
}

pub fn data_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
        .join(name)
}
