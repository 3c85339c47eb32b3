//! Lower bounds on θ(G, k) from restricted clique formulations.
//!
//! Restricting the clique constraints of the covering formulation to a
//! family of cliques gives a relaxation, so its optimum bounds θ from below.
//! For one disjoint family the optimum is the smallest `y` with
//! `f(y) = Σ max(0, |C| - y) ≤ k`. For two disjoint families, vertices shared
//! by a clique of each family can pay both deficits at once; the best such
//! sharing is a maximum flow through a three-layer network.

mod flow;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::clique::CliqueFamily;

pub use flow::MaxFlow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundMethod {
    Disjoint,
    Bipartite,
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub lb: usize,
    pub method: BoundMethod,
    pub elapsed: Duration,
    pub families: Vec<CliqueFamily>,
}

/// `Σ_{C} max(0, |C| - y)`: removals needed to shrink every member to `y`.
pub fn coverage_deficit(family: &CliqueFamily, y: usize) -> usize {
    family
        .cliques()
        .iter()
        .map(|c| c.size().saturating_sub(y))
        .sum()
}

/// Smallest `y` in `0..=hi` with `pred(y)`, for a predicate monotone in `y`
/// that holds at `hi`.
fn smallest_satisfying(hi: usize, mut pred: impl FnMut(usize) -> bool) -> usize {
    let (mut lo, mut hi) = (0, hi);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Optimum of the covering formulation restricted to one disjoint family.
pub fn disjoint_lower_bound(family: &CliqueFamily, k: usize) -> BoundReport {
    debug_assert!(family.is_disjoint());
    let start = Instant::now();
    let lb = smallest_satisfying(family.max_size(), |y| coverage_deficit(family, y) <= k);
    BoundReport {
        lb,
        method: BoundMethod::Disjoint,
        elapsed: start.elapsed(),
        families: vec![family.clone()],
    }
}

/// Source, sink, one node per clique of positive deficit in each family;
/// `S -> C1` carries the deficit of `C1`, `C2 -> T` the deficit of `C2`, and
/// `C1 -> C2` the number of shared vertices.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    flow: MaxFlow,
    pub first_layer: Vec<usize>,
    pub second_layer: Vec<usize>,
}

impl FlowNetwork {
    pub const SOURCE: usize = 0;
    pub const SINK: usize = 1;

    pub fn build(c1: &CliqueFamily, c2: &CliqueFamily, y: usize) -> Self {
        let first_layer: Vec<usize> = (0..c1.len())
            .filter(|&i| c1.cliques()[i].size() > y)
            .collect();
        let second_layer: Vec<usize> = (0..c2.len())
            .filter(|&j| c2.cliques()[j].size() > y)
            .collect();
        let mut flow = MaxFlow::new(2 + first_layer.len() + second_layer.len());
        let second_base = 2 + first_layer.len();

        let max_vertex = c2
            .cliques()
            .iter()
            .flat_map(|c| c.vertices().last().copied())
            .max();
        let mut owner2 = vec![usize::MAX; max_vertex.map_or(0, |m| m + 1)];
        for (slot, &j) in second_layer.iter().enumerate() {
            let clique = &c2.cliques()[j];
            for &v in clique.vertices() {
                owner2[v] = slot;
            }
            flow.add_arc(second_base + slot, Self::SINK, (clique.size() - y) as u64);
        }

        let mut shared: Vec<(usize, u64)> = Vec::new();
        for (slot, &i) in first_layer.iter().enumerate() {
            let clique = &c1.cliques()[i];
            flow.add_arc(Self::SOURCE, 2 + slot, (clique.size() - y) as u64);
            shared.clear();
            for &v in clique.vertices() {
                if let Some(&o) = owner2.get(v) {
                    if o != usize::MAX {
                        match shared.iter_mut().find(|(s, _)| *s == o) {
                            Some((_, c)) => *c += 1,
                            None => shared.push((o, 1)),
                        }
                    }
                }
            }
            for &(o, c) in &shared {
                flow.add_arc(2 + slot, second_base + o, c);
            }
        }
        FlowNetwork {
            flow,
            first_layer,
            second_layer,
        }
    }

    /// All arcs as `(from, to, capacity)`.
    pub fn arcs(&self) -> Vec<(usize, usize, u64)> {
        self.flow.arcs()
    }

    pub fn max_flow(mut self) -> u64 {
        let value = self.flow.max_flow(Self::SOURCE, Self::SINK);
        if self.flow.nodes() <= 64 {
            let side = self.flow.source_side(Self::SOURCE);
            debug_assert_eq!(self.flow.cut_capacity(&side), value, "max-flow/min-cut mismatch");
        }
        value
    }
}

/// `h(C1, C2, y)`: the largest number of removals that count against a
/// clique of each family at once.
pub fn bipartite_overlap(c1: &CliqueFamily, c2: &CliqueFamily, y: usize) -> usize {
    FlowNetwork::build(c1, c2, y).max_flow() as usize
}

/// `f'(y) = f(C1, y) + f(C2, y) - h(C1, C2, y)`.
pub fn bipartite_deficit(c1: &CliqueFamily, c2: &CliqueFamily, y: usize) -> usize {
    coverage_deficit(c1, y) + coverage_deficit(c2, y) - bipartite_overlap(c1, c2, y)
}

/// Optimum of the covering formulation restricted to the union of two
/// disjoint families.
pub fn bipartite_lower_bound(c1: &CliqueFamily, c2: &CliqueFamily, k: usize) -> BoundReport {
    debug_assert!(c1.is_disjoint() && c2.is_disjoint());
    let start = Instant::now();
    let mut covered: Vec<usize> = c1
        .cliques()
        .iter()
        .chain(c2.cliques())
        .flat_map(|c| c.vertices().iter().copied())
        .collect();
    covered.sort_unstable();
    covered.dedup();
    let c1 = prune_small(c1);
    let c2 = prune_small(c2);
    let hi = c1.max_size().max(c2.max_size());
    let mut lb = smallest_satisfying(hi, |y| bipartite_deficit(&c1, &c2, y) <= k);
    // With singletons restored, y = 0 means deleting every covered vertex.
    if lb == 0 && covered.len() > k {
        lb = 1;
    }
    BoundReport {
        lb,
        method: BoundMethod::Bipartite,
        elapsed: start.elapsed(),
        families: vec![c1, c2],
    }
}

/// Drops singletons, which have no deficit for any `y ≥ 1`.
fn prune_small(family: &CliqueFamily) -> CliqueFamily {
    if family.cliques().iter().all(|c| c.size() > 1) {
        return family.clone();
    }
    CliqueFamily::new(
        family
            .cliques()
            .iter()
            .filter(|c| c.size() > 1)
            .cloned()
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::Clique;

    fn fam(cliques: &[&[usize]]) -> CliqueFamily {
        CliqueFamily::new(cliques.iter().map(|c| Clique::new(c.to_vec())).collect())
    }

    #[test]
    fn deficit_arithmetic() {
        let f = CliqueFamily::from_sizes(&[5, 3, 2]);
        assert_eq!(coverage_deficit(&f, 3), 2);
        assert_eq!(coverage_deficit(&f, 0), 10);
        assert_eq!(coverage_deficit(&CliqueFamily::default(), 4), 0);
    }

    #[test]
    fn disjoint_bound_examples() {
        let f = CliqueFamily::from_sizes(&[5, 3, 2]);
        assert_eq!(disjoint_lower_bound(&f, 2).lb, 3);
        assert_eq!(disjoint_lower_bound(&CliqueFamily::from_sizes(&[4, 4]), 1).lb, 4);
        assert_eq!(disjoint_lower_bound(&CliqueFamily::from_sizes(&[5]), 2).lb, 3);
        assert_eq!(disjoint_lower_bound(&CliqueFamily::from_sizes(&[5]), 5).lb, 0);
        assert_eq!(disjoint_lower_bound(&CliqueFamily::default(), 0).lb, 0);
    }

    // a=0, b=1, c=2, d=3, e=4, f=5
    #[test]
    fn overlap_examples() {
        assert_eq!(bipartite_overlap(&fam(&[&[0, 1, 2]]), &fam(&[&[0, 3, 4]]), 2), 1);
        assert_eq!(bipartite_overlap(&fam(&[&[0, 1, 2, 3]]), &fam(&[&[0, 1, 4, 5]]), 2), 2);
        let c1 = fam(&[&[0, 1, 2], &[3, 4]]);
        let c2 = fam(&[&[5, 6, 7], &[8, 9]]);
        for y in 0..4 {
            assert_eq!(bipartite_overlap(&c1, &c2, y), 0);
        }
    }

    #[test]
    fn bipartite_bound_examples() {
        let c1 = fam(&[&[0, 1, 2]]);
        let c2 = fam(&[&[0, 3, 4]]);
        assert_eq!(bipartite_deficit(&c1, &c2, 2), 1);
        assert_eq!(bipartite_deficit(&c1, &c2, 1), 3);
        assert_eq!(bipartite_lower_bound(&c1, &c2, 1).lb, 2);

        // No shared vertices: plain deficit over the union.
        let c1 = fam(&[&[0, 1, 2, 3], &[4, 5]]);
        let c2 = fam(&[&[6, 7, 8]]);
        let union = fam(&[&[0, 1, 2, 3], &[4, 5], &[6, 7, 8]]);
        for k in 0..8 {
            assert_eq!(
                bipartite_lower_bound(&c1, &c2, k).lb,
                disjoint_lower_bound(&union, k).lb
            );
        }
    }

    #[test]
    fn network_shape() {
        let net = FlowNetwork::build(&fam(&[&[0, 1, 2]]), &fam(&[&[0, 3, 4]]), 2);
        let mut arcs = net.arcs();
        arcs.sort();
        // S=0, T=1, first layer node 2, second layer node 3
        assert_eq!(arcs, vec![(0, 2, 1), (2, 3, 1), (3, 1, 1)]);
    }
}
