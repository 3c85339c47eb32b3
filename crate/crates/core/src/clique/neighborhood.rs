use rayon::prelude::*;

use crate::graph::Graph;

use super::search::{max_clique_with, CliqueQuery};

/// `ω(G[N(u)])` for one vertex. When `exact` is false, `value` is only an
/// upper bound, and it is at most the `lb - 2` cap the sizes were computed
/// with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NeighborhoodClique {
    pub value: usize,
    pub exact: bool,
}

/// Exact `ω(G[N(u)])`.
pub fn neighborhood_clique_size(g: &Graph, u: usize) -> usize {
    let nbrs = g.neighbors(u);
    if nbrs.len() <= 1 {
        return nbrs.len();
    }
    let sub = g.induced_sorted(nbrs);
    max_clique_with(&sub, &CliqueQuery::default())
        .clique
        .map_or(0, |c| c.len())
}

/// `ω(G[N(u)])` for every vertex, exact wherever the value is at least
/// `lb - 1`. Smaller values may come back capped at `lb - 2`.
///
/// Neighbourhoods are solved independently and in parallel; the result does
/// not depend on scheduling.
pub fn neighborhood_clique_sizes(g: &Graph, lb: usize) -> Vec<NeighborhoodClique> {
    neighborhood_clique_sizes_reusing(g, lb, &vec![None; g.n()])
}

/// As [`neighborhood_clique_sizes`], taking `known[u]` as the answer for `u`
/// where it is set. The caller vouches that those values were computed for
/// the same `lb` on a graph where `N(u)` induced the same subgraph.
pub fn neighborhood_clique_sizes_reusing(
    g: &Graph,
    lb: usize,
    known: &[Option<NeighborhoodClique>],
) -> Vec<NeighborhoodClique> {
    debug_assert_eq!(known.len(), g.n());
    let cap = lb.saturating_sub(2);
    (0..g.n())
        .into_par_iter()
        .map(|u| known[u].unwrap_or_else(|| capped_size(g, u, cap)))
        .collect()
}

fn capped_size(g: &Graph, u: usize, cap: usize) -> NeighborhoodClique {
    let nbrs = g.neighbors(u);
    let d = nbrs.len();
    if d <= 1 {
        return NeighborhoodClique { value: d, exact: true };
    }
    if d <= cap {
        return NeighborhoodClique { value: d, exact: false };
    }
    let sub = g.induced_sorted(nbrs);
    match max_clique_with(&sub, &CliqueQuery::above(cap)).clique {
        Some(c) => NeighborhoodClique { value: c.len(), exact: true },
        None => NeighborhoodClique { value: cap, exact: false },
    }
}
