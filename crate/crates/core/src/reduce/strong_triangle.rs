use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clique::{greedy_coloring, max_clique_with, CliqueQuery, SeedOrder};
use crate::graph::Graph;

use super::{Instance, Stage};

/// How the clique number of a common neighbourhood is bounded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrongTriangleMode {
    /// Exact maximum clique of `G[N(u) ∩ N(v)]`.
    #[default]
    Clique,
    /// Number of distinct colors on `N(u) ∩ N(v)` under a greedy coloring.
    Color,
}

impl FromStr for StrongTriangleMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "clique" => Ok(StrongTriangleMode::Clique),
            "color" => Ok(StrongTriangleMode::Color),
            other => Err(format!("unknown strong-triangle mode `{other}` (expected clique or color)")),
        }
    }
}

/// Deletes edges `{u, v}` whose common neighbourhood cannot hold a clique of
/// more than `lb - 3` vertices, repeating until no edge qualifies.
///
/// Stronger than the plain triangle rule and considerably more expensive, so
/// the pipeline only runs it on request.
pub fn triangle_strong_reduce(mut inst: Instance, mode: StrongTriangleMode) -> Instance {
    let start = Instant::now();
    let limit = inst.threshold(3);
    if limit < 0 {
        inst.record(Stage::StrongTriangle, start.elapsed());
        return inst;
    }
    let limit = limit as usize;
    let mut graph = inst.graph.clone();
    let mut removed: Vec<(usize, usize)> = Vec::new();
    loop {
        let doomed = weak_edges(&graph, limit, mode);
        if doomed.is_empty() {
            break;
        }
        graph = graph
            .remove_edges(&doomed)
            .expect("weak edges come from the graph");
        removed.extend(doomed);
    }
    inst.apply(Stage::StrongTriangle, &removed, &[], &[], start.elapsed());
    inst
}

fn weak_edges(g: &Graph, limit: usize, mode: StrongTriangleMode) -> Vec<(usize, usize)> {
    let colors = match mode {
        StrongTriangleMode::Color => Some(greedy_coloring(g, &SeedOrder::DegDesc.order(g))),
        StrongTriangleMode::Clique => None,
    };
    let edges: Vec<(usize, usize)> = g.edges().collect();
    edges
        .into_par_iter()
        .filter(|&(u, v)| {
            let common = common_neighbors(g.neighbors(u), g.neighbors(v));
            if common.len() <= limit {
                return true;
            }
            match &colors {
                Some(c) => {
                    let mut seen: Vec<usize> = common.iter().map(|&w| c.color(w)).collect();
                    seen.sort_unstable();
                    seen.dedup();
                    seen.len() <= limit
                }
                None => {
                    let sub = g.induced_sorted(&common);
                    max_clique_with(&sub, &CliqueQuery::above(limit)).clique.is_none()
                }
            }
        })
        .collect()
}

fn common_neighbors(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}
