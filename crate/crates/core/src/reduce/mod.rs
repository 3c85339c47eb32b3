//! Reduction rules that shrink `(G, k)` while keeping θ(G, k) unchanged, and
//! the staged preprocessing pipeline built from them.
//!
//! Every rule consumes an [`Instance`] and returns a compacted one. Vertices
//! deleted for free are recorded in `removed_free`; vertices committed to the
//! interdiction set are recorded in `forced` and paid for out of `k`.

mod clique_rules;
mod color;
mod degree_triangle;
mod domination;
mod pipeline;
mod strong_triangle;

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexMap};

pub use clique_rules::{exact_clique_reduce, interdiction_reduce};
pub use color::{color_reduce, color_reduce_counted};
pub use degree_triangle::{degree_reduce, degree_triangle_reduce, triangle_reduce, DegreeTriangleRules};
pub use domination::domination_pairs;
pub use pipeline::{preprocess, PreprocessConfig, Preprocessed};
pub use strong_triangle::{triangle_strong_reduce, StrongTriangleMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    DisjointBound,
    DegreeTriangle,
    Color,
    BipartiteBound,
    StrongTriangle,
    ExactClique,
    Interdiction,
    Domination,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::DisjointBound => "disjoint-bound",
            Stage::DegreeTriangle => "degree-triangle",
            Stage::Color => "color",
            Stage::BipartiteBound => "bipartite-bound",
            Stage::StrongTriangle => "strong-triangle",
            Stage::ExactClique => "exact-clique",
            Stage::Interdiction => "interdiction",
            Stage::Domination => "domination",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StageStats {
    pub stage: Stage,
    pub vertices_removed: usize,
    pub edges_removed: usize,
    pub seconds: f64,
}

/// A reduced instance together with everything needed to lift a solution of
/// it back to the input graph.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    /// Remaining budget.
    pub k: usize,
    /// A value known not to exceed θ(graph, k).
    pub lb: usize,
    /// Input-graph ids committed to the interdiction set.
    pub forced: Vec<usize>,
    /// Input-graph ids deleted without using budget.
    pub removed_free: Vec<usize>,
    /// Current id to input-graph id.
    pub map: VertexMap,
    pub stage_stats: Vec<StageStats>,
}

impl Instance {
    pub fn new(graph: Graph, k: usize, lb: usize) -> Self {
        let map = VertexMap::identity(graph.n());
        Instance {
            graph,
            k,
            lb,
            forced: Vec::new(),
            removed_free: Vec::new(),
            map,
            stage_stats: Vec::new(),
        }
    }

    pub fn original_k(&self) -> usize {
        self.k + self.forced.len()
    }

    /// Deletes `edges`, then the vertices in `free` and `forced` (all in
    /// current ids), charging one unit of budget per forced vertex.
    pub(crate) fn apply(
        &mut self,
        stage: Stage,
        edges: &[(usize, usize)],
        free: &[usize],
        forced: &[usize],
        elapsed: Duration,
    ) {
        let n_before = self.graph.n();
        let m_before = self.graph.m();
        if !edges.is_empty() {
            self.graph = self
                .graph
                .remove_edges(edges)
                .expect("reduction removed an edge that is not in the graph");
        }
        if !free.is_empty() || !forced.is_empty() {
            debug_assert!(forced.len() <= self.k);
            self.removed_free
                .extend(free.iter().map(|&u| self.map.to_old(u)));
            self.forced.extend(forced.iter().map(|&u| self.map.to_old(u)));
            self.k -= forced.len();
            let mut removed = free.to_vec();
            removed.extend_from_slice(forced);
            let (graph, inner) = self.graph.remove_vertices(&removed);
            self.graph = graph;
            self.map = self.map.compose(&inner);
        }
        self.stage_stats.push(StageStats {
            stage,
            vertices_removed: n_before - self.graph.n(),
            edges_removed: m_before - self.graph.m(),
            seconds: elapsed.as_secs_f64(),
        });
    }

    pub(crate) fn record(&mut self, stage: Stage, elapsed: Duration) {
        self.apply(stage, &[], &[], &[], elapsed);
    }

    /// Threshold `lb - offset` as a signed value; rules compare nonnegative
    /// quantities against it.
    pub(crate) fn threshold(&self, offset: usize) -> i64 {
        self.lb as i64 - offset as i64
    }
}
