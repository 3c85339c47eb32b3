//! Machine-readable summaries of a solve: a JSON report per instance and a
//! flat CSV row for benchmark sweeps.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::reduce::Stage;
use crate::solver::{SolveResult, SolveStatus};

/// JSON schema for [`SolveReport`].
pub const SOLVE_REPORT_SCHEMA: &str = include_str!("../schema/solve_report.schema.json");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StageReport {
    pub stage: String,
    pub vertices_removed: usize,
    pub edges_removed: usize,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub forced: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    /// Set when `k` was given as a fraction of `n` (rounded up).
    pub k_fraction: Option<f64>,
    pub theta: usize,
    pub interdiction_set: Vec<usize>,
    pub status: SolveStatus,
    pub lb: usize,
    pub ub: usize,
    pub lb_disjoint: usize,
    pub lb_bipartite: Option<usize>,
    pub stages: Vec<StageReport>,
    pub kernel: KernelReport,
    pub master_iterations: usize,
    pub separation_calls: usize,
    pub master_nodes: u64,
    pub pool_size: usize,
    pub preprocess_seconds: f64,
    pub seconds: f64,
}

impl SolveReport {
    pub fn new(instance: impl Into<String>, g: &Graph, k: usize, k_fraction: Option<f64>, result: &SolveResult) -> Self {
        let s = &result.stats;
        SolveReport {
            instance: instance.into(),
            n: g.n(),
            m: g.m(),
            k,
            k_fraction,
            theta: result.theta,
            interdiction_set: result.interdiction_set.clone(),
            status: result.status,
            lb: result.lb,
            ub: result.ub,
            lb_disjoint: s.lb_disjoint,
            lb_bipartite: s.lb_bipartite,
            stages: s
                .stage_stats
                .iter()
                .map(|st| StageReport {
                    stage: st.stage.name().to_string(),
                    vertices_removed: st.vertices_removed,
                    edges_removed: st.edges_removed,
                    seconds: st.seconds,
                })
                .collect(),
            kernel: KernelReport {
                n: s.kernel_n,
                m: s.kernel_m,
                k: s.kernel_k,
                forced: s.forced,
            },
            master_iterations: s.master_iterations,
            separation_calls: s.separation_calls,
            master_nodes: s.master_nodes,
            pool_size: s.pool_size,
            preprocess_seconds: s.preprocess_seconds,
            seconds: s.seconds,
        }
    }

    /// Human-readable multi-line summary.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "instance   {}\nn, m       {}, {}\nk          {}\ntheta      {}\nstatus     {}\nbounds     [{}, {}]\n",
            self.instance,
            self.n,
            self.m,
            self.k,
            self.theta,
            status_label(self.status),
            self.lb,
            self.ub
        );
        out.push_str(&format!(
            "lb         disjoint {}, bipartite {}\n",
            self.lb_disjoint,
            self.lb_bipartite.map_or("-".to_string(), |b| b.to_string())
        ));
        for st in &self.stages {
            out.push_str(&format!(
                "  {:<16} -{} vertices, -{} edges, {:.3}s\n",
                st.stage, st.vertices_removed, st.edges_removed, st.seconds
            ));
        }
        out.push_str(&format!(
            "kernel     n={} m={} k={} forced={}\nsearch     {} master solves, {} separations, {} nodes, pool {}\ntime       {:.3}s\nset        {:?}\n",
            self.kernel.n,
            self.kernel.m,
            self.kernel.k,
            self.kernel.forced,
            self.master_iterations,
            self.separation_calls,
            self.master_nodes,
            self.pool_size,
            self.seconds,
            self.interdiction_set
        ));
        out
    }
}

pub fn status_label(status: SolveStatus) -> &'static str {
    match status {
        SolveStatus::Optimal => "optimal",
        SolveStatus::Timeout => "TL",
    }
}

/// One CSV row of a benchmark sweep. Column set and order are fixed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub k_fraction: f64,
    pub removed_degree_triangle: usize,
    pub removed_color: usize,
    pub removed_strong_triangle: usize,
    pub removed_exact_clique: usize,
    pub removed_interdiction: usize,
    pub kernel_n: usize,
    pub lb_disjoint: usize,
    pub lb_bipartite: Option<usize>,
    pub lb: usize,
    pub ub: usize,
    pub theta: Option<usize>,
    pub status: String,
    pub master_iterations: usize,
    pub seconds: f64,
}

impl BenchRow {
    pub fn new(name: impl Into<String>, g: &Graph, k: usize, k_fraction: f64, result: &SolveResult) -> Self {
        let removed = |stage: Stage| {
            result
                .stats
                .stage_stats
                .iter()
                .filter(|s| s.stage == stage)
                .map(|s| s.vertices_removed)
                .sum()
        };
        BenchRow {
            name: name.into(),
            n: g.n(),
            m: g.m(),
            k,
            k_fraction,
            removed_degree_triangle: removed(Stage::DegreeTriangle),
            removed_color: removed(Stage::Color),
            removed_strong_triangle: removed(Stage::StrongTriangle),
            removed_exact_clique: removed(Stage::ExactClique),
            removed_interdiction: removed(Stage::Interdiction),
            kernel_n: result.stats.kernel_n,
            lb_disjoint: result.stats.lb_disjoint,
            lb_bipartite: result.stats.lb_bipartite,
            lb: result.lb,
            ub: result.ub,
            theta: (result.status == SolveStatus::Optimal).then_some(result.theta),
            status: status_label(result.status).to_string(),
            master_iterations: result.stats.master_iterations,
            seconds: result.stats.seconds,
        }
    }
}

/// `⌈fraction · n⌉`, computed so that exact products such as `0.01 · 300`
/// are not pushed up by rounding noise.
pub fn k_from_fraction(fraction: f64, n: usize) -> usize {
    let x = fraction * n as f64;
    let nearest = x.round();
    if (x - nearest).abs() < 1e-9 {
        nearest as usize
    } else {
        x.ceil() as usize
    }
}
