//! Exact θ(G, k) by lazy clique-constraint generation.
//!
//! After preprocessing, the kernel is solved by scanning `y` upward from the
//! lower bound. For each `y` the restricted covering problem over the current
//! clique pool is solved; if it is infeasible θ exceeds `y`. Otherwise its
//! deletion set is tested by a maximum clique search on the survivors: a
//! clique larger than `y` joins the pool, and if there is none, `y` is θ.

mod master;

use std::time::{Duration, Instant};

use log::{debug, info};
use serde::{Deserialize, Serialize};

use crate::clique::{max_clique_with, Clique, CliqueQuery, SeedOrder, DEFAULT_DENSE_THRESHOLD};
use crate::graph::Graph;
use crate::reduce::{preprocess, PreprocessConfig, StageStats, StrongTriangleMode};

pub use master::{MasterOutcome, MasterState};

/// Violating cliques gathered per separation round, beyond the first.
const EXTRA_CUTS: usize = 8;

#[derive(Clone, Debug)]
pub struct SolveConfig {
    pub time_limit: Option<Duration>,
    pub strong_triangle: Option<StrongTriangleMode>,
    pub seed_order: SeedOrder,
    pub dense_threshold: usize,
    pub use_domination: bool,
    /// Cap on branch-and-bound nodes summed over all master solves.
    pub node_limit: Option<u64>,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            time_limit: None,
            strong_triangle: None,
            seed_order: SeedOrder::default(),
            dense_threshold: DEFAULT_DENSE_THRESHOLD,
            use_domination: true,
            node_limit: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveStatus {
    Optimal,
    /// Stopped by the time or node limit; `lb ≤ θ ≤ ub`.
    Timeout,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SolveStats {
    pub stage_stats: Vec<StageStats>,
    pub lb_disjoint: usize,
    pub lb_bipartite: Option<usize>,
    pub kernel_n: usize,
    pub kernel_m: usize,
    pub kernel_k: usize,
    pub forced: usize,
    pub domination_pairs: usize,
    pub master_iterations: usize,
    pub separation_calls: usize,
    pub master_nodes: u64,
    pub pool_size: usize,
    pub preprocess_seconds: f64,
    pub seconds: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolveResult {
    /// θ(G, k) when optimal; otherwise the best value reached, equal to `ub`.
    pub theta: usize,
    /// Input-graph ids, sorted. Deleting them leaves ω = `theta`.
    pub interdiction_set: Vec<usize>,
    pub status: SolveStatus,
    pub lb: usize,
    pub ub: usize,
    pub stats: SolveStats,
}

/// A clique of `G[survivors]` with more than `y` vertices, maximum among
/// them, or `None` if ω(G[survivors]) ≤ y. Returned in `g`'s ids.
pub fn separate(g: &Graph, survivors: &[usize], y: usize) -> Option<Clique> {
    separate_with(g, survivors, &CliqueQuery::above(y)).0
}

/// As [`separate`]; the flag is false when the search hit its deadline.
fn separate_with(g: &Graph, survivors: &[usize], query: &CliqueQuery) -> (Option<Clique>, bool) {
    let mut sorted = survivors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let sub = g.induced_sorted(&sorted);
    let out = max_clique_with(&sub, query);
    let clique = out
        .clique
        .map(|c| Clique::new(c.into_iter().map(|i| sorted[i]).collect()));
    (clique, out.complete)
}

/// Grows `clique` to a maximal clique of `g`, trying vertices by id.
fn extend_to_maximal(g: &Graph, clique: &Clique) -> Clique {
    let mut members = clique.vertices().to_vec();
    let seed = *members
        .iter()
        .min_by_key(|&&v| g.degree(v))
        .expect("violating cliques are nonempty");
    for &w in g.neighbors(seed) {
        if !members.contains(&w) && members.iter().all(|&v| g.has_edge(v, w)) {
            members.push(w);
        }
    }
    Clique::new(members)
}

/// Computes θ(g, k) and an interdiction set attaining it.
pub fn solve(g: &Graph, k: usize, config: &SolveConfig) -> SolveResult {
    let start = Instant::now();
    let deadline = config.time_limit.map(|t| start + t);
    let pre = preprocess(
        g,
        k,
        &PreprocessConfig {
            seed_order: config.seed_order,
            strong_triangle: config.strong_triangle,
            domination: config.use_domination,
            deadline,
        },
    );
    let inst = pre.instance;
    let kernel = &inst.graph;
    let mut stats = SolveStats {
        stage_stats: inst.stage_stats.clone(),
        lb_disjoint: pre.lb_disjoint,
        lb_bipartite: pre.lb_bipartite,
        kernel_n: kernel.n(),
        kernel_m: kernel.m(),
        kernel_k: inst.k,
        forced: inst.forced.len(),
        domination_pairs: pre.domination.len(),
        preprocess_seconds: start.elapsed().as_secs_f64(),
        ..Default::default()
    };
    info!(
        "kernel n={} m={} k={} lb={} ({} forced)",
        kernel.n(),
        kernel.m(),
        inst.k,
        inst.lb,
        inst.forced.len()
    );

    let lift = |kernel_set: &[usize]| {
        let mut set: Vec<usize> = inst.forced.clone();
        set.extend(kernel_set.iter().map(|&v| inst.map.to_old(v)));
        set.sort_unstable();
        set
    };
    let finish = |theta: usize, kernel_set: &[usize], status, lb: usize, ub: usize, mut stats: SolveStats| {
        stats.seconds = start.elapsed().as_secs_f64();
        SolveResult {
            theta,
            interdiction_set: lift(kernel_set),
            status,
            lb,
            ub,
            stats,
        }
    };

    let all: Vec<usize> = (0..kernel.n()).collect();
    if inst.k >= kernel.n() {
        return finish(0, &all, SolveStatus::Optimal, 0, 0, stats);
    }
    let query = |floor: usize| CliqueQuery {
        floor,
        deadline,
        dense_threshold: config.dense_threshold,
        ..Default::default()
    };

    if inst.k == 0 {
        stats.separation_calls = 1;
        let (best, complete) = separate_with(kernel, &all, &query(inst.lb.saturating_sub(1)));
        let omega = best.map_or(0, |c| c.size());
        return if complete {
            finish(omega, &[], SolveStatus::Optimal, omega, omega, stats)
        } else {
            let ub = kernel.max_degree() + 1;
            finish(ub, &[], SolveStatus::Timeout, inst.lb.max(omega), ub, stats)
        };
    }

    let mut master = MasterState::new(kernel.n(), inst.k, &pre.domination);
    master.deadline = deadline;
    master.node_limit = config.node_limit;
    let (c1, c2) = &pre.families;
    for c in c1.cliques().iter().chain(c2.cliques()) {
        if c.size() > inst.lb {
            master.add_clique(c);
        }
    }

    // Any k vertices work as a fallback incumbent.
    let mut incumbent: Vec<usize> = (0..inst.k).collect();
    let mut ub = kernel.max_degree() + 1;
    let mut y = inst.lb;
    loop {
        if y >= ub {
            return finish(ub, &incumbent, SolveStatus::Optimal, ub, ub, stats);
        }
        stats.master_iterations += 1;
        let outcome = master.solve(y);
        stats.master_nodes = master.nodes;
        stats.pool_size = master.pool_len();
        let s = match outcome {
            MasterOutcome::Infeasible => {
                debug!("y={y} infeasible with {} pool cliques", master.pool_len());
                y += 1;
                continue;
            }
            MasterOutcome::ResourceLimit => {
                return finish(ub, &incumbent, SolveStatus::Timeout, y, ub, stats);
            }
            MasterOutcome::Feasible(s) => s,
        };

        let mut is_deleted = vec![false; kernel.n()];
        for &v in &s {
            is_deleted[v] = true;
        }
        let mut survivors: Vec<usize> = (0..kernel.n()).filter(|&v| !is_deleted[v]).collect();
        stats.separation_calls += 1;
        let (found, complete) = separate_with(kernel, &survivors, &query(y));
        if !complete {
            return finish(ub, &incumbent, SolveStatus::Timeout, y, ub, stats);
        }
        let Some(clique) = found else {
            return finish(y, &s, SolveStatus::Optimal, y, y, stats);
        };
        if clique.size() < ub {
            ub = clique.size();
            incumbent = s.clone();
            debug!("incumbent with ω = {ub}");
        }
        let mut added = master.add_clique(&extend_to_maximal(kernel, &clique)) as usize;
        debug_assert!(added == 1, "a violated clique cannot already be in the pool");

        // More violated cliques on the remaining survivors make the next
        // master solve better informed.
        let mut last = clique;
        for _ in 0..EXTRA_CUTS {
            survivors.retain(|&v| !last.contains(v));
            if survivors.len() <= y {
                break;
            }
            let extra_query = CliqueQuery {
                stop_at: Some(y + 1),
                ..query(y)
            };
            match separate_with(kernel, &survivors, &extra_query).0 {
                Some(c) => {
                    added += master.add_clique(&extend_to_maximal(kernel, &c)) as usize;
                    last = c;
                }
                None => break,
            }
        }
        debug!("y={y}: added {added} cliques, pool {}", master.pool_len());
    }
}
