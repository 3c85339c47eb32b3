use std::time::Instant;

use log::debug;

use crate::bounds::{bipartite_lower_bound, disjoint_lower_bound};
use crate::clique::{
    greedy_coloring, greedy_disjoint_cliques, neighborhood_clique_sizes_reusing, CliqueFamily, NeighborhoodClique,
    SeedOrder,
};
use crate::graph::{Graph, VertexMap};

use super::{
    color_reduce, degree_triangle_reduce, domination_pairs, exact_clique_reduce, interdiction_reduce,
    triangle_strong_reduce, Instance, Stage, StrongTriangleMode,
};

#[derive(Clone, Debug, Default)]
pub struct PreprocessConfig {
    /// Scan order for the first greedy clique family; the second family
    /// uses [`SeedOrder::complement`].
    pub seed_order: SeedOrder,
    /// Run the strong triangle rule after the bipartite bound.
    pub strong_triangle: Option<StrongTriangleMode>,
    /// Compute domination pairs on the kernel.
    pub domination: bool,
    /// Stages that have not started by this instant are skipped. Every stage
    /// is sound on its own, so stopping early only leaves a larger kernel.
    pub deadline: Option<Instant>,
}

#[derive(Clone, Debug)]
pub struct Preprocessed {
    pub instance: Instance,
    /// Two greedy disjoint clique families on the kernel.
    pub families: (CliqueFamily, CliqueFamily),
    /// `(u, v)` pairs on kernel ids; empty unless requested.
    pub domination: Vec<(usize, usize)>,
    pub lb_disjoint: usize,
    /// `None` when the stage was skipped by the deadline.
    pub lb_bipartite: Option<usize>,
}

/// Runs the reduction pipeline:
///
/// 1. disjoint-clique lower bound on the input graph;
/// 2. degree and triangle rules to a fixpoint;
/// 3. color reduction;
/// 4. bipartite lower bound on the reduced graph, repeating 2–3 once if it
///    raised `lb`;
/// 5. the strong triangle rule, if enabled;
/// 6. neighbourhood clique reduction, in rounds with 2–3 until stable;
/// 7. forced interdiction (skipped when `k = 0`), returning to 6 whenever it
///    commits a vertex;
/// 8. domination pairs on the kernel.
///
/// θ of the returned instance, plus the forced vertices, equals θ(g, k).
pub fn preprocess(g: &Graph, k: usize, config: &PreprocessConfig) -> Preprocessed {
    let expired = || config.deadline.is_some_and(|d| Instant::now() >= d);

    let start = Instant::now();
    let family = greedy_disjoint_cliques(g, &config.seed_order.order(g));
    let lb_disjoint = disjoint_lower_bound(&family, k).lb;
    let mut inst = Instance::new(g.clone(), k, lb_disjoint);
    inst.record(Stage::DisjointBound, start.elapsed());
    debug!("disjoint lower bound {lb_disjoint} from {} cliques", family.len());

    let mut lb_bipartite = None;
    if !expired() {
        inst = degree_and_color(inst);
    }
    if !expired() {
        let start = Instant::now();
        let (c1, c2) = families(&inst.graph, config.seed_order);
        let lb = bipartite_lower_bound(&c1, &c2, inst.k).lb;
        lb_bipartite = Some(lb);
        let raised = lb > inst.lb;
        inst.lb = inst.lb.max(lb);
        inst.record(Stage::BipartiteBound, start.elapsed());
        debug!("bipartite lower bound {lb}, working lb {}", inst.lb);
        if raised && !expired() {
            inst = degree_and_color(inst);
        }
    }
    if let Some(mode) = config.strong_triangle {
        if !expired() {
            inst = triangle_strong_reduce(inst, mode);
        }
    }
    // Stages 6 and 7, interleaved with 2–3 until nothing changes, so that
    // the kernel is a fixpoint of every rule.
    let mut cache = None;
    while !expired() {
        let (settled, sizes) = settle(inst, &mut cache, &expired);
        inst = settled;
        if expired() {
            break;
        }
        let forced_before = inst.forced.len();
        inst = interdiction_reduce(inst, &sizes);
        if inst.forced.len() == forced_before {
            break;
        }
    }
    let domination = if config.domination && !expired() {
        let start = Instant::now();
        let pairs = domination_pairs(&inst.graph);
        inst.record(Stage::Domination, start.elapsed());
        pairs
    } else {
        Vec::new()
    };
    let families = families(&inst.graph, config.seed_order);
    debug!(
        "kernel: n={} m={} k={} lb={} forced={}",
        inst.graph.n(),
        inst.graph.m(),
        inst.k,
        inst.lb,
        inst.forced.len()
    );
    Preprocessed {
        instance: inst,
        families,
        domination,
        lb_disjoint,
        lb_bipartite,
    }
}

/// Neighbourhood clique sizes of an earlier snapshot of the kernel.
struct SizeCache {
    graph: Graph,
    map: VertexMap,
    lb: usize,
    sizes: Vec<NeighborhoodClique>,
}

/// Sizes for the current graph, recomputing only vertices whose
/// neighbourhood may have changed since the snapshot. Graphs only shrink, so
/// `G[N(u)]` is unchanged when neither `u` nor any neighbour lost an edge,
/// which shows in the degrees.
fn refresh_sizes(cache: &Option<SizeCache>, inst: &Instance) -> Vec<NeighborhoodClique> {
    let g = &inst.graph;
    let known: Vec<Option<NeighborhoodClique>> = match cache {
        Some(c) if c.lb == inst.lb => {
            let then = |v: usize| {
                c.map
                    .to_new(inst.map.to_old(v))
                    .expect("the snapshot holds every current vertex")
            };
            let same_degree: Vec<bool> = (0..g.n()).map(|v| g.degree(v) == c.graph.degree(then(v))).collect();
            (0..g.n())
                .map(|u| {
                    let clean = same_degree[u] && g.neighbors(u).iter().all(|&w| same_degree[w]);
                    clean.then(|| c.sizes[then(u)])
                })
                .collect()
        }
        _ => vec![None; g.n()],
    };
    neighborhood_clique_sizes_reusing(g, inst.lb, &known)
}

/// Runs stages 2–3 and neighbourhood clique reduction in rounds until a
/// full round changes nothing. Returns the neighbourhood clique sizes of the
/// final graph, exact wherever they are at least `lb - 1`.
fn settle(
    mut inst: Instance,
    cache: &mut Option<SizeCache>,
    expired: &impl Fn() -> bool,
) -> (Instance, Vec<NeighborhoodClique>) {
    loop {
        let shape = (inst.graph.n(), inst.graph.m());
        inst = degree_and_color(inst);
        let sizes = refresh_sizes(cache, &inst);
        let before = inst.map.clone();
        inst = exact_clique_reduce(inst, &sizes);
        // Survivors had exact values of at least lb - 1, and no deleted
        // vertex can sit in a neighbourhood clique that large, so their
        // values carry over.
        let carried: Vec<NeighborhoodClique> = (0..inst.graph.n())
            .map(|i| sizes[before.to_new(inst.map.to_old(i)).expect("survivor was present")])
            .collect();
        *cache = Some(SizeCache {
            graph: inst.graph.clone(),
            map: inst.map.clone(),
            lb: inst.lb,
            sizes: carried.clone(),
        });
        if (inst.graph.n(), inst.graph.m()) == shape || expired() {
            return (inst, carried);
        }
    }
}

fn degree_and_color(inst: Instance) -> Instance {
    let inst = degree_triangle_reduce(inst);
    let coloring = greedy_coloring(&inst.graph, &SeedOrder::DegDesc.order(&inst.graph));
    color_reduce(inst, &coloring)
}

fn families(g: &Graph, order: SeedOrder) -> (CliqueFamily, CliqueFamily) {
    (
        greedy_disjoint_cliques(g, &order.order(g)),
        greedy_disjoint_cliques(g, &order.complement().order(g)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force_theta;

    fn run(g: &Graph, k: usize) -> Preprocessed {
        preprocess(
            g,
            k,
            &PreprocessConfig {
                domination: true,
                ..Default::default()
            },
        )
    }

    #[test]
    fn k5_budget_two() {
        let out = run(&Graph::complete(5), 2);
        assert_eq!(out.lb_disjoint, 3);
        assert_eq!(out.instance.graph.n() + out.instance.forced.len(), 5);
    }

    #[test]
    fn two_k4_budget_one() {
        let mut edges: Vec<(usize, usize)> = Graph::complete(4).edges().collect();
        edges.extend(Graph::complete(4).edges().map(|(u, v)| (u + 4, v + 4)));
        let g = Graph::from_edges(8, edges).unwrap();
        let out = run(&g, 1);
        assert_eq!(out.lb_disjoint, 4);
        assert_eq!(out.instance.graph.n(), 8);
        assert!(out.instance.forced.is_empty());
    }

    #[test]
    fn kernel_preserves_theta_on_trees() {
        // A caterpillar: path 0..6 with a leaf on every path vertex.
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 1)).collect();
        edges.extend((0..6).map(|i| (i, i + 6)));
        let g = Graph::from_edges(12, edges).unwrap();
        for k in 0..4 {
            let out = run(&g, k);
            let inst = &out.instance;
            let (theta, _) = brute_force_theta(&g, k).unwrap();
            let (kernel_theta, _) = brute_force_theta(&inst.graph, inst.k).unwrap();
            assert_eq!(kernel_theta, theta, "k={k}");
            assert!(inst.lb <= theta);
        }
    }
}
