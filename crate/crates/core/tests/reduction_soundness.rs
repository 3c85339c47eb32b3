//! Each reduction rule, run alone with `lb` set to the exact θ, must leave θ
//! unchanged, and the kernel solution plus forced vertices must lift back.

mod common;

use cip_core::clique::{greedy_coloring, neighborhood_clique_sizes, SeedOrder};
use cip_core::oracle::{brute_force_theta, Oracle};
use cip_core::reduce::{
    color_reduce, color_reduce_counted, degree_reduce, degree_triangle_reduce, domination_pairs, exact_clique_reduce,
    interdiction_reduce, preprocess, triangle_reduce, triangle_strong_reduce, Instance, PreprocessConfig,
    StrongTriangleMode,
};
use cip_core::Graph;
use common::{omega_without, random_instances};

type Rule = fn(Instance) -> Instance;

fn degree(inst: Instance) -> Instance {
    degree_reduce(inst)
}

fn color(inst: Instance) -> Instance {
    let coloring = greedy_coloring(&inst.graph, &SeedOrder::DegDesc.order(&inst.graph));
    color_reduce(inst, &coloring)
}

fn exact_clique(inst: Instance) -> Instance {
    let sizes = neighborhood_clique_sizes(&inst.graph, inst.lb);
    exact_clique_reduce(inst, &sizes)
}

fn triangle(inst: Instance) -> Instance {
    triangle_reduce(inst)
}

fn strong_clique(inst: Instance) -> Instance {
    triangle_strong_reduce(inst, StrongTriangleMode::Clique)
}

fn strong_color(inst: Instance) -> Instance {
    triangle_strong_reduce(inst, StrongTriangleMode::Color)
}

fn interdiction(inst: Instance) -> Instance {
    let sizes = neighborhood_clique_sizes(&inst.graph, 0);
    interdiction_reduce(inst, &sizes)
}

const RULES: [(&str, Rule); 7] = [
    ("degree", degree),
    ("color", color),
    ("exact-clique", exact_clique),
    ("triangle", triangle),
    ("strong-triangle-clique", strong_clique),
    ("strong-triangle-color", strong_color),
    ("interdiction", interdiction),
];

/// θ of the reduced instance, and a check that its optimal set lifts.
fn check_rule(name: &str, rule: Rule, g: &Graph, k: usize) {
    let (theta, _) = brute_force_theta(g, k).unwrap();
    let out = rule(Instance::new(g.clone(), k, theta));
    assert_eq!(out.k + out.forced.len(), k, "{name}");
    let (reduced, s) = brute_force_theta(&out.graph, out.k).unwrap();
    assert_eq!(reduced, theta, "{name} changed θ; k={k} edges={:?}", g.edges().collect::<Vec<_>>());
    let mut lifted: Vec<usize> = out.forced.clone();
    lifted.extend(s.iter().map(|&v| out.map.to_old(v)));
    assert_eq!(omega_without(g, &lifted), theta, "{name}: lifted set is not optimal");
}

#[test]
fn every_rule_preserves_theta() {
    for (name, rule) in RULES {
        for (g, k) in random_instances(101, 100) {
            check_rule(name, rule, &g, k);
        }
    }
}

#[test]
fn combined_fixpoint_preserves_theta() {
    for (g, k) in random_instances(7, 100) {
        check_rule("degree+triangle", degree_triangle_reduce, &g, k);
    }
}

#[test]
fn lower_thresholds_remove_subsets() {
    for (g, k) in random_instances(77, 80) {
        let (theta, _) = brute_force_theta(&g, k).unwrap();
        for (name, rule) in RULES.iter().take(6) {
            let mut previous: Option<Vec<usize>> = None;
            for lb in 0..=theta {
                let out = rule(Instance::new(g.clone(), k, lb));
                let mut gone = out.removed_free.clone();
                gone.sort_unstable();
                if let Some(prev) = &previous {
                    // Color reduction recolors on the fly, so only the
                    // rules with fixed certificates are compared strictly.
                    if *name != "color" {
                        assert!(prev.iter().all(|v| gone.contains(v)), "{name} lb={lb}");
                    }
                }
                previous = Some(gone);
            }
        }
    }
}

#[test]
fn preprocess_preserves_theta_and_is_idempotent() {
    for (g, k) in random_instances(55, 150) {
        let (theta, _) = brute_force_theta(&g, k).unwrap();
        let pre = preprocess(&g, k, &PreprocessConfig::default());
        let inst = &pre.instance;
        assert!(inst.lb <= theta);
        assert!(pre.lb_disjoint <= theta);
        assert!(pre.lb_bipartite.unwrap() <= theta);
        let (kernel_theta, _) = brute_force_theta(&inst.graph, inst.k).unwrap();
        assert_eq!(kernel_theta, theta);

        // Stages 2, 3 and 5 find nothing more on the kernel.
        let again = exact_clique(color(degree_triangle_reduce(Instance::new(
            inst.graph.clone(),
            inst.k,
            inst.lb,
        ))));
        assert_eq!(again.graph, inst.graph, "forced={} stats={:?}", inst.forced.len(), again.stage_stats);
    }
}

#[test]
fn color_reduction_pop_count() {
    for (g, k) in random_instances(9, 200) {
        let (theta, _) = brute_force_theta(&g, k).unwrap();
        let coloring = greedy_coloring(&g, &SeedOrder::DegDesc.order(&g));
        let budget = g.n() + coloring.colors().iter().sum::<usize>();
        let (_, pops) = color_reduce_counted(Instance::new(g.clone(), k, theta), &coloring);
        assert!(pops <= budget, "{pops} pops > {budget}");
    }
}

#[test]
fn domination_constraints_are_sound() {
    // Some optimal set is closed under "v deleted implies its dominator
    // deleted": check by brute force over all closed sets.
    for (g, k) in random_instances(31, 150) {
        let k = k.max(1).min(g.n());
        let (theta, _) = Oracle::default().theta(&g, k).unwrap();
        let pairs = domination_pairs(&g);
        let n = g.n();
        let closed_best = (0u32..1 << n)
            .filter(|s| s.count_ones() as usize <= k)
            .filter(|s| pairs.iter().all(|&(u, v)| s >> v & 1 == 0 || s >> u & 1 == 1))
            .map(|s| {
                let set: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
                omega_without(&g, &set)
            })
            .min()
            .unwrap();
        assert_eq!(closed_best, theta);
    }
}
