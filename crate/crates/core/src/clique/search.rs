//! Exact maximum clique by branch and bound with a greedy coloring bound over
//! bitset adjacency.
//!
//! Small graphs are searched directly. Larger ones are split along a
//! degeneracy ordering: every clique is found in the subproblem of its
//! earliest vertex, whose candidates are that vertex's later neighbours.

use std::time::Instant;

use crate::bitset::BitSet;
use crate::graph::Graph;

use super::Clique;

/// Graphs with at most this many vertices are searched as one bitset problem.
pub const DEFAULT_DENSE_THRESHOLD: usize = 4096;

#[derive(Clone, Debug)]
pub struct CliqueQuery {
    /// Only cliques strictly larger than `floor` are reported.
    pub floor: usize,
    /// Stop as soon as a clique of at least this size is found.
    pub stop_at: Option<usize>,
    pub deadline: Option<Instant>,
    pub dense_threshold: usize,
}

impl Default for CliqueQuery {
    fn default() -> Self {
        CliqueQuery {
            floor: 0,
            stop_at: None,
            deadline: None,
            dense_threshold: DEFAULT_DENSE_THRESHOLD,
        }
    }
}

impl CliqueQuery {
    pub fn above(floor: usize) -> Self {
        CliqueQuery {
            floor,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueOutcome {
    /// Largest clique found with more than `floor` vertices, sorted.
    pub clique: Option<Vec<usize>>,
    /// `false` when the search stopped at the deadline. When `true` and no
    /// `stop_at` fired, `clique` is maximum (or `None` if ω ≤ floor).
    pub complete: bool,
}

/// Maximum clique of `g`; the empty graph yields the empty clique.
pub fn max_clique(g: &Graph) -> Clique {
    let out = max_clique_with(g, &CliqueQuery::default());
    Clique::new(out.clique.unwrap_or_default())
}

pub fn max_clique_with(g: &Graph, query: &CliqueQuery) -> CliqueOutcome {
    if g.n() <= query.floor {
        return CliqueOutcome {
            clique: None,
            complete: true,
        };
    }
    let mut state = SearchState {
        best: None,
        best_size: query.floor,
        stop_at: query.stop_at,
        deadline: query.deadline,
        nodes: 0,
        halted: false,
        timed_out: false,
    };
    if g.n() <= query.dense_threshold {
        let all: Vec<usize> = (0..g.n()).collect();
        let dense = DenseGraph::new(g);
        state.solve_dense(&dense, &[], &all);
    } else {
        solve_sparse(g, &mut state);
    }
    let clique = state.best.map(|mut c| {
        c.sort_unstable();
        c
    });
    CliqueOutcome {
        clique,
        complete: !state.timed_out,
    }
}

struct SearchState {
    best: Option<Vec<usize>>,
    best_size: usize,
    stop_at: Option<usize>,
    deadline: Option<Instant>,
    nodes: u64,
    halted: bool,
    timed_out: bool,
}

impl SearchState {
    fn offer(&mut self, clique: Vec<usize>) {
        if clique.len() > self.best_size {
            self.best_size = clique.len();
            self.best = Some(clique);
            if self.stop_at.is_some_and(|s| self.best_size >= s) {
                self.halted = true;
            }
        }
    }

    /// Searches `dense` for a clique containing `prefix` (given in caller ids)
    /// plus vertices of the dense graph; `labels` maps dense ids to caller ids.
    fn solve_dense(&mut self, dense: &DenseGraph, prefix: &[usize], labels: &[usize]) {
        let mut current = Vec::new();
        let cand = BitSet::full(dense.n());
        let mut found: Option<Vec<usize>> = None;
        let base = self.best_size;
        let need = self.best_size.saturating_sub(prefix.len());
        let mut local_best = need;
        self.expand(dense, &mut current, cand, &mut local_best, &mut found, prefix.len());
        if let Some(local) = found {
            let mut clique: Vec<usize> = prefix.to_vec();
            clique.extend(local.iter().map(|&i| labels[dense.label(i)]));
            debug_assert!(clique.len() > base);
            self.offer(clique);
        }
    }

    fn expand(
        &mut self,
        dense: &DenseGraph,
        current: &mut Vec<usize>,
        mut cand: BitSet,
        local_best: &mut usize,
        found: &mut Option<Vec<usize>>,
        prefix_len: usize,
    ) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(256) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.halted = true;
                    self.timed_out = true;
                }
            }
        }
        if self.halted {
            return;
        }
        let min_color = (*local_best + 1).saturating_sub(current.len()).max(1);
        let (verts, colors) = dense.color_sort(&cand, min_color);
        for i in (0..verts.len()).rev() {
            if current.len() + colors[i] <= *local_best {
                return;
            }
            let v = verts[i];
            let next = cand.intersection(dense.adj(v));
            current.push(v);
            if next.is_empty() {
                if current.len() > *local_best {
                    *local_best = current.len();
                    *found = Some(current.clone());
                    if self
                        .stop_at
                        .is_some_and(|s| prefix_len + current.len() >= s)
                    {
                        self.halted = true;
                    }
                }
            } else {
                self.expand(dense, current, next, local_best, found, prefix_len);
            }
            current.pop();
            cand.remove(v);
            if self.halted {
                return;
            }
        }
    }
}

fn solve_sparse(g: &Graph, state: &mut SearchState) {
    let (order, core) = degeneracy(g);
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }

    // Cheap starting clique grown greedily from the highest-core vertices.
    for &v in order.iter().rev().take(32) {
        if core[v] < state.best_size {
            break;
        }
        let mut nbrs: Vec<usize> = g.neighbors(v).to_vec();
        nbrs.sort_by_key(|&w| std::cmp::Reverse(core[w]));
        let mut clique = vec![v];
        for w in nbrs {
            if clique.iter().all(|&c| g.has_edge(c, w)) {
                clique.push(w);
            }
        }
        state.offer(clique);
        if state.halted {
            return;
        }
    }

    for &v in order.iter().rev() {
        if core[v] < state.best_size {
            // core(v) + 1 bounds every clique through v
            continue;
        }
        let mut later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v] && core[w] >= state.best_size)
            .collect();
        if later.len() < state.best_size {
            continue;
        }
        later.sort_unstable();
        let sub = g.induced_sorted(&later);
        let dense = DenseGraph::new(&sub);
        state.solve_dense(&dense, &[v], &later);
        if state.halted {
            return;
        }
    }
}

/// Batagelj–Zaversnik core decomposition: returns the removal order and the
/// core number of every vertex.
fn degeneracy(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let max_deg = g.max_degree();
    let mut deg: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut bin = vec![0usize; max_deg + 2];
    for &d in &deg {
        bin[d] += 1;
    }
    let mut start = 0;
    for b in bin.iter_mut() {
        let count = *b;
        *b = start;
        start += count;
    }
    let mut vert = vec![0usize; n];
    let mut pos = vec![0usize; n];
    for v in 0..n {
        pos[v] = bin[deg[v]];
        vert[pos[v]] = v;
        bin[deg[v]] += 1;
    }
    for d in (1..bin.len()).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;
    for i in 0..n {
        let v = vert[i];
        for &u in g.neighbors(v) {
            if deg[u] > deg[v] {
                let du = deg[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = vert[pw];
                if u != w {
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                bin[du] += 1;
                deg[u] -= 1;
            }
        }
    }
    (vert, deg)
}

/// Bitset adjacency of a graph, relabelled so that bit order is descending
/// degree.
struct DenseGraph {
    adj: Vec<BitSet>,
    labels: Vec<usize>,
}

impl DenseGraph {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut labels: Vec<usize> = (0..n).collect();
        labels.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));
        let mut rank = vec![0usize; n];
        for (i, &u) in labels.iter().enumerate() {
            rank[u] = i;
        }
        let adj = labels
            .iter()
            .map(|&u| {
                let mut row = BitSet::new(n);
                for &v in g.neighbors(u) {
                    row.insert(rank[v]);
                }
                row
            })
            .collect();
        DenseGraph { adj, labels }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn adj(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Greedy sequential coloring of `cand` in bit order. Returns vertices
    /// with color at least `min_color`, sorted by nondecreasing color.
    fn color_sort(&self, cand: &BitSet, min_color: usize) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = cand.clone();
        let mut verts = Vec::new();
        let mut colors = Vec::new();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut class = uncolored.clone();
            while let Some(v) = class.first() {
                class.remove(v);
                class.difference_with(&self.adj[v]);
                uncolored.remove(v);
                if color >= min_color {
                    verts.push(v);
                    colors.push(color);
                }
            }
        }
        (verts, colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::cycle;

    #[test]
    fn small_examples() {
        assert_eq!(max_clique(&Graph::complete(5)).size(), 5);
        assert_eq!(max_clique(&cycle(5)).size(), 2);
        assert_eq!(max_clique(&Graph::empty(3)).size(), 1);
        assert_eq!(max_clique(&Graph::empty(0)).size(), 0);
    }

    #[test]
    fn floor_and_stop() {
        let g = Graph::complete(6);
        let out = max_clique_with(&g, &CliqueQuery::above(6));
        assert_eq!(out.clique, None);
        assert!(out.complete);
        let out = max_clique_with(
            &g,
            &CliqueQuery {
                stop_at: Some(3),
                ..Default::default()
            },
        );
        assert!(out.clique.unwrap().len() >= 3);
    }

    #[test]
    fn sparse_path_agrees_with_dense_path() {
        // Two K4s and a K5 hanging off a long cycle.
        let mut edges: Vec<(usize, usize)> = (0..40).map(|i| (i, (i + 1) % 40)).collect();
        for group in [[0usize, 1, 2, 3].as_slice(), &[10, 11, 12, 13], &[20, 21, 22, 23, 24]] {
            for (i, &u) in group.iter().enumerate() {
                for &v in &group[i + 1..] {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(40, edges).unwrap();
        let dense = max_clique_with(&g, &CliqueQuery::default());
        let sparse = max_clique_with(
            &g,
            &CliqueQuery {
                dense_threshold: 0,
                ..Default::default()
            },
        );
        assert_eq!(dense.clique, Some(vec![20, 21, 22, 23, 24]));
        assert_eq!(sparse.clique, dense.clique);
    }

    #[test]
    fn core_numbers() {
        let (order, core) = degeneracy(&Graph::complete(4));
        assert_eq!(order.len(), 4);
        assert!(core.iter().all(|&c| c == 3));
        let (_, core) = degeneracy(&cycle(6));
        assert!(core.iter().all(|&c| c == 2));
    }
}
