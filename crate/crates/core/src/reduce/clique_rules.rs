use std::cmp::Reverse;
use std::collections::BTreeSet;
use std::time::Instant;

use crate::clique::{max_clique_with, CliqueQuery, NeighborhoodClique};
use crate::graph::Graph;

use super::{Instance, Stage};

/// Deletes every vertex with `ω(G[N(u)]) ≤ lb - 2` in a single pass; deleting
/// such a vertex never lowers `ω(G[N(v)])` for a vertex that stays.
pub fn exact_clique_reduce(mut inst: Instance, sizes: &[NeighborhoodClique]) -> Instance {
    let start = Instant::now();
    debug_assert_eq!(sizes.len(), inst.graph.n());
    let limit = inst.threshold(2);
    let free: Vec<usize> = (0..inst.graph.n())
        .filter(|&u| sizes[u].value as i64 <= limit)
        .collect();
    inst.apply(Stage::ExactClique, &[], &free, &[], start.elapsed());
    inst
}

/// Commits to the interdiction set every vertex `u` whose neighbourhood clique
/// exceeds that of each non-neighbour by more than `k`, re-checking after
/// each commitment with the reduced budget.
///
/// `sizes` must be upper bounds on `ω(G[N(v)])`. Candidates are always
/// evaluated with an exact value; values of neighbours of a committed vertex
/// are treated as stale and recomputed before they are trusted.
pub fn interdiction_reduce(mut inst: Instance, sizes: &[NeighborhoodClique]) -> Instance {
    let start = Instant::now();
    debug_assert_eq!(sizes.len(), inst.graph.n());
    if inst.k == 0 {
        inst.record(Stage::Interdiction, start.elapsed());
        return inst;
    }
    let forced = Interdiction::new(&inst.graph, sizes).run(inst.k);
    inst.apply(Stage::Interdiction, &[], &[], &forced, start.elapsed());
    inst
}

struct Interdiction<'a> {
    g: &'a Graph,
    value: Vec<usize>,
    exact: Vec<bool>,
    alive: Vec<bool>,
    alive_degree: Vec<usize>,
    alive_count: usize,
    by_value: BTreeSet<(Reverse<usize>, usize)>,
    mark: Vec<usize>,
    token: usize,
}

impl<'a> Interdiction<'a> {
    fn new(g: &'a Graph, sizes: &[NeighborhoodClique]) -> Self {
        let n = g.n();
        Interdiction {
            g,
            value: sizes.iter().map(|s| s.value).collect(),
            exact: sizes.iter().map(|s| s.exact).collect(),
            alive: vec![true; n],
            alive_degree: (0..n).map(|u| g.degree(u)).collect(),
            alive_count: n,
            by_value: (0..n).map(|u| (Reverse(sizes[u].value), u)).collect(),
            mark: vec![0; n],
            token: 0,
        }
    }

    fn refresh(&mut self, u: usize) {
        let nbrs: Vec<usize> = self
            .g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&v| self.alive[v])
            .collect();
        let fresh = if nbrs.len() <= 1 {
            nbrs.len()
        } else {
            let sub = self.g.induced_sorted(&nbrs);
            max_clique_with(&sub, &CliqueQuery::default())
                .clique
                .map_or(0, |c| c.len())
        };
        self.by_value.remove(&(Reverse(self.value[u]), u));
        self.value[u] = fresh;
        self.exact[u] = true;
        self.by_value.insert((Reverse(fresh), u));
    }

    /// Largest stored value over alive vertices outside `N[u]`.
    fn best_non_neighbor(&mut self, u: usize) -> Option<usize> {
        self.token += 1;
        for &v in self.g.neighbors(u) {
            self.mark[v] = self.token;
        }
        self.mark[u] = self.token;
        self.by_value
            .iter()
            .find(|&&(_, v)| self.mark[v] != self.token)
            .map(|&(Reverse(val), _)| val)
    }

    fn run(mut self, mut k: usize) -> Vec<usize> {
        let mut forced = Vec::new();
        'scan: while k > 0 && self.alive_count > 0 {
            let candidates: Vec<usize> = self.by_value.iter().map(|&(_, v)| v).collect();
            for u in candidates {
                let universal = self.alive_degree[u] + 1 == self.alive_count;
                if self.value[u] <= k && !universal {
                    continue;
                }
                if !self.exact[u] {
                    self.refresh(u);
                    if self.value[u] <= k && !universal {
                        continue;
                    }
                }
                let holds = match self.best_non_neighbor(u) {
                    None => true,
                    Some(other) => self.value[u] as i64 - k as i64 > other as i64,
                };
                if holds {
                    self.commit(u);
                    forced.push(u);
                    k -= 1;
                    continue 'scan;
                }
            }
            break;
        }
        forced
    }

    fn commit(&mut self, u: usize) {
        self.alive[u] = false;
        self.alive_count -= 1;
        self.by_value.remove(&(Reverse(self.value[u]), u));
        for &v in self.g.neighbors(u) {
            if self.alive[v] {
                self.alive_degree[v] -= 1;
                self.exact[v] = false;
            }
        }
    }
}
