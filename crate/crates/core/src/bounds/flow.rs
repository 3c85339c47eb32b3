//! Dinic's blocking-flow maximum flow on integer capacities.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    rev: usize,
    cap: u64,
    original: u64,
}

#[derive(Clone, Debug)]
pub struct MaxFlow {
    graph: Vec<Vec<Arc>>,
    level: Vec<usize>,
    iter: Vec<usize>,
}

impl MaxFlow {
    pub fn new(nodes: usize) -> Self {
        MaxFlow {
            graph: vec![Vec::new(); nodes],
            level: vec![usize::MAX; nodes],
            iter: vec![0; nodes],
        }
    }

    pub fn nodes(&self) -> usize {
        self.graph.len()
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: u64) {
        let rev_from = self.graph[to].len() + usize::from(from == to);
        let rev_to = self.graph[from].len();
        self.graph[from].push(Arc {
            to,
            rev: rev_from,
            cap,
            original: cap,
        });
        self.graph[to].push(Arc {
            to: from,
            rev: rev_to,
            cap: 0,
            original: 0,
        });
    }

    /// Arcs as `(from, to, capacity)`, excluding residual twins.
    pub fn arcs(&self) -> Vec<(usize, usize, u64)> {
        self.graph
            .iter()
            .enumerate()
            .flat_map(|(u, arcs)| {
                arcs.iter()
                    .filter(|a| a.original > 0)
                    .map(move |a| (u, a.to, a.original))
            })
            .collect()
    }

    pub fn max_flow(&mut self, source: usize, sink: usize) -> u64 {
        if source == sink {
            return 0;
        }
        let mut total = 0;
        while self.bfs(source, sink) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let pushed = self.dfs(source, sink, u64::MAX);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    /// Vertices reachable from `source` in the residual graph; after
    /// [`MaxFlow::max_flow`] this is the source side of a minimum cut.
    pub fn source_side(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes()];
        let mut queue = VecDeque::from([source]);
        seen[source] = true;
        while let Some(u) = queue.pop_front() {
            for a in &self.graph[u] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    queue.push_back(a.to);
                }
            }
        }
        seen
    }

    /// Total original capacity of the arcs leaving the given source side.
    pub fn cut_capacity(&self, side: &[bool]) -> u64 {
        self.arcs()
            .into_iter()
            .filter(|&(u, v, _)| side[u] && !side[v])
            .map(|(_, _, c)| c)
            .sum()
    }

    fn bfs(&mut self, source: usize, sink: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = usize::MAX);
        self.level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for a in &self.graph[u] {
                if a.cap > 0 && self.level[a.to] == usize::MAX {
                    self.level[a.to] = self.level[u] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        self.level[sink] != usize::MAX
    }

    fn dfs(&mut self, u: usize, sink: usize, limit: u64) -> u64 {
        if u == sink {
            return limit;
        }
        while self.iter[u] < self.graph[u].len() {
            let i = self.iter[u];
            let (to, cap) = (self.graph[u][i].to, self.graph[u][i].cap);
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let pushed = self.dfs(to, sink, limit.min(cap));
                if pushed > 0 {
                    self.graph[u][i].cap -= pushed;
                    let rev = self.graph[u][i].rev;
                    self.graph[to][rev].cap += pushed;
                    return pushed;
                }
            }
            self.iter[u] += 1;
        }
        0
    }
}
