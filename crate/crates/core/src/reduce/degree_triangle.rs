use std::time::Instant;

use crate::graph::Graph;

use super::{Instance, Stage};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeTriangleRules {
    /// Delete vertices with `d(u) ≤ lb - 2`.
    pub degree: bool,
    /// Delete edges with `|N(u) ∩ N(v)| ≤ lb - 3`.
    pub triangle: bool,
}

impl Default for DegreeTriangleRules {
    fn default() -> Self {
        DegreeTriangleRules {
            degree: true,
            triangle: true,
        }
    }
}

/// Degree and triangle rules run together to a fixpoint over a shared
/// worklist, keeping degrees and per-edge triangle counts current.
pub fn degree_triangle_reduce(inst: Instance) -> Instance {
    reduce_with(inst, DegreeTriangleRules::default())
}

pub fn degree_reduce(inst: Instance) -> Instance {
    reduce_with(
        inst,
        DegreeTriangleRules {
            degree: true,
            triangle: false,
        },
    )
}

pub fn triangle_reduce(inst: Instance) -> Instance {
    reduce_with(
        inst,
        DegreeTriangleRules {
            degree: false,
            triangle: true,
        },
    )
}

pub(crate) fn reduce_with(mut inst: Instance, rules: DegreeTriangleRules) -> Instance {
    let start = Instant::now();
    let vertex_limit = if rules.degree { inst.threshold(2) } else { -1 };
    let edge_limit = if rules.triangle { inst.threshold(3) } else { -1 };
    if vertex_limit < 0 && edge_limit < 0 {
        inst.record(Stage::DegreeTriangle, start.elapsed());
        return inst;
    }
    let (free, edges) = Worklist::new(&inst.graph, vertex_limit, edge_limit).run();
    inst.apply(Stage::DegreeTriangle, &edges, &free, &[], start.elapsed());
    inst
}

struct Worklist<'a> {
    g: &'a Graph,
    index: crate::graph::EdgeIndex,
    triangles: Vec<usize>,
    degree: Vec<usize>,
    vertex_alive: Vec<bool>,
    edge_alive: Vec<bool>,
    vertex_queue: Vec<usize>,
    edge_queue: Vec<usize>,
    vertex_queued: Vec<bool>,
    edge_queued: Vec<bool>,
    vertex_limit: i64,
    edge_limit: i64,
}

impl<'a> Worklist<'a> {
    fn new(g: &'a Graph, vertex_limit: i64, edge_limit: i64) -> Self {
        let (index, triangles) = if edge_limit >= 0 {
            g.triangle_counts().into_parts()
        } else {
            let index = crate::graph::EdgeIndex::new(g);
            let zeros = vec![0; index.len()];
            (index, zeros)
        };
        let m = index.len();
        let mut w = Worklist {
            g,
            degree: (0..g.n()).map(|u| g.degree(u)).collect(),
            vertex_alive: vec![true; g.n()],
            edge_alive: vec![true; m],
            vertex_queue: Vec::new(),
            edge_queue: Vec::new(),
            vertex_queued: vec![false; g.n()],
            edge_queued: vec![false; m],
            index,
            triangles,
            vertex_limit,
            edge_limit,
        };
        for u in 0..g.n() {
            w.check_vertex(u);
        }
        for e in 0..m {
            w.check_edge(e);
        }
        w
    }

    fn check_vertex(&mut self, u: usize) {
        if !self.vertex_queued[u] && self.vertex_alive[u] && (self.degree[u] as i64) <= self.vertex_limit {
            self.vertex_queued[u] = true;
            self.vertex_queue.push(u);
        }
    }

    fn check_edge(&mut self, e: usize) {
        if !self.edge_queued[e] && self.edge_alive[e] && (self.triangles[e] as i64) <= self.edge_limit {
            self.edge_queued[e] = true;
            self.edge_queue.push(e);
        }
    }

    /// Returns the deleted vertices and the deleted edges whose endpoints
    /// both survive.
    fn run(mut self) -> (Vec<usize>, Vec<(usize, usize)>) {
        loop {
            if let Some(e) = self.edge_queue.pop() {
                if self.edge_alive[e] {
                    self.remove_edge(e);
                }
            } else if let Some(u) = self.vertex_queue.pop() {
                if self.vertex_alive[u] {
                    self.remove_vertex(u);
                }
            } else {
                break;
            }
        }
        let free = (0..self.g.n()).filter(|&u| !self.vertex_alive[u]).collect();
        let edges = (0..self.index.len())
            .filter(|&e| !self.edge_alive[e])
            .map(|e| self.index.endpoints(e))
            .filter(|&(u, v)| self.vertex_alive[u] && self.vertex_alive[v])
            .collect();
        (free, edges)
    }

    fn remove_vertex(&mut self, u: usize) {
        for i in 0..self.g.degree(u) {
            let e = self.index.arc(self.g, u, i);
            if self.edge_alive[e] {
                self.remove_edge(e);
            }
        }
        self.vertex_alive[u] = false;
    }

    fn remove_edge(&mut self, e: usize) {
        self.edge_alive[e] = false;
        let (u, v) = self.index.endpoints(e);
        self.degree[u] -= 1;
        self.degree[v] -= 1;
        self.check_vertex(u);
        self.check_vertex(v);
        if self.edge_limit < 0 {
            return;
        }
        let (a, b) = if self.g.degree(u) <= self.g.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        for (i, &w) in self.g.neighbors(a).iter().enumerate() {
            let e_aw = self.index.arc(self.g, a, i);
            if w == b || !self.edge_alive[e_aw] {
                continue;
            }
            if let Some(e_bw) = self.index.find(self.g, b, w) {
                if self.edge_alive[e_bw] {
                    self.triangles[e_aw] -= 1;
                    self.triangles[e_bw] -= 1;
                    self.check_edge(e_aw);
                    self.check_edge(e_bw);
                }
            }
        }
    }
}
