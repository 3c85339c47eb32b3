use std::collections::VecDeque;
use std::time::Instant;

use crate::clique::Coloring;
use crate::graph::Graph;

use super::{Instance, Stage};

/// Deletes vertices whose saturation is at most `lb - 2`, recoloring the
/// survivors on the fly so that saturations keep dropping.
pub fn color_reduce(inst: Instance, coloring: &Coloring) -> Instance {
    color_reduce_counted(inst, coloring).0
}

/// As [`color_reduce`], also returning the number of queue pops.
pub fn color_reduce_counted(mut inst: Instance, coloring: &Coloring) -> (Instance, usize) {
    let start = Instant::now();
    let limit = inst.threshold(2);
    if limit < 0 || inst.graph.n() == 0 {
        inst.record(Stage::Color, start.elapsed());
        return (inst, 0);
    }
    debug_assert!(coloring.is_proper(&inst.graph));
    let mut state = ColorState::new(&inst.graph, coloring.clone().into_colors());
    let pops = state.run(limit);
    let free: Vec<usize> = (0..inst.graph.n()).filter(|&u| !state.alive[u]).collect();
    inst.apply(Stage::Color, &[], &free, &[], start.elapsed());
    (inst, pops)
}

struct ColorState<'a> {
    g: &'a Graph,
    color: Vec<usize>,
    alive: Vec<bool>,
    saturation: Vec<usize>,
    // stamp[c] == token marks color c as seen in the current scan
    stamp: Vec<usize>,
    token: usize,
}

impl<'a> ColorState<'a> {
    fn new(g: &'a Graph, color: Vec<usize>) -> Self {
        let slots = color.iter().copied().max().unwrap_or(0).max(g.n()) + 2;
        let mut s = ColorState {
            g,
            color,
            alive: vec![true; g.n()],
            saturation: vec![0; g.n()],
            stamp: vec![0; slots],
            token: 0,
        };
        for u in 0..g.n() {
            s.saturation[u] = s.count_saturation(u);
        }
        s
    }

    fn mark_neighbor_colors(&mut self, u: usize) -> usize {
        self.token += 1;
        let mut distinct = 0;
        for &v in self.g.neighbors(u) {
            if self.alive[v] && self.stamp[self.color[v]] != self.token {
                self.stamp[self.color[v]] = self.token;
                distinct += 1;
            }
        }
        distinct
    }

    fn count_saturation(&mut self, u: usize) -> usize {
        self.mark_neighbor_colors(u)
    }

    fn smallest_free_color(&mut self, u: usize) -> usize {
        self.mark_neighbor_colors(u);
        (1..).find(|&c| self.stamp[c] != self.token).unwrap()
    }

    fn run(&mut self, limit: i64) -> usize {
        let n = self.g.n();
        let mut queued = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n)
            .filter(|&u| self.saturation[u] as i64 <= limit)
            .collect();
        for &u in &queue {
            queued[u] = true;
        }
        let mut pops = 0;
        while let Some(x) = queue.pop_front() {
            queued[x] = false;
            pops += 1;
            if self.saturation[x] as i64 <= limit {
                self.alive[x] = false;
            } else {
                let c = self.smallest_free_color(x);
                if c == self.color[x] {
                    continue;
                }
                self.color[x] = c;
            }
            for i in 0..self.g.degree(x) {
                let y = self.g.neighbors(x)[i];
                if !self.alive[y] {
                    continue;
                }
                self.saturation[y] = self.count_saturation(y);
                let removable = self.saturation[y] as i64 <= limit;
                if !queued[y] && (removable || self.smallest_free_color(y) < self.color[y]) {
                    queued[y] = true;
                    queue.push_back(y);
                }
            }
        }
        pops
    }
}
