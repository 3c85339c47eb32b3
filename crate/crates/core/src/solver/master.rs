//! Restricted covering problem over a pool of cliques.
//!
//! Given the pool, a budget `k` and a target `y`, decide whether at most `k`
//! vertices can be deleted so that every pool clique keeps at most `y`
//! vertices. This is a hitting set problem with multiplicities: clique `C`
//! needs `|C| - y` of its vertices deleted. It is solved by depth-first
//! branch and bound, branching on which vertex of one unmet clique to delete
//! next and pruning with the summed deficits of a disjoint subfamily.

use std::time::Instant;

use crate::clique::Clique;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MasterOutcome {
    /// A deletion set meeting every pool clique, sorted.
    Feasible(Vec<usize>),
    Infeasible,
    /// The node or time budget ran out first.
    ResourceLimit,
}

#[derive(Clone, Debug)]
pub struct MasterState {
    n: usize,
    k: usize,
    pool: Vec<Vec<usize>>,
    member_of: Vec<Vec<usize>>,
    /// `dominators[v]`: vertices that must be deleted whenever `v` is.
    dominators: Vec<Vec<usize>>,
    /// `dominated[u]`: vertices that may not be deleted while `u` survives.
    dominated: Vec<Vec<usize>>,
    pub nodes: u64,
    pub node_limit: Option<u64>,
    pub deadline: Option<Instant>,
}

impl MasterState {
    /// `domination` holds `(u, v)` pairs: deleting `v` requires deleting `u`.
    pub fn new(n: usize, k: usize, domination: &[(usize, usize)]) -> Self {
        let mut dominators = vec![Vec::new(); n];
        let mut dominated = vec![Vec::new(); n];
        for &(u, v) in domination {
            dominators[v].push(u);
            dominated[u].push(v);
        }
        MasterState {
            n,
            k,
            pool: Vec::new(),
            member_of: vec![Vec::new(); n],
            dominators,
            dominated,
            nodes: 0,
            node_limit: None,
            deadline: None,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn pool_len(&self) -> usize {
        self.pool.len()
    }

    pub fn pool(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.pool.iter().map(Vec::as_slice)
    }

    /// Adds a clique unless an identical one is already present.
    pub fn add_clique(&mut self, clique: &Clique) -> bool {
        let vertices = clique.vertices();
        debug_assert!(vertices.iter().all(|&v| v < self.n));
        if vertices.is_empty() {
            return false;
        }
        let duplicate = self.member_of[vertices[0]]
            .iter()
            .any(|&c| self.pool[c] == vertices);
        if duplicate {
            return false;
        }
        let id = self.pool.len();
        for &v in vertices {
            self.member_of[v].push(id);
        }
        self.pool.push(vertices.to_vec());
        true
    }

    /// Decides the restricted problem at `y`, honouring domination pairs.
    pub fn solve(&mut self, y: usize) -> MasterOutcome {
        let mut search = Search::new(self, y);
        let outcome = match search.node() {
            Ok(true) => {
                let mut s: Vec<usize> = (0..self.n).filter(|&v| search.deleted[v]).collect();
                s.sort_unstable();
                MasterOutcome::Feasible(s)
            }
            Ok(false) => MasterOutcome::Infeasible,
            Err(Halt) => MasterOutcome::ResourceLimit,
        };
        self.nodes += search.nodes;
        outcome
    }
}

struct Halt;

struct Search<'a> {
    st: &'a MasterState,
    y: usize,
    deleted: Vec<bool>,
    kept: Vec<bool>,
    size: usize,
    /// `hits[c] = |C ∩ deleted|`, `blocked[c] = |C ∩ kept|`.
    hits: Vec<usize>,
    blocked: Vec<usize>,
    nodes: u64,
    node_budget: Option<u64>,
    // scratch for the packing bound
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(st: &'a MasterState, y: usize) -> Self {
        Search {
            st,
            y,
            deleted: vec![false; st.n],
            kept: vec![false; st.n],
            size: 0,
            hits: vec![0; st.pool.len()],
            blocked: vec![0; st.pool.len()],
            nodes: 0,
            node_budget: st.node_limit.map(|l| l.saturating_sub(st.nodes)),
            used: vec![false; st.n],
        }
    }

    fn deficit(&self, c: usize) -> usize {
        (self.st.pool[c].len() - self.hits[c]).saturating_sub(self.y)
    }

    fn open(&self, c: usize) -> usize {
        self.st.pool[c].len() - self.hits[c] - self.blocked[c]
    }

    /// Deletes `v` and, transitively, its dominators. On conflict or budget
    /// overflow the partial change is still recorded in `trail` for undo.
    fn delete(&mut self, v: usize, trail: &mut Vec<usize>) -> bool {
        let mut stack = vec![v];
        while let Some(w) = stack.pop() {
            if self.deleted[w] {
                continue;
            }
            if self.kept[w] || self.size == self.st.k {
                return false;
            }
            self.deleted[w] = true;
            self.size += 1;
            trail.push(w);
            for &c in &self.st.member_of[w] {
                self.hits[c] += 1;
            }
            stack.extend(self.st.dominators[w].iter().copied());
        }
        true
    }

    fn undelete(&mut self, trail: &[usize]) {
        for &w in trail {
            self.deleted[w] = false;
            self.size -= 1;
            for &c in &self.st.member_of[w] {
                self.hits[c] -= 1;
            }
        }
    }

    /// Marks `v` and, transitively, everything it dominates as kept.
    fn keep(&mut self, v: usize, trail: &mut Vec<usize>) -> bool {
        let mut stack = vec![v];
        while let Some(w) = stack.pop() {
            if self.kept[w] {
                continue;
            }
            if self.deleted[w] {
                return false;
            }
            self.kept[w] = true;
            trail.push(w);
            for &c in &self.st.member_of[w] {
                self.blocked[c] += 1;
            }
            stack.extend(self.st.dominated[w].iter().copied());
        }
        true
    }

    fn unkeep(&mut self, trail: &[usize]) {
        for &w in trail {
            self.kept[w] = false;
            for &c in &self.st.member_of[w] {
                self.blocked[c] -= 1;
            }
        }
    }

    fn tick(&mut self) -> Result<(), Halt> {
        self.nodes += 1;
        if let Some(budget) = self.node_budget {
            if self.nodes > budget {
                return Err(Halt);
            }
        }
        if self.nodes.is_multiple_of(256) {
            if let Some(d) = self.st.deadline {
                if Instant::now() >= d {
                    return Err(Halt);
                }
            }
        }
        Ok(())
    }

    /// Returns `Ok(true)` with `deleted` holding a solution, or `Ok(false)`
    /// if none extends the current partial assignment.
    fn node(&mut self) -> Result<bool, Halt> {
        self.tick()?;
        let mut unmet: Vec<usize> = Vec::new();
        for c in 0..self.st.pool.len() {
            let d = self.deficit(c);
            if d > 0 {
                if self.open(c) < d {
                    return Ok(false);
                }
                unmet.push(c);
            }
        }
        if unmet.is_empty() {
            return Ok(true);
        }
        let room = self.st.k - self.size;
        if self.packing_bound(&mut unmet) > room {
            return Ok(false);
        }

        // Fewest spare choices first, then the largest deficit.
        let &branch = unmet
            .iter()
            .min_by_key(|&&c| (self.open(c) - self.deficit(c), std::cmp::Reverse(self.deficit(c)), c))
            .unwrap();
        let mut candidates: Vec<usize> = self.st.pool[branch]
            .iter()
            .copied()
            .filter(|&v| !self.deleted[v] && !self.kept[v])
            .collect();
        let weight = |v: usize| {
            self.st.member_of[v]
                .iter()
                .filter(|&&c| self.deficit(c) > 0)
                .count()
        };
        let mut keyed: Vec<(std::cmp::Reverse<usize>, usize)> =
            candidates.iter().map(|&v| (std::cmp::Reverse(weight(v)), v)).collect();
        keyed.sort_unstable();
        candidates = keyed.into_iter().map(|(_, v)| v).collect();

        // Branch i deletes candidates[i] and keeps candidates[..i].
        let mut kept_trail = Vec::new();
        let mut result = Ok(false);
        for v in candidates {
            let mut trail = Vec::new();
            if self.delete(v, &mut trail) {
                match self.node() {
                    Ok(true) => {
                        result = Ok(true);
                        break;
                    }
                    Ok(false) => {}
                    Err(h) => {
                        result = Err(h);
                        break;
                    }
                }
            }
            self.undelete(&trail);
            if !self.keep(v, &mut kept_trail) {
                break;
            }
        }
        if !matches!(result, Ok(true)) {
            self.unkeep(&kept_trail);
        }
        result
    }

    /// Summed deficits of a greedily chosen subfamily of unmet cliques whose
    /// open vertices are pairwise disjoint.
    fn packing_bound(&mut self, unmet: &mut [usize]) -> usize {
        unmet.sort_unstable_by_key(|&c| (std::cmp::Reverse(self.deficit(c)), self.open(c), c));
        let mut total = 0;
        let mut marked = Vec::new();
        for &c in unmet.iter() {
            let free = self.st.pool[c]
                .iter()
                .all(|&v| self.deleted[v] || self.kept[v] || !self.used[v]);
            if free {
                for &v in &self.st.pool[c] {
                    if !self.deleted[v] && !self.kept[v] {
                        self.used[v] = true;
                        marked.push(v);
                    }
                }
                total += self.deficit(c);
            }
        }
        for v in marked {
            self.used[v] = false;
        }
        total
    }
}
