//! Brute-force ground truth for ω and θ on desk-sized graphs.
//!
//! Two unrelated enumerations compute θ so that each can check the other;
//! neither shares code with the clique search or the solver.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle budget allows at most {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("budget k = {k} exceeds oracle limit {max}")]
    BudgetTooLarge { k: usize, max: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_omega_vertices: usize,
    pub max_theta_vertices: usize,
    pub max_k: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_omega_vertices: 16,
            max_theta_vertices: 14,
            max_k: 4,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Oracle {
    pub budget: OracleBudget,
}

impl Oracle {
    pub fn new(budget: OracleBudget) -> Self {
        Oracle { budget }
    }

    /// ω by checking every vertex subset.
    pub fn omega(&self, g: &Graph) -> Result<usize, OracleError> {
        let n = g.n();
        if n > self.budget.max_omega_vertices {
            return Err(OracleError::TooManyVertices {
                n,
                max: self.budget.max_omega_vertices,
            });
        }
        let adj = masks(g);
        let mut best = 0;
        for set in 0u32..(1u32 << n) {
            let size = set.count_ones() as usize;
            if size <= best {
                continue;
            }
            let is_clique = (0..n)
                .filter(|&v| set >> v & 1 == 1)
                .all(|v| set & !(1 << v) & !adj[v] == 0);
            if is_clique {
                best = size;
            }
        }
        Ok(best)
    }

    /// θ(G, k) with one optimal interdiction set. Only sets of size exactly
    /// `min(k, n)` are tried, since deleting more vertices never raises ω.
    pub fn theta(&self, g: &Graph, k: usize) -> Result<(usize, Vec<usize>), OracleError> {
        self.check_theta(g, k)?;
        let n = g.n();
        let adj = masks(g);
        let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
        let size = k.min(n);
        let mut best: Option<(usize, u32)> = None;
        for_each_subset_of_size(n, size, &mut |removed| {
            let w = omega_branching(&adj, full & !removed);
            if best.is_none_or(|(b, _)| w < b) {
                best = Some((w, removed));
            }
        });
        let (theta, removed) = best.expect("at least one subset");
        let set = (0..n).filter(|&v| removed >> v & 1 == 1).collect();
        Ok((theta, set))
    }

    /// θ(G, k) by iterating every subset of at most `k` vertices, with ω of
    /// each remainder taken from an explicit clique enumeration.
    pub fn theta_all_subsets(&self, g: &Graph, k: usize) -> Result<usize, OracleError> {
        self.check_theta(g, k)?;
        let n = g.n();
        let adj = masks(g);
        let mut best = usize::MAX;
        for removed in 0u32..(1u32 << n) {
            if removed.count_ones() as usize > k {
                continue;
            }
            let alive: Vec<usize> = (0..n).filter(|&v| removed >> v & 1 == 0).collect();
            best = best.min(omega_by_extension(&adj, &alive));
        }
        Ok(best)
    }

    fn check_theta(&self, g: &Graph, k: usize) -> Result<(), OracleError> {
        if g.n() > self.budget.max_theta_vertices {
            return Err(OracleError::TooManyVertices {
                n: g.n(),
                max: self.budget.max_theta_vertices,
            });
        }
        if k > self.budget.max_k && k < g.n() {
            return Err(OracleError::BudgetTooLarge {
                k,
                max: self.budget.max_k,
            });
        }
        Ok(())
    }
}

pub fn brute_force_omega(g: &Graph) -> Result<usize, OracleError> {
    Oracle::default().omega(g)
}

pub fn brute_force_theta(g: &Graph, k: usize) -> Result<(usize, Vec<usize>), OracleError> {
    Oracle::default().theta(g, k)
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, &v| m | 1 << v))
        .collect()
}

/// Include/exclude recursion on the lowest vertex of `cand`.
fn omega_branching(adj: &[u32], cand: u32) -> usize {
    if cand == 0 {
        return 0;
    }
    let v = cand.trailing_zeros() as usize;
    let rest = cand & !(1 << v);
    let with = 1 + omega_branching(adj, rest & adj[v]);
    if with > rest.count_ones() as usize {
        return with;
    }
    with.max(omega_branching(adj, rest))
}

/// Grows every clique in increasing vertex order and records the largest.
fn omega_by_extension(adj: &[u32], alive: &[usize]) -> usize {
    fn grow(adj: &[u32], alive: &[usize], from: usize, clique: u32, size: usize, best: &mut usize) {
        *best = (*best).max(size);
        for i in from..alive.len() {
            let v = alive[i];
            if clique & !adj[v] == 0 {
                grow(adj, alive, i + 1, clique | 1 << v, size + 1, best);
            }
        }
    }
    let mut best = 0;
    grow(adj, alive, 0, 0, 0, &mut best);
    best
}

fn for_each_subset_of_size(n: usize, size: usize, f: &mut impl FnMut(u32)) {
    fn rec(n: usize, start: usize, left: usize, acc: u32, f: &mut impl FnMut(u32)) {
        if left == 0 {
            f(acc);
            return;
        }
        for v in start..=n - left {
            rec(n, v + 1, left - 1, acc | 1 << v, f);
        }
    }
    rec(n, 0, size, 0, f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::cycle;

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    #[test]
    fn omega_examples() {
        assert_eq!(brute_force_omega(&Graph::complete(5)), Ok(5));
        assert_eq!(brute_force_omega(&cycle(5)), Ok(2));
        let p = petersen();
        assert_eq!(p.triangle_counts().total_triangles(), 0);
        assert_eq!(brute_force_omega(&p), Ok(2));
    }

    #[test]
    fn theta_examples() {
        let oracle = Oracle::default();
        let (t, s) = oracle.theta(&Graph::complete(5), 2).unwrap();
        assert_eq!((t, s.len()), (3, 2));
        assert_eq!(oracle.theta(&cycle(5), 1).unwrap().0, 2);
        assert_eq!(oracle.theta(&cycle(5), 3).unwrap().0, 1);
        assert_eq!(oracle.theta_all_subsets(&cycle(5), 1), Ok(2));
        assert_eq!(oracle.theta_all_subsets(&cycle(5), 3), Ok(1));
        assert_eq!(oracle.theta(&cycle(5), 5).unwrap().0, 0);
        assert_eq!(oracle.theta(&cycle(5), 9).unwrap().0, 0);
    }

    #[test]
    fn refuses_oversized_inputs() {
        assert!(matches!(
            brute_force_omega(&Graph::empty(17)),
            Err(OracleError::TooManyVertices { n: 17, max: 16 })
        ));
        assert!(matches!(
            brute_force_theta(&Graph::empty(15), 1),
            Err(OracleError::TooManyVertices { .. })
        ));
        assert!(matches!(
            brute_force_theta(&cycle(10), 5),
            Err(OracleError::BudgetTooLarge { k: 5, max: 4 })
        ));
    }
}
