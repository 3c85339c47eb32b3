use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// A clique stored as a sorted vertex list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Clique {
    vertices: Vec<usize>,
}

impl Clique {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Clique { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Size of the intersection with another clique.
    pub fn overlap(&self, other: &Clique) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.vertices.len() && j < other.vertices.len() {
            match self.vertices[i].cmp(&other.vertices[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }
}

/// A list of cliques, flagged when they are known to be pairwise disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueFamily {
    cliques: Vec<Clique>,
    disjoint: bool,
}

impl Default for CliqueFamily {
    fn default() -> Self {
        CliqueFamily {
            cliques: Vec::new(),
            disjoint: true,
        }
    }
}

impl CliqueFamily {
    /// Builds a family and records whether its members are pairwise disjoint.
    pub fn new(cliques: Vec<Clique>) -> Self {
        let mut seen = std::collections::HashSet::new();
        let disjoint = cliques
            .iter()
            .flat_map(|c| c.vertices().iter())
            .all(|&v| seen.insert(v));
        CliqueFamily { cliques, disjoint }
    }

    /// Builds a family from cliques given by their sizes over fresh vertices.
    pub fn from_sizes(sizes: &[usize]) -> Self {
        let mut next = 0;
        let cliques = sizes
            .iter()
            .map(|&s| {
                let c = Clique::new((next..next + s).collect());
                next += s;
                c
            })
            .collect();
        CliqueFamily {
            cliques,
            disjoint: true,
        }
    }

    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    pub fn is_disjoint(&self) -> bool {
        self.disjoint
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn max_size(&self) -> usize {
        self.cliques.iter().map(Clique::size).max().unwrap_or(0)
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.cliques
            .iter()
            .all(|c| c.vertices().iter().all(|&v| v < g.n()) && g.is_clique(c.vertices()))
    }
}

/// Scans vertices in `order`; each joins the earliest-created clique it is
/// fully adjacent to, or else starts a new singleton.
///
/// A vertex can only join a clique holding one of its neighbours, so the scan
/// counts, per candidate clique, how many members are neighbours and compares
/// against the clique size. The outcome equals the quadratic scan over all
/// cliques at `O(m)` cost.
pub fn greedy_disjoint_cliques(g: &Graph, order: &[usize]) -> CliqueFamily {
    let n = g.n();
    debug_assert_eq!(order.len(), n);
    let mut owner = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut hits: Vec<usize> = Vec::new();
    let mut touched: Vec<usize> = Vec::new();
    for &x in order {
        for &v in g.neighbors(x) {
            let c = owner[v];
            if c != usize::MAX {
                if hits[c] == 0 {
                    touched.push(c);
                }
                hits[c] += 1;
            }
        }
        let target = touched
            .iter()
            .copied()
            .filter(|&c| hits[c] == members[c].len())
            .min();
        for &c in &touched {
            hits[c] = 0;
        }
        touched.clear();
        let c = match target {
            Some(c) => c,
            None => {
                members.push(Vec::new());
                hits.push(0);
                members.len() - 1
            }
        };
        members[c].push(x);
        owner[x] = c;
    }
    CliqueFamily {
        cliques: members.into_iter().map(Clique::new).collect(),
        disjoint: true,
    }
}
