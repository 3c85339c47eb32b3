//! Immutable simple undirected graph in compressed sparse row form.
//!
//! Vertex ids are dense `0..n`. Every reduction produces a fresh compacted
//! graph together with a [`VertexMap`] so that results can be translated
//! back to the ids of the input graph.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge #{index} ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange {
        index: usize,
        u: usize,
        v: usize,
        n: usize,
    },
    #[error("edge ({0}, {1}) is not present in the graph")]
    MissingEdge(usize, usize),
    #[error("vertex {0} is not present in the graph")]
    MissingVertex(usize),
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// Builds a simple graph from a raw edge list. Self-loops are dropped and
    /// duplicate pairs (in either orientation) are collapsed.
    pub fn from_edges<I>(n: usize, raw_edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (index, (u, v)) in raw_edges.into_iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { index, u, v, n });
            }
            if u == v {
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Builds a graph from per-vertex neighbor lists, which need not be sorted
    /// or deduplicated but must be symmetric and loop-free.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        Graph { offsets, targets }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Self::from_adjacency(adj)
    }

    pub fn n(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Iterates every edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            let nbrs = self.neighbors(u);
            let start = nbrs.partition_point(|&v| v <= u);
            nbrs[start..].iter().map(move |&v| (u, v))
        })
    }

    /// Returns `true` when every pair of `vertices` is adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }

    /// Computes `G[V \ removed]`. The returned map sends new ids to old ids.
    pub fn remove_vertices(&self, removed: &[usize]) -> (Graph, VertexMap) {
        let mut keep = vec![true; self.n()];
        for &u in removed {
            keep[u] = false;
        }
        self.retain_vertices(&keep)
    }

    /// Computes the subgraph induced by the vertices with `keep[u] == true`.
    pub fn retain_vertices(&self, keep: &[bool]) -> (Graph, VertexMap) {
        let map = VertexMap::from_mask(keep);
        let mut offsets = Vec::with_capacity(map.len() + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        for &old in map.new_to_old() {
            targets.extend(
                self.neighbors(old)
                    .iter()
                    .filter_map(|&w| map.to_new(w)),
            );
            offsets.push(targets.len());
        }
        (Graph { offsets, targets }, map)
    }

    /// Subgraph induced by an arbitrary vertex list; local id `i` is `vertices[i]`.
    /// `vertices` must be sorted ascending and free of duplicates.
    pub fn induced_sorted(&self, vertices: &[usize]) -> Graph {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut offsets = Vec::with_capacity(vertices.len() + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        for &v in vertices {
            intersect_positions(self.neighbors(v), vertices, &mut targets);
            offsets.push(targets.len());
        }
        Graph { offsets, targets }
    }

    /// Computes `(V, E \ removed)`. Fails if an edge is absent.
    pub fn remove_edges(&self, removed: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj: Vec<Vec<usize>> = (0..self.n()).map(|u| self.neighbors(u).to_vec()).collect();
        for &(u, v) in removed {
            if u >= self.n() || v >= self.n() {
                return Err(GraphError::MissingEdge(u, v));
            }
            let pu = adj[u].binary_search(&v).map_err(|_| GraphError::MissingEdge(u, v))?;
            adj[u].remove(pu);
            let pv = adj[v].binary_search(&u).map_err(|_| GraphError::MissingEdge(u, v))?;
            adj[v].remove(pv);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Counts common neighbours of both endpoints for every edge, by listing
    /// triangles over the degree-ordered orientation.
    pub fn triangle_counts(&self) -> EdgeTriangleCount {
        let index = EdgeIndex::new(self);
        let counts = index.triangle_counts(self);
        EdgeTriangleCount { index, counts }
    }
}

/// Pushes the positions in `sorted` of every element of `list` found there.
fn intersect_positions(list: &[usize], sorted: &[usize], out: &mut Vec<usize>) {
    if list.len() * 8 < sorted.len() {
        for &w in list {
            if let Ok(p) = sorted.binary_search(&w) {
                out.push(p);
            }
        }
    } else {
        let (mut i, mut j) = (0, 0);
        while i < list.len() && j < sorted.len() {
            match list[i].cmp(&sorted[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(j);
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

/// Bijection between the vertices of a reduced graph and the graph it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    new_to_old: Vec<usize>,
    old_to_new: Vec<Option<usize>>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap {
            new_to_old: (0..n).collect(),
            old_to_new: (0..n).map(Some).collect(),
        }
    }

    pub fn from_mask(keep: &[bool]) -> Self {
        let mut new_to_old = Vec::new();
        let old_to_new = keep
            .iter()
            .enumerate()
            .map(|(old, &k)| {
                k.then(|| {
                    new_to_old.push(old);
                    new_to_old.len() - 1
                })
            })
            .collect();
        VertexMap {
            new_to_old,
            old_to_new,
        }
    }

    /// Number of surviving vertices.
    pub fn len(&self) -> usize {
        self.new_to_old.len()
    }

    pub fn is_empty(&self) -> bool {
        self.new_to_old.is_empty()
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn new_to_old(&self) -> &[usize] {
        &self.new_to_old
    }

    /// `self` maps B -> A and `inner` maps C -> B; the result maps C -> A.
    pub fn compose(&self, inner: &VertexMap) -> VertexMap {
        let new_to_old: Vec<usize> = inner.new_to_old.iter().map(|&b| self.new_to_old[b]).collect();
        let mut old_to_new = vec![None; self.old_to_new.len()];
        for (c, &a) in new_to_old.iter().enumerate() {
            old_to_new[a] = Some(c);
        }
        VertexMap {
            new_to_old,
            old_to_new,
        }
    }
}

/// Dense edge numbering: edge ids follow the order of [`Graph::edges`], and
/// every arc of the CSR arrays knows the id of its edge.
#[derive(Clone, Debug)]
pub struct EdgeIndex {
    arc_edge: Vec<usize>,
    endpoints: Vec<(usize, usize)>,
}

impl EdgeIndex {
    pub fn new(g: &Graph) -> Self {
        let mut arc_edge = vec![usize::MAX; g.targets.len()];
        let mut endpoints = Vec::with_capacity(g.m());
        for u in 0..g.n() {
            for (i, &v) in g.neighbors(u).iter().enumerate() {
                if u < v {
                    arc_edge[g.offsets[u] + i] = endpoints.len();
                    endpoints.push((u, v));
                }
            }
        }
        // Fill the reverse arcs: scanning v's list in order meets the
        // smaller endpoints in increasing order.
        for v in 0..g.n() {
            for (i, &u) in g.neighbors(v).iter().enumerate() {
                if u < v {
                    let pos = g.offsets[u] + g.neighbors(u).binary_search(&v).unwrap();
                    arc_edge[g.offsets[v] + i] = arc_edge[pos];
                }
            }
        }
        EdgeIndex {
            arc_edge,
            endpoints,
        }
    }

    pub fn len(&self) -> usize {
        self.endpoints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.endpoints.is_empty()
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.endpoints[e]
    }

    /// Edge id of the `i`-th arc out of `u`.
    #[inline]
    pub fn arc(&self, g: &Graph, u: usize, i: usize) -> usize {
        self.arc_edge[g.offsets[u] + i]
    }

    pub fn find(&self, g: &Graph, u: usize, v: usize) -> Option<usize> {
        g.neighbors(u)
            .binary_search(&v)
            .ok()
            .map(|i| self.arc(g, u, i))
    }

    fn triangle_counts(&self, g: &Graph) -> Vec<usize> {
        let n = g.n();
        let rank = |u: usize| (g.degree(u), u);
        let mut counts = vec![0usize; self.len()];
        // Out-arcs go from lower to higher (degree, id) rank, so every
        // out-list has O(sqrt m) entries.
        let out: Vec<Vec<(usize, usize)>> = (0..n)
            .map(|u| {
                g.neighbors(u)
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| rank(v) > rank(u))
                    .map(|(i, &v)| (v, self.arc(g, u, i)))
                    .collect()
            })
            .collect();
        let mut mark = vec![usize::MAX; n];
        for u in 0..n {
            for &(v, e) in &out[u] {
                mark[v] = e;
            }
            for &(v, e_uv) in &out[u] {
                for &(w, e_vw) in &out[v] {
                    let e_uw = mark[w];
                    if e_uw != usize::MAX {
                        counts[e_uv] += 1;
                        counts[e_vw] += 1;
                        counts[e_uw] += 1;
                    }
                }
            }
            for &(v, _) in &out[u] {
                mark[v] = usize::MAX;
            }
        }
        counts
    }
}

/// Per-edge number of triangles, i.e. `|N(u) ∩ N(v)|` for each edge `{u, v}`.
#[derive(Clone, Debug)]
pub struct EdgeTriangleCount {
    index: EdgeIndex,
    counts: Vec<usize>,
}

impl EdgeTriangleCount {
    pub fn index(&self) -> &EdgeIndex {
        &self.index
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn get(&self, g: &Graph, u: usize, v: usize) -> Option<usize> {
        self.index.find(g, u, v).map(|e| self.counts[e])
    }

    pub fn total_triangles(&self) -> usize {
        self.counts.iter().sum::<usize>() / 3
    }

    pub(crate) fn into_parts(self) -> (EdgeIndex, Vec<usize>) {
        (self.index, self.counts)
    }
}
