use crate::graph::Graph;

/// All pairs `(u, v)` where `u` dominates `v`: `N(v) ⊊ N(u)` or
/// `N[v] ⊊ N[u]`. Some optimal interdiction set contains `u` whenever it
/// contains `v`, and since each pair has `d(u) > d(v)` the constraints can be
/// imposed together.
///
/// Sorted by `(u, v)`.
pub fn domination_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for v in 0..g.n() {
        let nv = g.neighbors(v);
        let dv = nv.len();
        if dv == 0 {
            pairs.extend((0..g.n()).filter(|&u| g.degree(u) > 0).map(|u| (u, v)));
            continue;
        }
        // closed neighbourhoods: u adjacent to v, N(v) - u inside N(u)
        for &u in nv {
            if g.degree(u) > dv && nv.iter().all(|&w| w == u || g.has_edge(u, w)) {
                pairs.push((u, v));
            }
        }
        // open neighbourhoods: every candidate is adjacent to the
        // lowest-degree neighbour of v
        let pivot = *nv.iter().min_by_key(|&&w| (g.degree(w), w)).unwrap();
        for &u in g.neighbors(pivot) {
            if u == v || g.degree(u) <= dv || nv.binary_search(&u).is_ok() {
                continue;
            }
            if nv.iter().all(|&w| g.has_edge(u, w)) {
                pairs.push((u, v));
            }
        }
    }
    pairs.sort_unstable();
    pairs
}
