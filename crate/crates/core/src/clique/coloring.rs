use crate::graph::Graph;

/// Proper vertex coloring with colors starting at 1, together with the
/// saturation `ds_c(u)`: the number of distinct colors in `N(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    color: Vec<usize>,
    num_colors: usize,
    saturation: Vec<usize>,
}

impl Coloring {
    /// Wraps an explicit color assignment. Returns `None` if it is not proper
    /// or uses color 0.
    pub fn from_colors(g: &Graph, color: Vec<usize>) -> Option<Self> {
        if color.len() != g.n() || color.contains(&0) {
            return None;
        }
        if g.edges().any(|(u, v)| color[u] == color[v]) {
            return None;
        }
        let saturation = saturations(g, &color);
        let num_colors = color.iter().copied().max().unwrap_or(0);
        Some(Coloring {
            color,
            num_colors,
            saturation,
        })
    }

    pub fn color(&self, u: usize) -> usize {
        self.color[u]
    }

    pub fn colors(&self) -> &[usize] {
        &self.color
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn saturation(&self, u: usize) -> usize {
        self.saturation[u]
    }

    pub fn saturations(&self) -> &[usize] {
        &self.saturation
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().all(|(u, v)| self.color[u] != self.color[v])
    }

    pub(crate) fn into_colors(self) -> Vec<usize> {
        self.color
    }
}

/// Colors vertices in `order`, each with the smallest color missing from its
/// already-colored neighbours.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Coloring {
    let n = g.n();
    debug_assert_eq!(order.len(), n);
    let mut color = vec![0usize; n];
    // used[c] == u marks color c as taken around u
    let mut used = vec![usize::MAX; n + 2];
    let mut num_colors = 0;
    for &u in order {
        for &v in g.neighbors(u) {
            if color[v] != 0 {
                used[color[v]] = u;
            }
        }
        let c = (1..).find(|&c| used[c] != u).unwrap();
        color[u] = c;
        num_colors = num_colors.max(c);
    }
    let saturation = saturations(g, &color);
    Coloring {
        color,
        num_colors,
        saturation,
    }
}

/// Number of distinct colors among the neighbours of each vertex.
pub fn saturations(g: &Graph, color: &[usize]) -> Vec<usize> {
    let max_color = color.iter().copied().max().unwrap_or(0);
    let mut seen = vec![usize::MAX; max_color + 1];
    (0..g.n())
        .map(|u| {
            let mut distinct = 0;
            for &v in g.neighbors(u) {
                if seen[color[v]] != u {
                    seen[color[v]] = u;
                    distinct += 1;
                }
            }
            distinct
        })
        .collect()
}
