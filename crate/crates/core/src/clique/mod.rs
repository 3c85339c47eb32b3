//! Clique oracles shared by the reductions, the lower bounds and the solver:
//! exact maximum clique, greedy coloring, per-neighbourhood clique sizes and
//! greedy disjoint clique families.

mod coloring;
mod family;
mod neighborhood;
mod search;

pub use coloring::{greedy_coloring, saturations, Coloring};
pub use family::{greedy_disjoint_cliques, Clique, CliqueFamily};
pub use neighborhood::{
    neighborhood_clique_size, neighborhood_clique_sizes, neighborhood_clique_sizes_reusing, NeighborhoodClique,
};
pub use search::{max_clique, max_clique_with, CliqueOutcome, CliqueQuery, DEFAULT_DENSE_THRESHOLD};

use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Vertex visiting order used by greedy coloring and the disjoint clique scan.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeedOrder {
    /// Descending degree, ties by ascending id.
    #[default]
    DegDesc,
    /// Ascending degree, ties by ascending id.
    DegAsc,
    /// Ascending id.
    Id,
}

impl SeedOrder {
    pub fn order(self, g: &Graph) -> Vec<usize> {
        let mut order: Vec<usize> = (0..g.n()).collect();
        match self {
            SeedOrder::DegDesc => order.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u)),
            SeedOrder::DegAsc => order.sort_by_key(|&u| (g.degree(u), u)),
            SeedOrder::Id => {}
        }
        order
    }

    /// The order used for the second family of the bipartite bound.
    pub fn complement(self) -> SeedOrder {
        match self {
            SeedOrder::DegDesc => SeedOrder::DegAsc,
            SeedOrder::DegAsc => SeedOrder::DegDesc,
            SeedOrder::Id => SeedOrder::DegAsc,
        }
    }
}

impl std::str::FromStr for SeedOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "deg-desc" => Ok(SeedOrder::DegDesc),
            "deg-asc" => Ok(SeedOrder::DegAsc),
            "id" => Ok(SeedOrder::Id),
            other => Err(format!("unknown seed order `{other}` (expected deg-desc, deg-asc or id)")),
        }
    }
}
