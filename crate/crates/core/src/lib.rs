//! Exact solver for the clique interdiction problem: delete at most `k`
//! vertices of a graph so that the largest remaining clique is as small as
//! possible.
//!
//! ```
//! use cip_core::{graph::Graph, solver::{solve, SolveConfig}};
//!
//! let result = solve(&Graph::complete(5), 2, &SolveConfig::default());
//! assert_eq!(result.theta, 3);
//! assert_eq!(result.interdiction_set.len(), 2);
//! ```
//!
//! The pieces are usable on their own: [`reduce`] holds the data reduction
//! rules and the preprocessing pipeline, [`bounds`] the clique-family lower
//! bounds, [`clique`] the maximum clique search, and [`oracle`] brute-force
//! reference values for small graphs.

pub mod bitset;
pub mod bounds;
pub mod clique;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod reduce;
pub mod report;
pub mod solver;

pub use graph::Graph;
pub use solver::{solve, SolveConfig, SolveResult, SolveStatus};
