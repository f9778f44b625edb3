//! Exact combinatorial optimization for graph classes decomposable by
//! 2-joins: maximum weighted clique, maximum weighted stable set, and
//! optimal coloring, via decomposition trees with basic leaves, plus the
//! brute-force oracles, generators and file formats needed to verify every
//! step.

pub mod blocks;
pub mod error;
pub mod extension;
pub mod fixtures;
pub mod flow;
pub mod matching;
pub mod graph;
pub mod linegraph;
pub mod oracle;
pub mod recognition;
pub mod solvers;
pub mod tree;
pub mod twojoin;
pub mod vset;

pub use graph::{FlatPath, Multigraph, Weight, WeightedGraph};
pub use twojoin::TwoJoinSplit;
