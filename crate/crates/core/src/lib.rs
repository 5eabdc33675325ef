//! Exact treedepth via positive-instance-driven dynamic programming.
//!
//! The solver searches for elimination trees of depth 1, 2, ... and builds
//! each decision bottom-up from sets of vertices that are known to fit below
//! a given depth. Candidate sets are indexed in a trie keyed by their
//! neighbourhoods, and a domination rule discards sets that no optimal
//! elimination tree needs.
//!
//! ```
//! use treedepth::{parse_gr, solve_treedepth, SolveOptions};
//!
//! let g = parse_gr("p tdp 4 3\n1 2\n2 3\n3 4\n").unwrap();
//! let solution = solve_treedepth(&g, &SolveOptions::default());
//! assert_eq!(solution.depth, 3);
//! ```

pub mod bitset;
pub mod cli;
pub mod domination;
pub mod graph;
pub mod oracle;
mod par;
pub mod solver;
pub mod trie;

pub use bitset::VertexSet;
pub use domination::DominationIndex;
pub use graph::{parse_gr, Graph, ParseError};
pub use oracle::{brute_force_treedepth, validate_decomposition, Oracle, OracleError};
pub use par::available as parallel_available;
pub use solver::{
    build_all_levels, build_level, decide_depth, enumerate_combinations, reconstruct_forest,
    solve_treedepth, Candidate, Decision, EliminationForest, LevelCollection, Solution,
    SolveOptions,
};
pub use trie::{CandidateHandle, CandidateIndex, LinearIndex, TrieIndex};
