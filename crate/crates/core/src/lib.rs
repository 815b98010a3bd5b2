//! Perfect elimination orderings of symmetric matrices.
//!
//! A linear order `π` of the index set is a perfect elimination ordering (PEO)
//! of a symmetric matrix `A` when `A[y][z] >= min(A[x][y], A[x][z])` for every
//! `x <π y <π z`. This crate decides whether a PEO exists, builds one when it
//! does, and otherwise extracts a self-contained pair of weighted chordless
//! walks proving that none exists. It also ships checkers for the neighbouring
//! ordering classes (ultrametric, Robinson, interval, cocomparability),
//! chordality of graphs and their powers, and distance-preserving orderings.
//!
//! All arithmetic is exact: matrix entries are arbitrary-precision rationals.

pub mod classes;
pub mod error;
pub mod fixtures;
pub mod forbidden;
pub mod matrix;
pub mod ordering;
pub mod report;

pub use error::{Error, Result};
pub use forbidden::{
    extract_certificate, find_self_contained_family_bruteforce, find_self_contained_pair_bruteforce,
    find_weighted_chordless_cycle, is_critical_walk, is_rooted, is_self_contained,
    is_weighted_chordless, is_weighted_chordless_cycle, structure_outcome, Certificate, Outcome,
    Walk, WalkFamily,
};
pub use matrix::{
    find_separation, graph_power, level_decomposition, min_offdiag, parse_graph, parse_matrix,
    shortest_path_matrix, Graph, LevelDecomposition, Separation, SymmetricMatrix, Value,
    WeightedGraph,
};
pub use ordering::{
    all_peos_bruteforce, find_simplicial, greedy_peo, is_peo, is_simplicial, peo_starting_at,
    LinearOrder, Triple, Verdict,
};
