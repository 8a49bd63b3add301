//! Eccentricity matrices of graphs, with emphasis on H-joins.
//!
//! The crate builds graphs and graph compositions, computes eccentricity
//! matrices both from the definition and block-wise for H-joins, evaluates
//! their spectra, and checks closed-form spectral results against direct
//! numerical computation.

pub mod closed;
pub mod ecc;
pub mod error;
pub mod expr;
pub mod graph;
pub mod matrix;
pub mod operators;
pub mod spectral;
pub mod verify;

pub use ecc::{ecc_matrix, ecc_matrix_hjoin, factor_partition, EccMatrix, FactorSplit, HJoinEcc};
pub use error::{Error, Result};
pub use expr::{parse_graph, GraphExpr};
pub use graph::{parse_edge_list, write_edge_list, Graph, MetricProfile};
pub use matrix::IntMatrix;
pub use operators::{coalescence, generalized_corona, h_join, join, lexicographic, JoinScheme};
pub use spectral::{Inertia, Spectrum};
