//! Existence and explicit construction of configurations of subspaces with
//! fixed pairwise angles, decided through the spectrum of a graph.
//!
//! Each vertex of a simple graph carries a subspace; adjacent subspaces meet
//! at a prescribed angle `φ` with `cos² φ = τ`, non-adjacent ones are
//! orthogonal. Such a configuration exists iff the Gram matrix
//! `I + √τ · A` is positive semidefinite, so for a tree with index `r` the
//! admissible parameters are exactly `(0, 1/r²]`.

pub mod classify;
pub mod cli;
pub mod construct;
pub mod error;
pub mod family;
pub mod graph;
pub mod sigma;
pub mod spectra;
pub mod trees;

pub use classify::{
    classify_index, classify_structure, ComponentLabel, GraphClass, IndexCategory, IndexClass,
};
pub use construct::{
    angle_of, construct_configuration, verify_configuration, SubspaceConfiguration,
    VerificationReport,
};
pub use error::{Error, Result};
pub use family::NamedFamily;
pub use graph::{AdjacencyMatrix, Graph};
pub use sigma::{
    existence, gram_matrix, sigma_bounds, sigma_cycle, sigma_tree, trichotomy, ExistenceVerdict,
    GramMatrix, QuarterPosition, SigmaInterval, TauWeighting,
};
pub use spectra::{
    eigen_decompose, eigen_symmetric, graph_index, graph_spectrum, min_eigenvalue, Spectrum,
    SymmetricMatrix,
};
pub use trees::enumerate_trees;
