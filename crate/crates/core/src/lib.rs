//! Spectral graph filters, topology perturbation strategies, and
//! interpretable stability bounds for unweighted undirected graphs.
//!
//! The crate is organised around a small pipeline:
//!
//! | Module | Provides |
//! |--------|----------|
//! | [`graph`] | Graph/perturbation data model, normalised Laplacian, error matrix |
//! | [`gen`] | Six seeded random-graph models with connectivity rejection sampling |
//! | [`spectral`] | Jacobi eigensolver, graph filters, matrix norms, filter distance |
//! | [`perturb`] | Six edge-edit strategies under a fixed budget (random, greedy, PGD) |
//! | [`bounds`] | Per-node degree statistics and the structural bound chain on the error norm |
//! | [`harness`] | End-to-end denoising experiments, CSV output, aggregation, box plots |
//!
//! Everything is deterministic under a fixed 64-bit seed; all types are
//! immutable after construction and safe to share across threads.

use thiserror::Error;

pub mod bounds;
pub mod gen;
pub mod graph;
pub mod harness;
pub mod perturb;
pub mod plot;
pub mod spectral;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop ({0}, {0}) is not allowed")]
    SelfLoop(usize),

    #[error("node id {node} out of range for graph on {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("edge ({0}, {1}) not present in the graph")]
    EdgeNotFound(usize, usize),

    #[error("edge ({0}, {1}) already present in the graph")]
    EdgeAlreadyExists(usize, usize),

    #[error("matrix order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("node {0} is isolated")]
    IsolatedNode(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("eigensolver did not converge within {sweeps} sweeps (off-diagonal mass {off:.3e})")]
    NonConvergence { sweeps: usize, off: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("generation failed: {0}")]
    GenerationFailed(String),

    #[error("budget unreachable: {0}")]
    BudgetUnreachable(String),

    #[error("perturbation is not degree-preserving (node {0} changes degree)")]
    NotDegreePreserving(usize),

    #[error("bound requires a filter that is linearly stable for the normalised Laplacian; got {0}")]
    UnsupportedFilter(String),

    #[error("signal must be non-zero")]
    ZeroSignal,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
