//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("loops are forbidden: cannot add an edge from vertex {0} to itself")]
    LoopForbidden(usize),

    #[error("vertex {index} out of range for a graph of order {order}")]
    VertexOutOfRange { index: usize, order: usize },

    #[error("edge {u}-{v} (copy {copy}) is not present")]
    MissingEdge { u: usize, v: usize, copy: usize },

    #[error("induced subgraph requires a nonempty vertex set")]
    EmptyVertexSet,

    #[error("vertex {0} listed twice in an induced subgraph selection")]
    DuplicateVertex(usize),

    #[error("{op} requires a simple graph (some multiplicity exceeds 1)")]
    NotSimple { op: &'static str },

    #[error("{what}: order {order} exceeds the supported bound {limit}")]
    TooLarge {
        what: &'static str,
        order: usize,
        limit: usize,
    },

    #[error("{what}: order {order} is below the minimum {min}")]
    TooSmall {
        what: &'static str,
        order: usize,
        min: usize,
    },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("invalid multigraph JSON: {0}")]
    GraphJson(String),

    #[error("mean is undefined: the polynomial evaluates to zero at 1")]
    UndefinedMean,

    #[error("mean over subtrees of order >= 2 requires at least one edge")]
    NoEdges,

    #[error("input is not a tree: {0}")]
    NotATree(&'static str),

    #[error("invalid double-broom parameters n={n}, s={s}: {reason}")]
    InvalidBroomSpec {
        n: usize,
        s: usize,
        reason: &'static str,
    },

    #[error("edge scan requires a connected graph")]
    Disconnected,

    #[error("no edge with mu(G,e) > mu(G) > mu(G-e) found; this contradicts the deletion lemma")]
    DeletionLemmaViolation,

    #[error(
        "no vertex with two pendant path branches found; this contradicts the tree construction"
    )]
    TreeConstructionViolation,

    #[error("parallel edge addition did not raise the mean as the proposition requires")]
    ParallelEdgeViolation,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: invalid report JSON: {source}")]
    ReportJson {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}
