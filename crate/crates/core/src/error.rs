use thiserror::Error;

use crate::graph::{EdgeId, Vertex};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop at vertex {vertex} (pair #{index})")]
    Loop { index: usize, vertex: Vertex },

    #[error("endpoint out of range in pair #{index}: ({u}, {v}) with n = {n}")]
    EndpointOutOfRange {
        index: usize,
        u: Vertex,
        v: Vertex,
        n: usize,
    },

    #[error("graph has parallel edges between {u} and {v}")]
    NotSimple { u: Vertex, v: Vertex },

    #[error("edge {0} does not exist in the host graph")]
    UnknownEdge(EdgeId),

    #[error("S and T overlap at vertex {0}")]
    OverlappingPair(Vertex),

    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),

    #[error("edge {u}-{v} has odd multiplicity {multiplicity}")]
    OddMultiplicity { u: Vertex, v: Vertex, multiplicity: usize },

    #[error("graph has no edges")]
    Edgeless,

    #[error("bound r = {0} is not supported (need r >= 2)")]
    BoundTooSmall(usize),

    #[error("independence number exceeds 2: {0:?} is independent")]
    AlphaTooLarge([Vertex; 3]),

    #[error("size guard exceeded: {what} = {actual}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("premise |L|+|M| >= d fails at vertex {vertex}: |L|+|M| = {available}, degree = {degree}")]
    RegionPremise {
        vertex: Vertex,
        available: usize,
        degree: usize,
    },

    #[error("invalid region partition at vertex {vertex}: {reason}")]
    InvalidRegions { vertex: Vertex, reason: String },

    #[error("pair class {class:?} has no singleton attached by exactly one edge")]
    UncoveredClass { class: [Vertex; 2] },

    #[error("invalid colouring: {0}")]
    InvalidColouring(String),

    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A construction step produced something its own contract forbids.
    /// `dump` carries enough to reproduce it (graph in edge-list form plus context).
    #[error("internal contract violated: {message}")]
    Contract { message: String, dump: String },
}

impl Error {
    pub(crate) fn contract(message: impl Into<String>, dump: impl Into<String>) -> Self {
        Error::Contract {
            message: message.into(),
            dump: dump.into(),
        }
    }

    /// Short machine-readable tag used by the CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Loop { .. } => "loop",
            Error::EndpointOutOfRange { .. } => "endpoint",
            Error::NotSimple { .. } => "not-simple",
            Error::UnknownEdge(_) => "unknown-edge",
            Error::OverlappingPair(_) => "overlap",
            Error::VertexOutOfRange(_) => "vertex",
            Error::OddMultiplicity { .. } => "odd-multiplicity",
            Error::Edgeless => "edgeless",
            Error::BoundTooSmall(_) => "bound",
            Error::AlphaTooLarge(_) => "alpha",
            Error::SizeGuard { .. } => "size-guard",
            Error::RegionPremise { .. } => "premise",
            Error::InvalidRegions { .. } => "regions",
            Error::UncoveredClass { .. } => "hypothesis",
            Error::InvalidColouring(_) => "colouring",
            Error::UnknownFamily(_) => "family",
            Error::Parse { .. } => "parse",
            Error::Contract { .. } => "contract",
        }
    }
}
