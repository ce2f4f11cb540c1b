//! Truth degrees, weighted graphs, labellings and φ functions.

mod degree;
mod graph;
mod labelling;
mod phi;

pub use degree::TruthDegree;
pub use graph::{ArgId, Edge, EdgeSpec, WeightedGraph};
pub use labelling::{Labelling, LabellingDisplay};
pub use phi::{apply_phi, sigmoid, PhiFunction, PhiSpec, PhiTable, SIGMOID_TIE_TOLERANCE};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("duplicate argument `{0}`")]
    DuplicateArgument(String),
    #[error("edge endpoint `{0}` is not a declared argument")]
    UnknownEndpoint(String),
    #[error("duplicate edge {from} -> {to}")]
    DuplicateEdge { from: String, to: String },
    #[error("edge {from} -> {to} has zero or non-finite weight {weight}")]
    ZeroOrNonfiniteWeight {
        from: String,
        to: String,
        weight: f64,
    },
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
    #[error("resolution must be at least 1")]
    ZeroResolution,
    #[error("degree {numerator}/{resolution} is outside [0,1]")]
    DegreeOutOfRange { numerator: u32, resolution: u32 },
    #[error("value {value} is not a member of C_{resolution}")]
    NotInChain { value: String, resolution: u32 },
    #[error("cannot mix resolutions {left} and {right}")]
    ResolutionMismatch { left: u32, right: u32 },
    #[error("labelling does not assign argument `{0}`")]
    IncompleteLabelling(String),
    #[error("invalid phi function: {0}")]
    InvalidPhiTable(String),
}
