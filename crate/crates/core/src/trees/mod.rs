//! Planar trees, polygon addresses and admissible surfaces.

mod address;
pub mod branch;
pub mod enumerate;
mod family;
mod lamplighter;
mod surface;

pub use address::PolygonAddress;
pub use family::TreeFamily;
pub use lamplighter::LampVertex;
pub use surface::{AdmissibleSurface, FrontierArc, DEFAULT_COMPARISON_DEPTH};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("invalid tree family: {0}")]
    InvalidFamily(String),
    #[error("malformed polygon address `{0}`")]
    MalformedAddress(String),
    #[error("address `{address}` does not exist in {family}")]
    NoSuchPolygon { address: String, family: TreeFamily },
    #[error("a surface needs at least one polygon")]
    EmptySurface,
    #[error("polygons do not form a connected subtree")]
    Disconnected,
    #[error("polygon `{0}` is not adjacent to the surface")]
    NotAdjacent(String),
    #[error("polygon `{0}` cannot be removed without disconnecting the surface")]
    NotRemovable(String),
    #[error("operation unsupported for {0}")]
    Unsupported(TreeFamily),
    #[error("branch comparison undecided within depth {depth}")]
    Undecided { depth: usize },
}
