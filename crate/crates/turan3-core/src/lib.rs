//! Exact computation on small 3-uniform hypergraphs.
//!
//! The crate provides:
//!
//! - [`Hypergraph3`]: 3-graphs on up to 16 labeled vertices as fixed-width
//!   edge bitsets, with links, induced subgraphs, vertex duplication and
//!   partition statistics;
//! - [`canon`]: canonical forms under isomorphism and stable hex codes;
//! - [`patterns`]: the named small 3-graphs (tight cycles `C<l>` and
//!   `C<l>-`, `K4`, `K4-`, books), walk strings, subgraph containment,
//!   induced densities and blow-ups;
//! - [`enumerate`]: isomorph-free generation of forbidden-subgraph-free
//!   3-graphs with exact counting and extremal search;
//! - [`constructions`]: the iterated balanced edge blow-up, its exact edge
//!   counts at any scale, and the best known small constructions;
//! - [`claims`]: exact verification of the quantitative claims (ratio
//!   maximization, polynomial bounds, falsification sweeps);
//! - [`format`]: the text graph format and canonical hex codes.
//!
//! Everything is exact: densities and polynomial values are arbitrary
//! precision rationals, never floating point.

pub mod bitset;
pub mod canon;
pub mod claims;
pub mod constructions;
pub mod enumerate;
pub mod format;
pub mod hypergraph;
pub mod partition;
pub mod patterns;

pub use bitset::MAX_VERTICES;
pub use canon::CanonicalCode;
pub use hypergraph::{Graph2, Hypergraph3};
pub use partition::{PartClass, Partition4, PartitionStats};
pub use patterns::Pattern;

use thiserror::Error;

/// Exact rational used throughout for densities and claim polynomials.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {0} exceeds capacity 16")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: u8, n: u8 },
    #[error("triple ({0}, {1}, {2}) has a repeated vertex")]
    RepeatedVertex(u8, u8, u8),
    #[error("walk error: {0}")]
    Walk(String),
    #[error("unknown pattern name {0:?}")]
    UnknownPattern(String),
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("a graph with positive numerator and zero denominator exists (ratio unbounded)")]
    UnboundedRatio,
}
