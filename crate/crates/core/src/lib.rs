//! Claw and k-star decompositions of graphs with small maximum degree.
//!
//! The crate decides k-star-decompositions through independent sets and
//! bounded in-degree orientations, checks the answer against an exact-cover
//! search and a modulo-k orientation search, certifies connectivity claims
//! with max-flow cuts, builds two families of graphs without
//! decompositions, and enumerates 4-regular graphs to count the ones with
//! no claw-decomposition.

pub mod canon;
pub mod connectivity;
pub mod embedding;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod flow;
pub mod formats;
pub mod graph;
pub mod graphfile;
pub mod independent;
pub mod known;
pub mod orientation;
pub mod stardecomp;
pub mod survey;
pub mod vset;

pub use error::{Error, Result};
pub use graph::Graph;
pub use vset::VertexSet;

/// Largest vertex count a [`Graph`] can hold; neighbor sets are one `u128`.
pub const MAX_VERTICES: usize = 128;
