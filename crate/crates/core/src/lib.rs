//! Exact structural graph algorithms on graphs with at most 64 vertices.
//!
//! Covers forbidden induced patterns (thetas, pyramids, prisms, wheels and
//! their relatives), minimal separators and potential maximal cliques,
//! exact treewidth, and the constructive span-wheel and spider
//! extractions. Everything here is `no_std` with `alloc`.

#![no_std]

extern crate alloc;

pub mod canon;
pub mod clique;
pub mod error;
pub mod extraction;
pub mod generators;
pub mod graph;
pub mod holes;
pub mod path;
pub mod separators;
pub mod treewidth;
pub mod patterns;
pub mod vertex_set;

pub use clique::{clique_number, find_clique, max_clique};
pub use error::{Error, Result};
pub use graph::{Graph, Induced};
pub use holes::enumerate_holes;
pub use path::{Hole, Path};
pub use patterns::{find_pattern, Embedding, PatternKind, WheelCert};
pub use vertex_set::{VertexSet, MAX_VERTICES};
