//! Determining sets, resolving sets and the exchange property on small graphs.
//!
//! The crate has two layers. Brute-force oracles ([`determining`],
//! [`resolving`], [`exchange`]) work on any graph within the size caps.
//! Structural characterizations ([`trees`], [`wheels`], [`outerplanar`])
//! answer the same questions for their graph classes without search, and the
//! test suites check the two layers against each other.

pub mod automorphism;
pub mod cli;
pub mod determining;
pub mod error;
pub mod exchange;
pub mod graph;
pub mod outerplanar;
pub mod resolving;
pub mod system;
pub mod trees;
pub mod wheels;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use system::{Budget, MinimalSetCensus, SetKind};
