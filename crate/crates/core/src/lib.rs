//! Exact invariant machinery for chromatic uniqueness of complete multipartite
//! graphs: dominance lattices of partitions, chromatic polynomials in both
//! bases, garland censuses over deleted edge sets, and two independent
//! uniqueness verifiers.

pub mod canon;
pub mod chromatic;
pub mod error;
pub mod garlands;
pub mod graph;
pub mod graph6;
pub mod lattice;
pub mod partition;
pub mod report;
pub mod sample;
pub mod verifier;

pub use error::{Error, Result};
pub use graph::{EdgeSet, LabeledGraph};
pub use partition::Partition;
