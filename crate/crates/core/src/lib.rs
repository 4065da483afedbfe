//! Zeroth-order general Randić index and the index-based sufficient
//! conditions for Hamiltonicity and k-Hamiltonicity built on it.
//!
//! The crate bundles the graph substrate (bitset graphs on at most 64
//! vertices, graph6), the indices, Chvátal-type degree tests, the threshold
//! functions and their numerics, the condition checkers, the extremal
//! graphs attaining each bound, and an exact Hamiltonicity oracle with a
//! randomized soundness harness.

pub mod chvatal;
pub mod conditions;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod oracle;
pub mod search;
pub mod thresholds;

pub use error::{Error, Result};
pub use graph::{Bipartition, DegreeSequence, Family, Graph};
pub use indices::Alpha;
