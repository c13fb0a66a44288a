//! Spanning-graph packing toolkit.
//!
//! The centerpiece is a four-stage randomized procedure that, given a sparse
//! "missing edges" graph G and a bounded-degree spanning target H on the same
//! vertex set, constructs a bijection placing H into the complement of G.
//! Around it sit exhaustive desk-scale oracles, the explicit extremal
//! constructions, a 3-uniform hypergraph module for the local-obstruction
//! analysis, and an experiment harness.

pub mod bitset;
pub mod constructions;
pub mod error;
pub mod experiments;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod matching;
pub mod models;
pub mod oracle;
pub mod packing;

pub use graph::Graph;
pub use packing::{pack, verify_packing, PackingConfig, PackingMap, PackingOutcome};
