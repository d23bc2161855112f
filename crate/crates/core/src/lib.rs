//! Harris graphs: tough, Eulerian, non-Hamiltonian graphs.
//!
//! The crate decides the three properties with replayable witnesses,
//! implements the barnacle, grafting and flowering transforms, generates the
//! Hirotaka, Shaw and Justine families, and enumerates all Harris graphs of
//! a given order up to isomorphism.

pub mod barnacles;
pub mod canon;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod properties;
pub mod report;

pub use canon::{canonical_form, canonical_graph6, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{DegreeSequence, Graph, VertexSet};
pub use graph6::{emit_graph6, parse_graph6};
pub use properties::{is_harris, HarrisVerdict};
pub use report::Report;
