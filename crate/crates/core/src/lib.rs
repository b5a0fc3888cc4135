//! Sylvester monoid toolkit: binary search tree insertion, the insertion
//! congruence, cocharge sequences, cyclic shift graphs, and certified
//! cyclic-shift paths between standard trees.

pub mod cocharge;
pub mod error;
pub mod graph;
pub mod monoid;
pub mod pathsynth;
pub mod trees;
pub mod words;

pub use cocharge::{cocharge_lower_bound, cochseq_tree, cochseq_word, CochargeSeq};
pub use error::{Error, Result};
pub use graph::{component, ComponentGraph, Limits, ShiftWitness};
pub use monoid::{element_of, equivalent, multiply, rewrite_equivalent, SylvElement};
pub use pathsynth::{shift_path, CaseTag, PathCertificate};
pub use trees::{Bst, NodeLocator};
pub use words::{Evaluation, Symbol, Word};
