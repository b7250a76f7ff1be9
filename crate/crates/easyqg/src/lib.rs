//! Diagram calculus for the easy compact matrix quantum groups: two-coloured
//! words, set-partition diagrams and their category operations, the
//! diagram-to-matrix functor, weight-matrix synthesis for equivariant linear
//! layers, and exact plus sampled verification of the results.
//!
//! The runnable examples under `examples/` walk through each capability; the
//! `easyqg` binary exposes the same operations as subcommands.

pub mod catalog;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod exact;
pub mod network;
pub mod partition;
pub mod realize;
pub mod relations;
pub mod verify;
pub mod word;

pub use catalog::{
    admits, canonical_words, diagram_basis_sn, enumerate_spanning, FamilyId, GroupSpec,
};
pub use diagram::{ComposedDiagram, DualityOrder, PartitionDiagram};
pub use error::{Error, Result};
pub use partition::{bell_number, enumerate_partitions, SetPartition};
pub use realize::{
    entry, in_span, rank_of_span, realize, weight_matrix, ComplexMatrix, IntMatrix,
    IntertwinerMatrix, MultiIndex, RankReport, WeightAssignment,
};
pub use word::{Colour, Word};
