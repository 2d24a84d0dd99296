//! Combinatorics of Kleshchev and restricted bipartitions for Hecke
//! algebras of type B.
//!
//! The crate provides:
//!
//! - partitions, beta-number sets and e-core/e-restriction predicates
//!   ([`partition`]);
//! - the bead-moving operations `up`/`roof`, `down`/`base`, the charge
//!   shift `tau`, and the resulting non-recursive Kleshchev test
//!   ([`abacus`]);
//! - bipartitions with residue coloring, normal/good nodes, Kashiwara
//!   operators and crystal-graph generation ([`bipartition`]);
//! - admissible and optimal sequences ([`sequences`]);
//! - exact Laurent-polynomial arithmetic ([`laurent`]) and the level-two
//!   deformed Fock space with divided powers and the triangular expansion
//!   of a Kleshchev bipartition ([`fock`]);
//! - the dominance and reverse-lexicographic orders and the restrictedness
//!   test ([`order`]);
//! - an exhaustive verifier that checks, rank by rank, that the restricted
//!   bipartitions are exactly the Kleshchev ones ([`verify`]).
//!
//! All values are immutable and all operations are pure functions; the only
//! mutable state is the explicit memo table of the recursive Kleshchev test.

pub mod abacus;
pub mod bipartition;
pub mod error;
pub mod fock;
pub mod laurent;
pub mod order;
pub mod partition;
pub mod sequences;
pub mod verify;

pub use bipartition::Bipartition;
pub use error::{Error, Result};
pub use partition::{Params, Partition};
