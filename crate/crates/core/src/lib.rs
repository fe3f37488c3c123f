//! Exact combinatorics of Kleshchev multipartitions.
//!
//! The crate works over a modulus `e` (0, or an integer at least 2) and a
//! charge vector attaching one residue to each component of a multipartition.
//! On top of that data it implements
//!
//! * [`partition`] — partitions, multipartitions, nodes, residues, the
//!   dominance order and the colexicographic-style order `precedes`;
//! * [`crystal`] — addable/removable boundary sequences, normal and good
//!   nodes, the recursive Kleshchev classifier and the good lattice;
//! * [`tableaux`] — standard tableaux, residue sequences, and the
//!   restrictedness test by dominance sweeps;
//! * [`fock`] — an exact level-r v-deformed Fock space with integer Laurent
//!   polynomial scalars, Chevalley operators and divided powers;
//! * [`ladders`] — semi-ladder/ladder nodes and the ladder and strong-ladder
//!   recognizers;
//! * [`weyl`] — affine (and finitely supported infinite) symmetric groups,
//!   the reflection action on e-cores, Bruhat order, and the chain criterion
//!   for multi-core membership.
//!
//! Everything is exact integer arithmetic; all values are immutable and every
//! operation is a pure function, so the whole API is safe to drive from
//! parallel sweeps. With the default `parallel` feature the bulk sweep entry
//! points fan out with rayon; without it they run sequentially.

pub mod crystal;
pub mod fock;
pub mod ladders;
pub mod partition;
pub mod tableaux;
pub mod weyl;

pub use partition::{ChargeVector, Multipartition, Node, Partition, Residue};
