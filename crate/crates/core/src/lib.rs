//! Exact enumeration and counting for simultaneous core partitions.
//!
//! The crate covers four families of objects and the relations between them:
//!
//! * partitions, their hook lengths and core tests ([`partition`]),
//! * gap posets of numerical semigroups and their lower ideals ([`gap_poset`]),
//! * the odd-element "tilde" poset whose constrained ideals are exactly the
//!   main-diagonal hook sets of self-conjugate `(s, s+1, s+2)`-cores ([`sc_core`]),
//! * Motzkin and generalized Dyck paths ([`lattice_paths`]).
//!
//! [`harness`] ties them together: every counting identity is checked by at
//! least two independent computations and reported as a [`harness::VerificationReport`].
//!
//! All counts are exact ([`Count`] is an unbounded unsigned integer).

pub mod count;
pub mod error;
pub mod gap_poset;
pub mod harness;
mod ideals;
pub mod lattice_paths;
pub mod partition;
pub mod sc_core;

pub use count::Count;
pub use error::{Error, Result};
pub use gap_poset::{GapPoset, LowerIdeal};
pub use lattice_paths::{GenDyckPath, GenDyckStep, MotzkinPath, MotzkinStep};
pub use partition::{HookKind, HookSet, Partition};
pub use sc_core::{ScCoreWitness, TildePoset};
