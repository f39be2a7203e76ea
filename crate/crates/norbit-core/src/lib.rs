//! Exact combinatorics of nilpotent orbits in the classical Lie algebras.
//!
//! Everything in this crate is exact integer/rational arithmetic:
//!
//! - [`partition`]: partitions, transpose, dominance, type validity and
//!   the B/C/D collapse.
//! - [`orbit`]: orbit descriptors, closure order, specialness, duality,
//!   weighted Dynkin data, component groups, triangular families and
//!   Lusztig-Spaltenstein induction.
//! - [`infchar`]: the infinitesimal character attached to each orbit
//!   (even-dual rule plus the case-by-case column-pairing recipe) and a
//!   consistency auditor.
//! - [`weights`]: finite-dimensional character computations (Weyl
//!   dimension, Freudenthal multiplicities, branching to block Levi
//!   subalgebras).
//!
//! The crate is `no_std` (alloc only); IO, numeric oracles and the CLI
//! live in the companion `norbit` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod infchar;
pub mod orbit;
pub mod partition;
pub mod weights;

pub use infchar::{infchar, InfChar, InfCharRule, PairingMode};
pub use orbit::{ClassicalType, LeviShape, Orbit, VeryEvenLabel};
pub use partition::Partition;

/// Exact scalar used for weights and infinitesimal-character entries.
pub type Rat = num_rational::Ratio<i64>;
