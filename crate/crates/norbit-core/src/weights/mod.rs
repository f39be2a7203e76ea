//! Exact finite-dimensional character computations for the classical root
//! systems: Weyl dimensions, Freudenthal weight multiplicities, and
//! branching to block Levi subalgebras.

mod branch;
mod multiplicity;
mod root_system;

pub use branch::{branch_to_levi, trivial_multiplicity};
pub use multiplicity::{weight_multiplicities, weyl_dim, WeightDiagram, DEFAULT_DIM_BOUND};
pub use root_system::RootSystem;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightError {
    /// The weight is not dominant integral for the root system.
    NotDominantIntegral(Vec<Rat>),
    /// Dimension exceeds the configured bound.
    BoundExceeded {
        dim: u64,
        bound: u64,
    },
    /// A Levi shape that does not fit the ambient coordinates.
    BadLevi(String),
    /// Peeling produced a negative multiplicity; the decomposition failed.
    NegativeMultiplicity(Vec<Rat>),
    WrongCoordinateCount {
        expected: usize,
        got: usize,
    },
}

impl fmt::Display for WeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightError::NotDominantIntegral(w) => {
                write!(f, "weight {} is not dominant integral", fmt_weight(w))
            }
            WeightError::BoundExceeded { dim, bound } => {
                write!(f, "dimension {dim} exceeds bound {bound}")
            }
            WeightError::BadLevi(s) => write!(f, "bad Levi: {s}"),
            WeightError::NegativeMultiplicity(w) => {
                write!(f, "negative multiplicity at {}", fmt_weight(w))
            }
            WeightError::WrongCoordinateCount { expected, got } => {
                write!(f, "expected {expected} coordinates, got {got}")
            }
        }
    }
}

pub(crate) fn fmt_weight(w: &[Rat]) -> String {
    use alloc::string::ToString;
    let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    parts.join(",")
}

/// Dot product in the orthonormal e-basis.
pub(crate) fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    let mut acc = Rat::from_integer(0);
    for (x, y) in a.iter().zip(b.iter()) {
        acc += *x * *y;
    }
    acc
}

pub(crate) fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b.iter()).map(|(x, y)| *x + *y).collect()
}

pub(crate) fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b.iter()).map(|(x, y)| *x - *y).collect()
}
