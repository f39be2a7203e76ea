//! CLI front end and numeric verification harness for the exact orbit
//! combinatorics in `norbit-core`.

pub mod cli;
pub mod format;
pub mod verify;
