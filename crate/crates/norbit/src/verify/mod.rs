//! Desk-scale verification harness: numeric Hilbert-function oracles,
//! the type-A Richardson equality check, representation-multiplicity
//! inequality audits, and exhaustive combinatorial sweeps.

pub mod cache;
pub mod hilbert;
pub mod matrix;
pub mod prop55;
pub mod richardson;
pub mod sampler;
pub mod svd;
pub mod sweeps;

use std::fmt;

/// Default RNG seed for the oracles; override with --seed or NORBIT_SEED.
pub const DEFAULT_SEED: u64 = 120_221;

#[derive(Debug, Clone, PartialEq)]
pub enum VerifyError {
    /// The two seeded runs produced different ranks: the tolerance is too
    /// tight or the sampling too small.
    SeedDisagreement {
        degree: usize,
        first: u64,
        second: u64,
    },
    /// Configuration outside its invariants.
    BadConfig(String),
    /// The numeric sampler does not cover this orbit.
    UnsupportedOrbit(String),
    /// A graded piece failed to decompose into characters.
    Decomposition(String),
    Core(String),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::SeedDisagreement {
                degree,
                first,
                second,
            } => write!(
                f,
                "seed cross-check failed at degree {degree}: ranks {first} vs {second}"
            ),
            VerifyError::BadConfig(s) => write!(f, "bad oracle config: {s}"),
            VerifyError::UnsupportedOrbit(s) => write!(f, "unsupported orbit: {s}"),
            VerifyError::Decomposition(s) => write!(f, "decomposition failed: {s}"),
            VerifyError::Core(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for VerifyError {}

/// Oracle parameters: how many orbit points to draw, how deep to grade,
/// the relative singular-value threshold and the RNG seed.
#[derive(Debug, Clone)]
pub struct OracleConfig {
    /// Points on the orbit; 0 means "enough for the monomial count".
    pub sample_count: usize,
    pub max_degree: usize,
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            sample_count: 0,
            max_degree: 3,
            tolerance: 1e-8,
            seed: DEFAULT_SEED,
        }
    }
}

impl OracleConfig {
    pub fn with_seed(seed: u64) -> OracleConfig {
        OracleConfig {
            seed,
            ..OracleConfig::default()
        }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        if !(self.tolerance > 0.0 && self.tolerance <= 1e-4) {
            return Err(VerifyError::BadConfig(format!(
                "tolerance {} outside (0, 1e-4]",
                self.tolerance
            )));
        }
        Ok(())
    }

    /// Sample count actually used for a given monomial count; at least the
    /// monomial count, with headroom.
    pub fn samples_for(&self, monomial_count: usize) -> usize {
        self.sample_count
            .max(monomial_count + monomial_count / 4 + 16)
    }

    /// The cross-check seed.
    pub fn second_seed(&self) -> u64 {
        self.seed ^ 0x9E37_79B9_7F4A_7C15
    }
}

/// Outcome of one verification case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Informational: reported, never a gate.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "FAIL"),
            Status::Info => write!(f, "info"),
        }
    }
}

/// One machine-checkable verification line: a case key, its status, and
/// the witness detail (full on failure).
#[derive(Debug, Clone)]
pub struct CaseReport {
    pub case: String,
    pub status: Status,
    pub witness: String,
}

impl CaseReport {
    pub fn pass(case: impl Into<String>, witness: impl Into<String>) -> CaseReport {
        CaseReport {
            case: case.into(),
            status: Status::Pass,
            witness: witness.into(),
        }
    }

    pub fn fail(case: impl Into<String>, witness: impl Into<String>) -> CaseReport {
        CaseReport {
            case: case.into(),
            status: Status::Fail,
            witness: witness.into(),
        }
    }

    pub fn info(case: impl Into<String>, witness: impl Into<String>) -> CaseReport {
        CaseReport {
            case: case.into(),
            status: Status::Info,
            witness: witness.into(),
        }
    }
}

impl fmt::Display for CaseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}: {}", self.status, self.case, self.witness)
    }
}

/// Merges case reports into one deterministic suite outcome, sorted by
/// case key.
pub fn merge_reports(mut reports: Vec<CaseReport>) -> Vec<CaseReport> {
    reports.sort_by(|a, b| a.case.cmp(&b.case));
    reports
}

pub fn any_failure(reports: &[CaseReport]) -> bool {
    reports.iter().any(|r| r.status == Status::Fail)
}
