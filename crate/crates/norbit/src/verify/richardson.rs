//! Type-A Richardson equality: the multiplicity of each irreducible in
//! Ind from the dual-partition Levi equals its multiplicity in the
//! coordinate ring of the orbit closure, compared here against the
//! oracle-graded ring through a degree cutoff.

use std::collections::BTreeMap;

use norbit_core::weights::{trivial_multiplicity, weyl_dim, RootSystem, DEFAULT_DIM_BOUND};
use norbit_core::{ClassicalType, LeviShape, Partition, Rat};

use super::hilbert::{decompose_graded, graded_dims};
use super::sampler::GlOrbitSampler;
use super::{OracleConfig, VerifyError};

/// One highest weight compared across the two routes.
#[derive(Debug, Clone)]
pub struct MuComparison {
    pub mu: Vec<Rat>,
    pub induced_mult: u64,
    pub oracle_cumulative: u64,
    /// Cumulative count reached the induced multiplicity within the
    /// degree cutoff.
    pub settled: bool,
}

/// Character decomposition of one graded piece.
pub type DegreeDecomposition = Vec<(Vec<Rat>, u64)>;

#[derive(Debug, Clone)]
pub struct RichardsonReport {
    pub partition: Partition,
    pub levi: LeviShape,
    pub max_degree: usize,
    /// Degree-by-degree decomposition of the oracle ring.
    pub degrees: Vec<(usize, DegreeDecomposition)>,
    pub comparisons: Vec<MuComparison>,
    pub pass: bool,
}

impl RichardsonReport {
    pub fn comparison_for(&self, mu: &[Rat]) -> Option<&MuComparison> {
        self.comparisons.iter().find(|c| c.mu == mu)
    }
}

/// Dominant integral gl(n) weights with zero coordinate sum and Weyl
/// dimension at most `dim_bound`.
pub fn dominant_sl_weights(n: usize, dim_bound: u64) -> Vec<Vec<Rat>> {
    let rs = RootSystem::new(ClassicalType::A, n as u32 - 1);
    let mut out = Vec::new();
    // entries fit within [-cap, cap]: for two coordinates dim = 2a+1; from
    // three on, the dimension of (a, ..., -a/(n-1), ...) grows at least
    // quadratically in a, so 24 is exhaustive for bounds up to 200
    let cap: i64 = match n {
        1 => 0,
        2 => dim_bound as i64 / 2 + 1,
        _ if dim_bound <= 200 => 24,
        _ => 2 * dim_bound as i64 / n as i64,
    };
    fn rec(n: usize, cap: i64, prefix: &mut Vec<i64>, sum: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == n {
            if sum == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let hi = prefix.last().copied().unwrap_or(cap);
        let remaining = (n - prefix.len()) as i64;
        for v in (-cap..=hi).rev() {
            // later entries are at most v, so this is the largest reachable total
            if sum + remaining * v < 0 {
                break;
            }
            prefix.push(v);
            rec(n, cap, prefix, sum + v, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(n, cap, &mut Vec::new(), 0, &mut raw);
    for v in raw {
        let w: Vec<Rat> = v.iter().map(|&x| Rat::from_integer(x)).collect();
        if let Ok(dim) = weyl_dim(&rs, &w) {
            if dim <= dim_bound {
                out.push(w);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Runs the equality check for one gl(n) orbit: both routes per dominant
/// weight under the bound, pass iff the oracle never exceeds the induced
/// multiplicity.
pub fn check_richardson_type_a(
    partition: &Partition,
    dim_bound: u64,
    cfg: &OracleConfig,
) -> Result<RichardsonReport, VerifyError> {
    let n = partition.size() as usize;
    let rs = RootSystem::new(ClassicalType::A, n as u32 - 1);
    let levi = LeviShape::new(partition.transpose().parts().to_vec(), 0);
    let sampler = GlOrbitSampler::new(partition);

    let mut degrees = Vec::new();
    let mut cumulative: BTreeMap<Vec<Rat>, u64> = BTreeMap::new();
    for d in 0..=cfg.max_degree {
        let dims = graded_dims(&sampler, d, cfg)?;
        let decomp = decompose_graded(&rs, &dims)?;
        for (w, m) in &decomp {
            *cumulative.entry(w.clone()).or_insert(0) += m;
        }
        degrees.push((d, decomp));
    }

    let mut mus = dominant_sl_weights(n, dim_bound);
    for hw in cumulative.keys() {
        if !mus.contains(hw) {
            mus.push(hw.clone());
        }
    }
    mus.sort();

    let mut comparisons = Vec::new();
    let mut pass = true;
    for mu in mus {
        let induced = trivial_multiplicity(&rs, &mu, &levi, DEFAULT_DIM_BOUND)
            .map_err(|e| VerifyError::Core(format!("{e}")))?;
        let cum = cumulative.get(&mu).copied().unwrap_or(0);
        if cum > induced {
            pass = false;
        }
        comparisons.push(MuComparison {
            mu,
            induced_mult: induced,
            oracle_cumulative: cum,
            settled: cum == induced && induced > 0,
        });
    }

    Ok(RichardsonReport {
        partition: partition.clone(),
        levi,
        max_degree: cfg.max_degree,
        degrees,
        comparisons,
        pass,
    })
}
