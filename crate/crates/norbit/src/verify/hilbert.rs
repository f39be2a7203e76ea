//! Numeric Hilbert-function oracle: the degree-d dimension of the
//! coordinate ring of an orbit closure, read off as the rank of the
//! matrix of degree-d monomials evaluated at sampled orbit points.

use std::collections::BTreeMap;

use norbit_core::weights::RootSystem;
use norbit_core::{Partition, Rat};

use super::cache::cached_diagram;
use super::sampler::{GlOrbitSampler, OrbitSampler};
use super::svd::numeric_rank;
use super::{OracleConfig, VerifyError};

/// Exponent vectors of all monomials of exact degree `d` in `vars`
/// variables, lexicographic.
pub fn monomials(vars: usize, d: usize) -> Vec<Vec<u8>> {
    fn rec(vars: usize, d: usize, out: &mut Vec<Vec<u8>>, prefix: &mut Vec<u8>) {
        if vars == 1 {
            prefix.push(d as u8);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k as u8);
            rec(vars - 1, d - k, out, prefix);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if vars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(vars, d, &mut out, &mut Vec::new());
    out
}

fn evaluate(monomial: &[u8], point: &[f64]) -> f64 {
    let mut v = 1.0;
    for (e, x) in monomial.iter().zip(point.iter()) {
        for _ in 0..*e {
            v *= x;
        }
    }
    v
}

/// Per-torus-weight dimensions of the degree-`d` graded piece, computed as
/// numeric ranks of weight-grouped monomial evaluations on `samples`.
///
/// The grading by torus weight splits the monomials into groups that the
/// quotient map never mixes, so each rank needs only as many samples as
/// the largest group.
fn graded_dims_for_seed(
    sampler: &dyn OrbitSampler,
    d: usize,
    cfg: &OracleConfig,
    seed: u64,
) -> Result<BTreeMap<Vec<i64>, u64>, VerifyError> {
    let monos = monomials(sampler.coords(), d);

    // group monomials by their total weight
    let mut groups: BTreeMap<Vec<i64>, Vec<&Vec<u8>>> = BTreeMap::new();
    for m in &monos {
        let mut w = vec![0i64; sampler.weights().first().map(|w| w.len()).unwrap_or(0)];
        for (e, cw) in m.iter().zip(sampler.weights().iter()) {
            for (acc, x) in w.iter_mut().zip(cw.iter()) {
                *acc += i64::from(*e) * x;
            }
        }
        groups.entry(w).or_default().push(m);
    }

    let largest_group = groups.values().map(|g| g.len()).max().unwrap_or(0);
    let sample_count = cfg.samples_for(largest_group);
    let mut rng = sampler.rng(seed);
    let points: Vec<Vec<f64>> = (0..sample_count)
        .map(|_| sampler.sample(&mut rng))
        .collect();

    let mut dims = BTreeMap::new();
    for (w, group) in groups {
        let mut columns: Vec<Vec<f64>> = Vec::with_capacity(group.len());
        for m in group {
            let mut col: Vec<f64> = points.iter().map(|p| evaluate(m, p)).collect();
            // unit-normalize each monomial evaluation
            let norm = col.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 0.0 {
                for x in col.iter_mut() {
                    *x /= norm;
                }
            }
            columns.push(col);
        }
        let r = numeric_rank(&columns, cfg.tolerance) as u64;
        if r > 0 {
            dims.insert(w, r);
        }
    }
    Ok(dims)
}

/// Weight-graded dimensions of degree `d`, cross-checked between two
/// seeds; disagreement means the tolerance or sampling is inadequate and
/// is an error, never a silent answer.
pub fn graded_dims(
    sampler: &dyn OrbitSampler,
    d: usize,
    cfg: &OracleConfig,
) -> Result<BTreeMap<Vec<i64>, u64>, VerifyError> {
    cfg.validate()?;
    let first = graded_dims_for_seed(sampler, d, cfg, cfg.seed)?;
    let second = graded_dims_for_seed(sampler, d, cfg, cfg.second_seed())?;
    if first != second {
        return Err(VerifyError::SeedDisagreement {
            degree: d,
            first: first.values().sum(),
            second: second.values().sum(),
        });
    }
    Ok(first)
}

/// Dimension of the degree-`d` part of the coordinate ring of the closure
/// of the gl(n) orbit with the given Jordan type.
pub fn hilbert_oracle(
    partition: &Partition,
    d: usize,
    cfg: &OracleConfig,
) -> Result<u64, VerifyError> {
    let sampler = GlOrbitSampler::new(partition);
    Ok(graded_dims(&sampler, d, cfg)?.values().sum())
}

/// Decomposes per-weight dimensions into irreducible characters by
/// peeling highest weights. Errors when a subtraction goes negative.
pub fn decompose_graded(
    rs: &RootSystem,
    dims: &BTreeMap<Vec<i64>, u64>,
) -> Result<Vec<(Vec<Rat>, u64)>, VerifyError> {
    let mut remaining: BTreeMap<Vec<Rat>, i64> = dims
        .iter()
        .map(|(w, m)| (w.iter().map(|&x| Rat::from_integer(x)).collect(), *m as i64))
        .collect();
    let mut out = Vec::new();
    while let Some((w, m)) = remaining.iter().next_back().map(|(w, m)| (w.clone(), *m)) {
        if m <= 0 {
            return Err(VerifyError::Decomposition(format!(
                "nonpositive residual multiplicity at {w:?}"
            )));
        }
        if !rs.is_dominant_integral(&w) {
            return Err(VerifyError::Decomposition(format!(
                "peel reached the non-dominant weight {w:?}"
            )));
        }
        let diagram = cached_diagram(rs, &w, 1_000_000)
            .map_err(|e| VerifyError::Decomposition(format!("{e}")))?;
        for (pw, pm) in diagram.multiplicities() {
            let entry = remaining.entry(pw.clone()).or_insert(0);
            *entry -= m * *pm as i64;
            match (*entry).cmp(&0) {
                std::cmp::Ordering::Less => {
                    return Err(VerifyError::Decomposition(format!(
                        "negative multiplicity at {pw:?}"
                    )))
                }
                std::cmp::Ordering::Equal => {
                    remaining.remove(pw);
                }
                std::cmp::Ordering::Greater => {}
            }
        }
        out.push((w, m as u64));
    }
    Ok(out)
}
