//! Branching to block Levi subalgebras by peeling highest weights off the
//! weight diagram.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::multiplicity::{weight_multiplicities, WeightDiagram};
use super::{RootSystem, WeightError};
use crate::orbit::{ClassicalType, LeviShape};
use crate::Rat;

/// Coordinate ranges of the Levi factors: the gl blocks consume leading
/// coordinates in stored (descending) order, the residual factor takes the
/// trailing ones.
fn factor_ranges(
    rs: &RootSystem,
    levi: &LeviShape,
) -> Result<(Vec<(usize, usize)>, usize), WeightError> {
    levi.validate(rs.ty(), rs.rank())
        .map_err(|e| WeightError::BadLevi(format!("{e}")))?;
    let mut ranges = Vec::new();
    let mut at = 0usize;
    for &k in &levi.gl_blocks {
        ranges.push((at, at + k as usize));
        at += k as usize;
    }
    let residual_start = at;
    if residual_start + levi.residual_rank as usize != rs.coords() {
        return Err(WeightError::BadLevi(format!(
            "blocks and residual cover {} of {} coordinates",
            residual_start + levi.residual_rank as usize,
            rs.coords()
        )));
    }
    Ok((ranges, residual_start))
}

/// Is `w` dominant for the Levi: weakly decreasing in every gl block and
/// dominant for the residual classical factor.
fn levi_dominant(rs: &RootSystem, levi: &LeviShape, w: &[Rat]) -> bool {
    let Ok((ranges, residual_start)) = factor_ranges(rs, levi) else {
        return false;
    };
    for (lo, hi) in &ranges {
        if w[*lo..*hi].windows(2).any(|p| p[0] < p[1]) {
            return false;
        }
    }
    let tail = &w[residual_start..];
    if tail.is_empty() {
        return true;
    }
    let residual = RootSystem::new(rs.ty(), levi.residual_rank);
    residual.is_dominant_integral(tail)
}

/// Per-factor diagram cache for one branching run; factor highest weights
/// recur across constituents.
type FactorCache = BTreeMap<(usize, Vec<Rat>), WeightDiagram>;

/// The full weight diagram of the Levi irreducible with highest weight `w`.
fn levi_irrep_diagram(
    rs: &RootSystem,
    levi: &LeviShape,
    w: &[Rat],
    dim_bound: u64,
    cache: &mut FactorCache,
) -> Result<WeightDiagram, WeightError> {
    let (ranges, residual_start) = factor_ranges(rs, levi)?;
    let mut diagram = WeightDiagram::unit();
    for (idx, (lo, hi)) in ranges.iter().enumerate() {
        let key = (idx, w[*lo..*hi].to_vec());
        if !cache.contains_key(&key) {
            let k = hi - lo;
            let gl = RootSystem::new(ClassicalType::A, (k - 1) as u32);
            let factor = weight_multiplicities(&gl, &w[*lo..*hi], dim_bound)?;
            cache.insert(key.clone(), factor);
        }
        diagram = diagram.product(&cache[&key]);
    }
    if residual_start < rs.coords() {
        let key = (usize::MAX, w[residual_start..].to_vec());
        if !cache.contains_key(&key) {
            let residual = RootSystem::new(rs.ty(), levi.residual_rank);
            let factor = if residual.simple_roots().is_empty() {
                // torus factors keep their single weight
                WeightDiagram::singleton(w[residual_start..].to_vec())
            } else {
                weight_multiplicities(&residual, &w[residual_start..], dim_bound)?
            };
            cache.insert(key.clone(), factor);
        }
        diagram = diagram.product(&cache[&key]);
    }
    Ok(diagram)
}

/// Restriction of the irreducible `lambda` to a block Levi: the list of
/// (levi highest weight, multiplicity) pairs.
///
/// Peel loop: the lexicographically largest remaining weight is
/// levi-dominant (the remainder stays Levi-Weyl symmetric); subtract its
/// full Levi diagram and repeat until nothing remains.
pub fn branch_to_levi(
    rs: &RootSystem,
    lambda: &[Rat],
    levi: &LeviShape,
    dim_bound: u64,
) -> Result<Vec<(Vec<Rat>, u64)>, WeightError> {
    let diagram = weight_multiplicities(rs, lambda, dim_bound)?;
    let mut remaining: BTreeMap<Vec<Rat>, i64> = diagram
        .multiplicities()
        .iter()
        .map(|(w, m)| (w.clone(), *m as i64))
        .collect();
    let mut out: Vec<(Vec<Rat>, u64)> = Vec::new();
    let mut cache: FactorCache = BTreeMap::new();

    while let Some((w, m)) = remaining.iter().next_back().map(|(w, m)| (w.clone(), *m)) {
        if m <= 0 {
            return Err(WeightError::NegativeMultiplicity(w));
        }
        if !levi_dominant(rs, levi, &w) {
            return Err(WeightError::BadLevi(format!(
                "peel reached the non-dominant weight {}",
                super::fmt_weight(&w)
            )));
        }
        let piece = levi_irrep_diagram(rs, levi, &w, dim_bound, &mut cache)?;
        for (pw, pm) in piece.multiplicities() {
            let entry = remaining.entry(pw.clone()).or_insert(0);
            *entry -= m * *pm as i64;
            match (*entry).cmp(&0) {
                core::cmp::Ordering::Less => {
                    return Err(WeightError::NegativeMultiplicity(pw.clone()))
                }
                core::cmp::Ordering::Equal => {
                    remaining.remove(pw);
                }
                core::cmp::Ordering::Greater => {}
            }
        }
        out.push((w, m as u64));
    }

    // the remainder emptied, so the constituents reassemble the diagram
    Ok(out)
}

/// Multiplicity of the Levi trivial representation in the restriction;
/// equals the multiplicity of `lambda` in the induced trivial by Frobenius
/// reciprocity.
pub fn trivial_multiplicity(
    rs: &RootSystem,
    lambda: &[Rat],
    levi: &LeviShape,
    dim_bound: u64,
) -> Result<u64, WeightError> {
    let zero = alloc::vec![Rat::from_integer(0); rs.coords()];
    Ok(branch_to_levi(rs, lambda, levi, dim_bound)?
        .into_iter()
        .find(|(w, _)| *w == zero)
        .map(|(_, m)| m)
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::weyl_dim;
    use alloc::vec;

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n)
    }

    const BOUND: u64 = 20_000;

    #[test]
    fn sl3_adjoint_to_gl2_gl1() {
        let a2 = RootSystem::new(ClassicalType::A, 2);
        let levi = LeviShape::new(vec![2, 1], 0);
        let adjoint = [rat(1), rat(0), rat(-1)];
        let decomp = branch_to_levi(&a2, &adjoint, &levi, BOUND).unwrap();
        let total: u64 = decomp.iter().map(|(_, m)| m).sum();
        assert_eq!(total, 4, "four Levi constituents");
        assert_eq!(
            trivial_multiplicity(&a2, &adjoint, &levi, BOUND).unwrap(),
            1
        );
    }

    #[test]
    fn sl2_to_torus_is_the_diagram() {
        let a1 = RootSystem::new(ClassicalType::A, 1);
        let levi = LeviShape::new(vec![1, 1], 0);
        let decomp = branch_to_levi(&a1, &[rat(1), rat(-1)], &levi, BOUND).unwrap();
        assert_eq!(decomp.len(), 3);
        assert!(decomp.iter().all(|(_, m)| *m == 1));
        assert_eq!(
            trivial_multiplicity(&a1, &[rat(1), rat(-1)], &levi, BOUND).unwrap(),
            1
        );
    }

    #[test]
    fn sp4_standard_to_gl2() {
        let c2 = RootSystem::new(ClassicalType::C, 2);
        let levi = LeviShape::new(vec![2], 0);
        let decomp = branch_to_levi(&c2, &[rat(1), rat(0)], &levi, BOUND).unwrap();
        // standard plus its dual
        assert_eq!(decomp.len(), 2);
        assert!(decomp.contains(&(vec![rat(1), rat(0)], 1)));
        assert!(decomp.contains(&(vec![rat(0), rat(-1)], 1)));
    }

    #[test]
    fn so5_standard_to_gl2() {
        let b2 = RootSystem::new(ClassicalType::B, 2);
        let levi = LeviShape::new(vec![2], 0);
        let std5 = [rat(1), rat(0)];
        let decomp = branch_to_levi(&b2, &std5, &levi, BOUND).unwrap();
        assert_eq!(trivial_multiplicity(&b2, &std5, &levi, BOUND).unwrap(), 1);
        let total: u64 = decomp.iter().map(|(_, m)| m).sum();
        assert_eq!(total, 3, "standard, dual standard and the trivial");
    }

    #[test]
    fn full_group_levi_detects_the_trivial() {
        let c2 = RootSystem::new(ClassicalType::C, 2);
        let levi = LeviShape::new(vec![], 2);
        assert_eq!(
            trivial_multiplicity(&c2, &[rat(0), rat(0)], &levi, BOUND).unwrap(),
            1
        );
        assert_eq!(
            trivial_multiplicity(&c2, &[rat(1), rat(0)], &levi, BOUND).unwrap(),
            0
        );
        assert_eq!(
            trivial_multiplicity(&c2, &[rat(2), rat(0)], &levi, BOUND).unwrap(),
            0
        );
    }

    #[test]
    fn branching_reassembles_dimensions() {
        let c2 = RootSystem::new(ClassicalType::C, 2);
        let gl2 = RootSystem::new(ClassicalType::A, 1);
        for lambda in [[rat(2), rat(0)], [rat(2), rat(1)], [rat(2), rat(2)]] {
            let levi = LeviShape::new(vec![2], 0);
            let decomp = branch_to_levi(&c2, &lambda, &levi, BOUND).unwrap();
            let total: u64 = decomp
                .iter()
                .map(|(w, m)| m * weyl_dim(&gl2, w).unwrap())
                .sum();
            assert_eq!(total, weyl_dim(&c2, &lambda).unwrap());
        }
    }

    #[test]
    fn mixed_levi_with_residual_factor() {
        // gl(1) x so(3) inside so(5)
        let b2 = RootSystem::new(ClassicalType::B, 2);
        let levi = LeviShape::new(vec![1], 1);
        let adjoint = [rat(1), rat(1)];
        let decomp = branch_to_levi(&b2, &adjoint, &levi, BOUND).unwrap();
        let b1 = RootSystem::new(ClassicalType::B, 1);
        let total: u64 = decomp
            .iter()
            .map(|(w, m)| m * weyl_dim(&b1, &w[1..]).unwrap())
            .sum();
        assert_eq!(total, weyl_dim(&b2, &adjoint).unwrap());
        // so(5) adjoint restricted to gl(1) x so(3) contains the trivial once
        assert_eq!(
            trivial_multiplicity(&b2, &adjoint, &levi, BOUND).unwrap(),
            1
        );
    }

    #[test]
    fn so6_vector_to_gl1_so4() {
        // a type D residual factor with even sign changes
        let d3 = RootSystem::new(ClassicalType::D, 3);
        let levi = LeviShape::new(vec![1], 2);
        let vector = [rat(1), rat(0), rat(0)];
        let decomp = branch_to_levi(&d3, &vector, &levi, BOUND).unwrap();
        let d2 = RootSystem::new(ClassicalType::D, 2);
        let total: u64 = decomp
            .iter()
            .map(|(w, m)| m * weyl_dim(&d2, &w[1..]).unwrap())
            .sum();
        assert_eq!(total, 6);
        assert!(decomp.contains(&(vec![rat(0), rat(1), rat(0)], 1)));
        assert_eq!(trivial_multiplicity(&d3, &vector, &levi, BOUND).unwrap(), 0);
    }

    #[test]
    fn bad_levi_is_rejected() {
        let c2 = RootSystem::new(ClassicalType::C, 2);
        let levi = LeviShape::new(vec![2], 2);
        assert!(matches!(
            branch_to_levi(&c2, &[rat(1), rat(0)], &levi, BOUND),
            Err(WeightError::BadLevi(_))
        ));
    }
}
