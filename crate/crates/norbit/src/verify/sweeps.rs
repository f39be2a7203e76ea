//! Exhaustive combinatorial sweeps exposed as verification cases: the
//! collapse against its brute-force definition, duality as an
//! order-reversing bijection on specials, and induction staging.

use norbit_core::infchar::consistency_report;
use norbit_core::orbit::{
    bv_dual, closure_lt, enumerate_orbits, enumerate_orbits_with_rank0, induce, is_special,
    partitions_of, Orbit,
};
use norbit_core::partition::{collapse, parity_ok};
use norbit_core::{ClassicalType, Partition};

use super::{CaseReport, VerifyError};

/// Brute-force collapse: dominance maximum over all valid partitions of
/// the same size below the input. Independent of the greedy route.
pub fn collapse_oracle(ty: ClassicalType, p: &Partition) -> Partition {
    let mut best: Option<Partition> = None;
    for q in partitions_of(p.size(), p.size()) {
        if !parity_ok(ty, &q) || !p.dominates(&q).unwrap() {
            continue;
        }
        best = match best {
            None => Some(q),
            Some(b) => Some(if q.dominates(&b).unwrap() { q } else { b }),
        };
    }
    best.expect("some valid partition lies below every input")
}

/// Greedy collapse equals the brute-force maximum on every partition of
/// the given size.
pub fn check_collapse(ty: ClassicalType, size: u32) -> CaseReport {
    let case = format!("collapse/{ty}/{size}");
    let odd_total = ty == ClassicalType::B;
    if (size % 2 == 1) != odd_total {
        return CaseReport::fail(case, format!("size {size} has the wrong parity for {ty}"));
    }
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for p in partitions_of(size, size) {
        let got = match collapse(ty, &p) {
            Ok(g) => g,
            Err(e) => {
                bad.push(format!("({p}): {e}"));
                continue;
            }
        };
        let want = collapse_oracle(ty, &p);
        checked += 1;
        if got != want {
            bad.push(format!("({p}): greedy ({got}) vs brute force ({want})"));
        }
    }
    if bad.is_empty() {
        CaseReport::pass(case, format!("{checked} partitions, greedy = brute force"))
    } else {
        CaseReport::fail(case, bad.join("; "))
    }
}

/// Duality is an order-reversing bijection from the specials onto the
/// specials of the dual type.
pub fn check_duality(ty: ClassicalType, rank: u32) -> CaseReport {
    use std::collections::BTreeSet;
    let case = format!("duality/{ty}/{rank}");
    let dual_ty = match ty {
        ClassicalType::A => ClassicalType::A,
        ClassicalType::B => ClassicalType::C,
        ClassicalType::C => ClassicalType::B,
        ClassicalType::D => ClassicalType::D,
    };
    let specials: Vec<Orbit> = enumerate_orbits(ty, rank)
        .into_iter()
        .filter(is_special)
        .collect();
    let dual_specials: BTreeSet<Orbit> = enumerate_orbits(dual_ty, rank)
        .into_iter()
        .filter(is_special)
        .collect();
    let images: BTreeSet<Orbit> = specials.iter().map(bv_dual).collect();

    let mut bad = Vec::new();
    if images.len() != specials.len() {
        bad.push(format!(
            "not injective: {} specials, {} images",
            specials.len(),
            images.len()
        ));
    }
    if images != dual_specials {
        bad.push("image differs from the dual specials".to_string());
    }
    for a in &specials {
        for b in &specials {
            if closure_lt(a, b) && !closure_lt(&bv_dual(b), &bv_dual(a)) {
                bad.push(format!("order not reversed between {a} and {b}"));
            }
        }
    }
    if bad.is_empty() {
        CaseReport::pass(
            case,
            format!(
                "{} specials map onto {} specials, order reversed",
                specials.len(),
                dual_specials.len()
            ),
        )
    } else {
        CaseReport::fail(case, bad.join("; "))
    }
}

/// Induction is independent of staging: one-shot equals any block order.
pub fn check_stage_independence(ty: ClassicalType, max_ambient: u32, sum_bound: u32) -> CaseReport {
    let case = format!("stage-independence/{ty}/rank<={max_ambient}/sum<={sum_bound}");
    fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
        if items.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.to_vec();
            let x = rest.remove(i);
            for mut tail in permutations(&rest) {
                tail.insert(0, x);
                out.push(tail);
            }
        }
        out
    }
    let mut cases = 0usize;
    let mut bad = Vec::new();
    for ambient in 1..=max_ambient {
        for total in 1..=ambient.min(sum_bound) {
            let base_rank = ambient - total;
            for blocks in partitions_of(total, total) {
                for base in enumerate_orbits_with_rank0(ty, base_rank) {
                    let direct = match induce(ty, ambient, &base, blocks.parts()) {
                        Ok(o) => o,
                        Err(e) => {
                            bad.push(format!("direct induce failed: {e}"));
                            continue;
                        }
                    };
                    for order in permutations(blocks.parts()) {
                        cases += 1;
                        let mut cur = base.clone();
                        let mut rank = base_rank;
                        let mut failed = false;
                        for k in order {
                            rank += k;
                            match induce(ty, rank, &cur, &[k]) {
                                Ok(o) => cur = o,
                                Err(e) => {
                                    bad.push(format!("staged induce failed: {e}"));
                                    failed = true;
                                    break;
                                }
                            }
                        }
                        if !failed && cur.partition() != direct.partition() {
                            bad.push(format!(
                                "base {base} blocks ({blocks}): {} vs {}",
                                cur.partition(),
                                direct.partition()
                            ));
                        }
                    }
                }
            }
        }
    }
    if bad.is_empty() {
        CaseReport::pass(case, format!("{cases} staged inductions agree"))
    } else {
        CaseReport::fail(case, bad.join("; "))
    }
}

/// Wraps the exact consistency audit as a verification case.
pub fn check_consistency(ty: ClassicalType, rank: u32) -> Result<CaseReport, VerifyError> {
    let report = consistency_report(ty, rank).map_err(|e| VerifyError::Core(format!("{e}")))?;
    let case = format!("consistency/{ty}/{rank}");
    if report.is_clean() {
        Ok(CaseReport::pass(
            case,
            format!(
                "{} orbits audited, 0 discrepancies, {} notes",
                report.orbits.len(),
                report.notes.len()
            ),
        ))
    } else {
        Ok(CaseReport::fail(case, report.discrepancies.join("; ")))
    }
}
