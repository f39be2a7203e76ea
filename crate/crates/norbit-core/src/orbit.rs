//! Orbit-level combinatorics: enumeration, closure order, specialness,
//! Barbasch-Vogan duality, weighted Dynkin data, component groups, the
//! triangular families and Lusztig-Spaltenstein induction.

use alloc::vec::Vec;
use core::fmt;

pub use crate::partition::ClassicalType;
use crate::partition::{collapse, is_valid, Partition, PartitionError};

/// Default rank cutoff for the exhaustive cuspidality search.
pub const DEFAULT_CUSPIDAL_RANK_BOUND: u32 = 6;

/// Distinguishes the two very even orbits sharing an all-even type-D
/// partition. The labels are opaque: no convention ties I/II to a
/// Levi-conjugacy class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VeryEvenLabel {
    I,
    II,
}

impl fmt::Display for VeryEvenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VeryEvenLabel::I => write!(f, "I"),
            VeryEvenLabel::II => write!(f, "II"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitError {
    InvalidPartition {
        ty: ClassicalType,
        rank: u32,
        partition: Partition,
    },
    /// Very-even labels only make sense for all-even type-D partitions.
    BadLabel,
    NotTriangular(Partition),
    NotStablyTrivial(Partition),
    /// Rank mismatch between induction data and the ambient algebra.
    RankMismatch {
        expected: u32,
        got: u32,
    },
    /// Per-block orbit data does not fit its gl block.
    BadGlOrbit {
        partition: Partition,
    },
    /// The exhaustive search refuses ranks beyond the configured bound.
    BoundExceeded {
        rank: u32,
        bound: u32,
    },
    Partition(PartitionError),
}

impl fmt::Display for OrbitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitError::InvalidPartition {
                ty,
                rank,
                partition,
            } => {
                write!(
                    f,
                    "({partition}) is not a valid type {ty} rank {rank} orbit"
                )
            }
            OrbitError::BadLabel => {
                write!(f, "very-even label requires type D with all parts even")
            }
            OrbitError::NotTriangular(p) => write!(f, "({p}) is not a triangular orbit"),
            OrbitError::NotStablyTrivial(p) => write!(f, "({p}) is not stably trivial"),
            OrbitError::RankMismatch { expected, got } => {
                write!(f, "rank mismatch: expected {expected}, got {got}")
            }
            OrbitError::BadGlOrbit { partition } => {
                write!(f, "({partition}) does not fit its gl block")
            }
            OrbitError::BoundExceeded { rank, bound } => {
                write!(f, "rank {rank} exceeds the search bound {bound}")
            }
            OrbitError::Partition(e) => write!(f, "{e}"),
        }
    }
}

impl From<PartitionError> for OrbitError {
    fn from(e: PartitionError) -> Self {
        OrbitError::Partition(e)
    }
}

/// A nilpotent orbit of a classical Lie algebra: type, rank, Jordan-type
/// partition and (for very even type-D partitions) a pair label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orbit {
    ty: ClassicalType,
    rank: u32,
    partition: Partition,
    label: Option<VeryEvenLabel>,
}

impl Orbit {
    pub fn new(
        ty: ClassicalType,
        rank: u32,
        partition: Partition,
        label: Option<VeryEvenLabel>,
    ) -> Result<Self, OrbitError> {
        if !is_valid(ty, rank, &partition) {
            return Err(OrbitError::InvalidPartition {
                ty,
                rank,
                partition,
            });
        }
        if label.is_some() && !(ty == ClassicalType::D && all_parts_even(&partition)) {
            return Err(OrbitError::BadLabel);
        }
        Ok(Orbit {
            ty,
            rank,
            partition,
            label,
        })
    }

    /// The zero orbit `1^N`. Rank 0 gives the so(1), sp(0), so(0), gl(1)
    /// base cases used as induction bases.
    pub fn zero(ty: ClassicalType, rank: u32) -> Orbit {
        let n = ty.partition_size(rank);
        Orbit {
            ty,
            rank,
            partition: Partition::rectangle(1, n as usize),
            label: None,
        }
    }

    /// The principal orbit: collapse of the single row.
    pub fn principal(ty: ClassicalType, rank: u32) -> Orbit {
        let n = ty.partition_size(rank);
        let row = if n == 0 {
            Partition::empty()
        } else {
            Partition::rectangle(n, 1)
        };
        let partition = collapse(ty, &row).expect("size parity matches the type");
        let label = if ty == ClassicalType::D && all_parts_even(&partition) {
            Some(VeryEvenLabel::I)
        } else {
            None
        };
        Orbit {
            ty,
            rank,
            partition,
            label,
        }
    }

    pub fn ty(&self) -> ClassicalType {
        self.ty
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn label(&self) -> Option<VeryEvenLabel> {
        self.label
    }

    pub fn is_very_even(&self) -> bool {
        self.ty == ClassicalType::D && all_parts_even(&self.partition)
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{} ({})", self.ty, self.rank, self.partition)?;
        if let Some(l) = self.label {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

fn all_parts_even(p: &Partition) -> bool {
    !p.is_empty() && p.parts().iter().all(|&x| x % 2 == 0)
}

/// Inducing data: gl block sizes plus the rank of the residual classical
/// factor. For type A every factor is a block and `residual_rank` is 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeviShape {
    pub gl_blocks: Vec<u32>,
    pub residual_rank: u32,
}

impl LeviShape {
    /// Blocks are kept sorted descending; the multiset is what matters.
    pub fn new(gl_blocks: Vec<u32>, residual_rank: u32) -> Self {
        let mut gl_blocks = gl_blocks;
        gl_blocks.sort_unstable_by(|a, b| b.cmp(a));
        LeviShape {
            gl_blocks,
            residual_rank,
        }
    }

    pub fn block_sum(&self) -> u32 {
        self.gl_blocks.iter().sum()
    }

    /// Rank bookkeeping against an ambient algebra: blocks plus residual
    /// exhaust the rank (the n+1 gl coordinates in type A).
    pub fn validate(&self, ty: ClassicalType, ambient_rank: u32) -> Result<(), OrbitError> {
        if self.gl_blocks.contains(&0) {
            return Err(OrbitError::BadGlOrbit {
                partition: Partition::empty(),
            });
        }
        let (expected, got) = match ty {
            ClassicalType::A => (ambient_rank + 1, self.block_sum() + self.residual_rank),
            _ => (ambient_rank, self.block_sum() + self.residual_rank),
        };
        if ty == ClassicalType::A && self.residual_rank != 0 {
            return Err(OrbitError::RankMismatch { expected, got });
        }
        if got != expected {
            return Err(OrbitError::RankMismatch { expected, got });
        }
        Ok(())
    }
}

impl fmt::Display for LeviShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.gl_blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "gl({k})")?;
        }
        if self.gl_blocks.is_empty() {
            write!(f, "1")?;
        }
        write!(f, " | residual rank {}", self.residual_rank)
    }
}

/// All partitions of `n` with parts at most `max`, descending lexicographic.
pub fn partitions_of(n: u32, max: u32) -> Vec<Partition> {
    if n == 0 {
        return alloc::vec![Partition::empty()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for rest in partitions_of(n - first, first) {
            let mut parts = alloc::vec![first];
            parts.extend_from_slice(rest.parts());
            out.push(Partition::new(parts).expect("descending by construction"));
        }
    }
    out
}

/// Every orbit of the rank-`n` type-`ty` algebra, sorted descending in the
/// dominance-compatible lexicographic order. Very even type-D partitions
/// appear twice, labelled I and II.
pub fn enumerate_orbits(ty: ClassicalType, rank: u32) -> Vec<Orbit> {
    let size = ty.partition_size(rank);
    let mut out = Vec::new();
    for p in partitions_of(size, size) {
        if !is_valid(ty, rank, &p) {
            continue;
        }
        if ty == ClassicalType::D && all_parts_even(&p) {
            out.push(Orbit::new(ty, rank, p.clone(), Some(VeryEvenLabel::I)).unwrap());
            out.push(Orbit::new(ty, rank, p, Some(VeryEvenLabel::II)).unwrap());
        } else {
            out.push(Orbit::new(ty, rank, p, None).unwrap());
        }
    }
    out
}

/// Like [`enumerate_orbits`] but meaningful at rank 0.
pub fn enumerate_orbits_with_rank0(ty: ClassicalType, rank: u32) -> Vec<Orbit> {
    if rank == 0 {
        return alloc::vec![Orbit::zero(ty, 0)];
    }
    enumerate_orbits(ty, rank)
}

/// Strict closure-order comparison on descriptors: partition dominance,
/// with equal-partition very even twins incomparable.
pub fn closure_lt(lower: &Orbit, upper: &Orbit) -> bool {
    lower.partition != upper.partition
        && upper.partition.dominates(&lower.partition).unwrap_or(false)
}

/// Covering pairs `(upper, lower)` of the closure order.
pub fn hasse_edges(ty: ClassicalType, rank: u32) -> Vec<(Orbit, Orbit)> {
    let orbits = enumerate_orbits(ty, rank);
    let mut edges = Vec::new();
    for upper in &orbits {
        for lower in &orbits {
            if !closure_lt(lower, upper) {
                continue;
            }
            let has_middle = orbits
                .iter()
                .any(|m| closure_lt(lower, m) && closure_lt(m, upper));
            if !has_middle {
                edges.push((upper.clone(), lower.clone()));
            }
        }
    }
    edges
}

/// Specialness, decided by a parity test on the transpose partition:
/// A always; B and D ask every even part of the transpose to have even
/// multiplicity; C asks the same of odd parts.
pub fn is_special(o: &Orbit) -> bool {
    let t = o.partition.transpose();
    match o.ty {
        ClassicalType::A => true,
        ClassicalType::B | ClassicalType::D => t
            .distinct_parts()
            .iter()
            .all(|&v| v % 2 == 1 || t.multiplicity(v).is_multiple_of(2)),
        ClassicalType::C => t
            .distinct_parts()
            .iter()
            .all(|&v| v % 2 == 0 || t.multiplicity(v).is_multiple_of(2)),
    }
}

/// Barbasch-Vogan duality. A stays in A (transpose), B and C swap, D stays
/// in D:
///
/// - A: transpose;
/// - B_n -> C_n: C-collapse of the transpose after removing a box from a
///   largest part;
/// - C_n -> B_n: B-collapse of the transpose with a box added to a largest
///   part;
/// - D_n -> D_n: D-collapse of the transpose.
///
/// For a very even input the label is carried to the (very even) dual; the
/// labels are opaque so any consistent convention works.
pub fn bv_dual(o: &Orbit) -> Orbit {
    let (ty, partition) = match o.ty {
        ClassicalType::A => (ClassicalType::A, o.partition.transpose()),
        ClassicalType::B => {
            let shrunk = o
                .partition
                .remove_box_largest()
                .expect("B partitions are nonempty");
            (
                ClassicalType::C,
                collapse(ClassicalType::C, &shrunk.transpose()).expect("even size"),
            )
        }
        ClassicalType::C => (
            ClassicalType::B,
            collapse(ClassicalType::B, &o.partition.transpose().add_box_largest())
                .expect("odd size"),
        ),
        ClassicalType::D => (
            ClassicalType::D,
            collapse(ClassicalType::D, &o.partition.transpose()).expect("even size"),
        ),
    };
    let rank = ty
        .rank_for_size(partition.size())
        .expect("dual size matches the dual type");
    let label = if ty == ClassicalType::D && all_parts_even(&partition) {
        o.label
    } else {
        None
    };
    Orbit::new(ty, rank, partition, label).expect("duality lands on a valid orbit")
}

/// The dominant semisimple element of a Lie triple for the orbit, in
/// canonical coordinates: the multiset union over parts p of
/// {p-1, p-3, ..., 1-p}, sorted descending and truncated to rank many
/// entries (all n+1 entries for type A).
pub fn dynkin_h(o: &Orbit) -> Vec<i64> {
    let mut entries: Vec<i64> = Vec::new();
    for &p in o.partition.parts() {
        let p = i64::from(p);
        let mut v = p - 1;
        while v >= 1 - p {
            entries.push(v);
            v -= 2;
        }
    }
    entries.sort_unstable_by(|a, b| b.cmp(a));
    let keep = match o.ty {
        ClassicalType::A => o.rank as usize + 1,
        _ => o.rank as usize,
    };
    entries.truncate(keep);
    entries
}

/// Simple-root values of `dynkin_h`: the weighted Dynkin diagram labels.
pub fn simple_root_labels(o: &Orbit) -> Vec<i64> {
    let h = dynkin_h(o);
    if h.is_empty() {
        return Vec::new();
    }
    let mut labels: Vec<i64> = h.windows(2).map(|w| w[0] - w[1]).collect();
    match o.ty {
        ClassicalType::A => {}
        ClassicalType::B => labels.push(*h.last().unwrap()),
        ClassicalType::C => labels.push(2 * h.last().unwrap()),
        ClassicalType::D => {
            // so(2) has an empty root system
            if o.rank >= 2 {
                labels.push(h[h.len() - 2] + h[h.len() - 1]);
            } else {
                labels.clear();
            }
        }
    }
    labels
}

/// An orbit is even when every simple-root label of its Dynkin h is even.
pub fn is_even(o: &Orbit) -> bool {
    simple_root_labels(o).iter().all(|&l| l % 2 == 0)
}

/// Order of A(O) = G(e)/G(e)_0 in the adjoint-group convention: trivial in
/// type A, 2^(#distinct even parts) in C, 2^max(0, #distinct odd parts - 1)
/// in B and D.
pub fn component_group_order(o: &Orbit) -> u64 {
    let distinct = o.partition.distinct_parts();
    match o.ty {
        ClassicalType::A => 1,
        ClassicalType::C => 1u64 << distinct.iter().filter(|&&v| v % 2 == 0).count(),
        ClassicalType::B | ClassicalType::D => {
            let odd = distinct.iter().filter(|&&v| v % 2 == 1).count();
            1u64 << odd.saturating_sub(1)
        }
    }
}

/// Which reading of the type-D stably-trivial criterion to use. The
/// literal criterion ("every even part appears an even number of times")
/// is vacuous for valid D partitions; the parity-parallel reading mirrors
/// type B. Both ship; reports flag the vacuous one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StablyTrivialMode {
    PaperLiteral,
    ParityParallel,
}

/// Stable triviality A(O) = A-bar(O), decided by the per-type multiplicity
/// criteria. `mode` only matters in type D.
pub fn is_stably_trivial(o: &Orbit, mode: StablyTrivialMode) -> bool {
    let p = &o.partition;
    match o.ty {
        ClassicalType::A => true,
        ClassicalType::B => {
            // every odd part has even multiplicity, the largest odd part excepted
            let largest_odd = p.parts().iter().copied().find(|&v| v % 2 == 1);
            p.distinct_parts().iter().all(|&v| {
                v % 2 == 0 || Some(v) == largest_odd || p.multiplicity(v).is_multiple_of(2)
            })
        }
        ClassicalType::C => p
            .distinct_parts()
            .iter()
            .all(|&v| v % 2 == 1 || p.multiplicity(v).is_multiple_of(2)),
        ClassicalType::D => match mode {
            StablyTrivialMode::PaperLiteral => p
                .distinct_parts()
                .iter()
                .all(|&v| v % 2 == 1 || p.multiplicity(v).is_multiple_of(2)),
            StablyTrivialMode::ParityParallel => {
                let largest = p.part(0);
                p.distinct_parts()
                    .iter()
                    .all(|&v| v % 2 == 0 || v == largest || p.multiplicity(v).is_multiple_of(2))
            }
        },
    }
}

/// The staircase partition of the type-`ty` triangular family at parameter
/// `m >= 1`: B: (2m+1, 2m-1, 2m-1, ..., 1, 1); C: (2m, 2m, ..., 2, 2);
/// D: (2m-1, 2m-1, ..., 1, 1).
pub fn triangular_partition(ty: ClassicalType, m: u32) -> Option<Partition> {
    if m == 0 {
        return None;
    }
    let mut parts = Vec::new();
    match ty {
        ClassicalType::A => return None,
        ClassicalType::B => {
            parts.push(2 * m + 1);
            for v in (1..=m).rev() {
                parts.push(2 * v - 1);
                parts.push(2 * v - 1);
            }
        }
        ClassicalType::C => {
            for v in (1..=m).rev() {
                parts.push(2 * v);
                parts.push(2 * v);
            }
        }
        ClassicalType::D => {
            for v in (1..=m).rev() {
                parts.push(2 * v - 1);
                parts.push(2 * v - 1);
            }
        }
    }
    Some(Partition::new(parts).expect("staircases are sorted"))
}

/// Parameter m of the triangular family containing this orbit, if any.
pub fn triangular_m(o: &Orbit) -> Option<u32> {
    for m in 1..=o.partition.size() {
        let t = triangular_partition(o.ty, m)?;
        if t.size() > o.partition.size() {
            return None;
        }
        if t == o.partition {
            return Some(m);
        }
    }
    None
}

pub fn is_triangular(o: &Orbit) -> bool {
    triangular_m(o).is_some()
}

/// The Levi the triangular orbit is induced from, carrying the trivial
/// orbit on every factor: B: gl(2)+...+gl(2m) over so(1); C:
/// gl(1)+...+gl(2m-1) over sp(2m); D: gl(2)+...+gl(2m-2) over so(2m).
/// A_P is trivial for each of these.
pub fn triangular_levi(o: &Orbit) -> Result<LeviShape, OrbitError> {
    let m = triangular_m(o).ok_or_else(|| OrbitError::NotTriangular(o.partition.clone()))?;
    Ok(match o.ty {
        ClassicalType::B => LeviShape::new((1..=m).map(|v| 2 * v).collect(), 0),
        ClassicalType::C => LeviShape::new((1..=m).map(|v| 2 * v - 1).collect(), m),
        ClassicalType::D => LeviShape::new((1..m).map(|v| 2 * v).collect(), m),
        ClassicalType::A => unreachable!("no type A triangular family"),
    })
}

/// Lusztig-Spaltenstein induction from `base` on the residual factor with
/// the trivial orbit on each gl block.
///
/// With q the transpose of the block multiset, the j-th part of the padded
/// base grows by 2q[j] (q[j] in type A) and the result is collapsed.
/// Independent of staging: inducing block-by-block in any order agrees.
pub fn induce(
    ty: ClassicalType,
    ambient_rank: u32,
    base: &Orbit,
    blocks: &[u32],
) -> Result<Orbit, OrbitError> {
    let gl_orbits: Vec<Partition> = blocks
        .iter()
        .map(|&k| Partition::rectangle(1, k as usize))
        .collect();
    induce_general(ty, ambient_rank, base, &gl_orbits)
}

/// Induction with arbitrary orbit data on the gl blocks: the blockwise
/// partitions add coordinatewise (induction within gl adds partitions),
/// the combined total is added twice to the base (once in type A), and the
/// result is collapsed. Reduces to [`induce`] when every gl orbit is
/// trivial.
pub fn induce_general(
    ty: ClassicalType,
    ambient_rank: u32,
    base: &Orbit,
    gl_orbits: &[Partition],
) -> Result<Orbit, OrbitError> {
    if base.ty() != ty {
        return Err(OrbitError::RankMismatch {
            expected: ambient_rank,
            got: base.rank(),
        });
    }
    if gl_orbits.iter().any(|p| p.is_empty()) {
        return Err(OrbitError::BadGlOrbit {
            partition: Partition::empty(),
        });
    }
    let block_sum: u32 = gl_orbits.iter().map(|p| p.size()).sum();
    if base.rank() + block_sum != ambient_rank {
        return Err(OrbitError::RankMismatch {
            expected: ambient_rank,
            got: base.rank() + block_sum,
        });
    }
    let mut combined: Vec<u32> = Vec::new();
    for p in gl_orbits {
        for (j, &v) in p.parts().iter().enumerate() {
            if combined.len() <= j {
                combined.push(0);
            }
            combined[j] += v;
        }
    }
    let factor = if ty == ClassicalType::A { 1 } else { 2 };
    let len = combined.len().max(base.partition().len());
    let mut target: Vec<u32> = Vec::with_capacity(len);
    for j in 0..len {
        let q = combined.get(j).copied().unwrap_or(0);
        target.push(base.partition().part(j) + factor * q);
    }
    let target = Partition::new(target).expect("sums of descending sequences are descending");
    let partition = collapse(ty, &target)?;
    // Induction does not resolve the I/II pair for very even results.
    Orbit::new(ty, ambient_rank, partition, None)
}

/// One way of inducing an orbit from a maximal Levi gl(k) + g(n-k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub block: u32,
    pub gl_orbit: Partition,
    pub base: Orbit,
}

impl Presentation {
    pub fn is_trivial_gl(&self) -> bool {
        self.gl_orbit.part(0) <= 1
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "gl({}) orbit ({}) over base {}",
            self.block, self.gl_orbit, self.base
        )
    }
}

/// Exhaustive search over maximal Levis gl(k) + g(n-k) and all orbit data.
/// Labels are opaque, so presentations match on the partition alone.
pub fn inducing_presentations(o: &Orbit, rank_bound: u32) -> Result<Vec<Presentation>, OrbitError> {
    if o.rank() > rank_bound {
        return Err(OrbitError::BoundExceeded {
            rank: o.rank(),
            bound: rank_bound,
        });
    }
    let mut out = Vec::new();
    for k in 1..=o.rank() {
        let base_rank = o.rank() - k;
        for gl_orbit in partitions_of(k, k) {
            for base in enumerate_orbits_with_rank0(o.ty(), base_rank) {
                let induced =
                    induce_general(o.ty(), o.rank(), &base, core::slice::from_ref(&gl_orbit))?;
                if induced.partition() == o.partition() {
                    out.push(Presentation {
                        block: k,
                        gl_orbit: gl_orbit.clone(),
                        base,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Cuspidal means not induced from any proper Levi (induction is
/// transitive, so maximal Levis suffice). Bounded exhaustive search;
/// ranks beyond `rank_bound` are refused rather than guessed.
pub fn is_cuspidal(o: &Orbit, rank_bound: u32) -> Result<bool, OrbitError> {
    Ok(inducing_presentations(o, rank_bound)?.is_empty())
}

/// Searches for the smallest multiset of gl blocks (by total, then
/// lexicographic on the descending tuple) whose trivial-orbit induction
/// turns the stably trivial orbit `o` into a triangular orbit.
///
/// Returns the blocks and the triangular orbit reached, or None when no
/// completion exists with block total at most `search_bound`.
pub fn complete_to_triangular(
    o: &Orbit,
    search_bound: u32,
) -> Result<Option<(Vec<u32>, Orbit)>, OrbitError> {
    if !is_stably_trivial(o, StablyTrivialMode::PaperLiteral) {
        return Err(OrbitError::NotStablyTrivial(o.partition.clone()));
    }
    for total in 0..=search_bound {
        let mut candidates = partitions_of(total, total.max(1));
        candidates.sort();
        for blocks in candidates {
            let induced = induce(o.ty(), o.rank() + total, o, blocks.parts())?;
            if is_triangular(&induced) {
                return Ok(Some((blocks.parts().to_vec(), induced)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::format;
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn orb(ty: ClassicalType, rank: u32, parts: &[u32]) -> Orbit {
        Orbit::new(ty, rank, p(parts), None).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let b2: Vec<Partition> = enumerate_orbits(ClassicalType::B, 2)
            .into_iter()
            .map(|o| o.partition().clone())
            .collect();
        assert_eq!(
            b2,
            vec![p(&[5]), p(&[3, 1, 1]), p(&[2, 2, 1]), p(&[1, 1, 1, 1, 1])]
        );

        let c2: Vec<Partition> = enumerate_orbits(ClassicalType::C, 2)
            .into_iter()
            .map(|o| o.partition().clone())
            .collect();
        assert_eq!(
            c2,
            vec![p(&[4]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );

        let d2 = enumerate_orbits(ClassicalType::D, 2);
        let twins: Vec<&Orbit> = d2.iter().filter(|o| *o.partition() == p(&[2, 2])).collect();
        assert_eq!(twins.len(), 2);
        assert_eq!(twins[0].label(), Some(VeryEvenLabel::I));
        assert_eq!(twins[1].label(), Some(VeryEvenLabel::II));
    }

    #[test]
    fn enumeration_counts_match_brute_force() {
        for ty in [
            ClassicalType::A,
            ClassicalType::B,
            ClassicalType::C,
            ClassicalType::D,
        ] {
            for n in 1..=6u32 {
                let size = ty.partition_size(n);
                let all = partitions_of(size, size);
                let valid = all.iter().filter(|q| is_valid(ty, n, q)).count();
                let very_even = if ty == ClassicalType::D {
                    all.iter()
                        .filter(|q| is_valid(ty, n, q) && all_parts_even(q))
                        .count()
                } else {
                    0
                };
                assert_eq!(enumerate_orbits(ty, n).len(), valid + very_even);
            }
        }
    }

    #[test]
    fn hasse_chains() {
        let edges = hasse_edges(ClassicalType::B, 2);
        assert_eq!(edges.len(), 3);
        let chain: Vec<(Partition, Partition)> = edges
            .iter()
            .map(|(a, b)| (a.partition().clone(), b.partition().clone()))
            .collect();
        assert!(chain.contains(&(p(&[5]), p(&[3, 1, 1]))));
        assert!(chain.contains(&(p(&[3, 1, 1]), p(&[2, 2, 1]))));
        assert!(chain.contains(&(p(&[2, 2, 1]), p(&[1, 1, 1, 1, 1]))));

        assert_eq!(hasse_edges(ClassicalType::C, 2).len(), 3);
        assert_eq!(hasse_edges(ClassicalType::A, 1).len(), 1);

        // very even twins are incomparable
        let d4 = hasse_edges(ClassicalType::D, 4);
        assert!(!d4.iter().any(|(a, b)| a.partition() == b.partition()));
    }

    #[test]
    fn specialness_examples() {
        assert!(is_special(&orb(ClassicalType::B, 2, &[3, 1, 1])));
        assert!(!is_special(&orb(ClassicalType::B, 2, &[2, 2, 1])));
        assert!(!is_special(&orb(ClassicalType::C, 2, &[2, 1, 1])));
        assert!(is_special(&orb(ClassicalType::A, 2, &[2, 1])));
    }

    #[test]
    fn bv_dual_examples() {
        assert_eq!(
            bv_dual(&orb(ClassicalType::B, 2, &[3, 1, 1])),
            orb(ClassicalType::C, 2, &[2, 2])
        );
        assert_eq!(
            bv_dual(&orb(ClassicalType::B, 3, &[3, 2, 2])),
            orb(ClassicalType::C, 3, &[3, 3])
        );
        assert_eq!(
            bv_dual(&orb(ClassicalType::C, 2, &[2, 2])),
            orb(ClassicalType::B, 2, &[3, 1, 1])
        );
        assert_eq!(
            bv_dual(&Orbit::principal(ClassicalType::B, 2)),
            Orbit::zero(ClassicalType::C, 2)
        );
        assert_eq!(
            bv_dual(&Orbit::zero(ClassicalType::C, 2)),
            Orbit::principal(ClassicalType::B, 2)
        );
    }

    #[test]
    fn bv_dual_lands_on_specials_b_c() {
        for n in 1..=5u32 {
            for ty in [ClassicalType::B, ClassicalType::C] {
                for o in enumerate_orbits(ty, n) {
                    assert!(is_special(&bv_dual(&o)), "dual of {o} not special");
                }
            }
        }
    }

    #[test]
    fn bv_dual_bijective_and_order_reversing_on_specials() {
        for n in 1..=5u32 {
            for (ty, dual_ty) in [
                (ClassicalType::B, ClassicalType::C),
                (ClassicalType::C, ClassicalType::B),
                (ClassicalType::D, ClassicalType::D),
            ] {
                let specials: Vec<Orbit> = enumerate_orbits(ty, n)
                    .into_iter()
                    .filter(is_special)
                    .collect();
                let dual_specials: BTreeSet<Orbit> = enumerate_orbits(dual_ty, n)
                    .into_iter()
                    .filter(is_special)
                    .collect();
                let images: BTreeSet<Orbit> = specials.iter().map(bv_dual).collect();
                assert_eq!(images.len(), specials.len(), "not injective at {ty}{n}");
                assert_eq!(images, dual_specials, "not onto at {ty}{n}");
                for a in &specials {
                    for b in &specials {
                        if closure_lt(a, b) {
                            assert!(
                                closure_lt(&bv_dual(b), &bv_dual(a)),
                                "order not reversed between {a} and {b}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bv_dual_is_antitone_on_all_orbits() {
        // order-reversing on the whole closure poset, not just specials
        for n in 1..=4u32 {
            for ty in [
                ClassicalType::A,
                ClassicalType::B,
                ClassicalType::C,
                ClassicalType::D,
            ] {
                let orbits = enumerate_orbits(ty, n);
                for a in &orbits {
                    for b in &orbits {
                        if closure_lt(a, b) {
                            let (da, db) = (bv_dual(a), bv_dual(b));
                            assert!(
                                db.partition() == da.partition() || closure_lt(&db, &da),
                                "duality not antitone between {a} and {b}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bv_dual_twice_recorded_behaviour() {
        // d^2 fixes every special orbit at these ranks (recorded, not assumed).
        for n in 1..=5u32 {
            for ty in [ClassicalType::B, ClassicalType::C, ClassicalType::D] {
                for o in enumerate_orbits(ty, n).iter().filter(|o| is_special(o)) {
                    let dd = bv_dual(&bv_dual(o));
                    assert_eq!(dd.partition(), o.partition(), "d^2 moved {o}");
                }
            }
        }
    }

    #[test]
    fn dynkin_h_examples() {
        assert_eq!(dynkin_h(&orb(ClassicalType::C, 2, &[2, 2])), vec![1, 1]);
        assert_eq!(dynkin_h(&orb(ClassicalType::B, 2, &[3, 1, 1])), vec![2, 0]);
        assert_eq!(dynkin_h(&Orbit::zero(ClassicalType::C, 3)), vec![0, 0, 0]);
        assert_eq!(dynkin_h(&orb(ClassicalType::A, 2, &[2, 1])), vec![1, 0, -1]);
    }

    #[test]
    fn evenness_examples() {
        assert!(is_even(&orb(ClassicalType::C, 2, &[2, 2])));
        assert!(!is_even(&orb(ClassicalType::C, 2, &[2, 1, 1])));
        for ty in [
            ClassicalType::A,
            ClassicalType::B,
            ClassicalType::C,
            ClassicalType::D,
        ] {
            for n in 1..=6u32 {
                assert!(is_even(&Orbit::principal(ty, n)), "principal {ty}{n}");
                assert!(dynkin_h(&Orbit::zero(ty, n)).iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn component_group_examples() {
        assert_eq!(
            component_group_order(&orb(ClassicalType::B, 2, &[3, 1, 1])),
            2
        );
        assert_eq!(component_group_order(&orb(ClassicalType::C, 2, &[2, 2])), 2);
        assert_eq!(component_group_order(&orb(ClassicalType::B, 2, &[5])), 1);
        let very_even =
            Orbit::new(ClassicalType::D, 2, p(&[2, 2]), Some(VeryEvenLabel::I)).unwrap();
        assert_eq!(component_group_order(&very_even), 1);
    }

    #[test]
    fn stably_trivial_examples() {
        let m = StablyTrivialMode::PaperLiteral;
        assert!(is_stably_trivial(&orb(ClassicalType::B, 2, &[3, 1, 1]), m));
        assert!(!is_stably_trivial(&orb(ClassicalType::B, 3, &[3, 3, 1]), m));
        assert!(is_stably_trivial(&orb(ClassicalType::C, 2, &[2, 2]), m));
        // the largest odd part is exempt even when the largest part is even
        assert!(is_stably_trivial(&orb(ClassicalType::B, 4, &[4, 4, 1]), m));
        // the literal D criterion is vacuous on valid partitions
        for o in enumerate_orbits(ClassicalType::D, 4) {
            assert!(is_stably_trivial(&o, StablyTrivialMode::PaperLiteral));
        }
        assert!(!is_stably_trivial(
            &orb(ClassicalType::D, 4, &[5, 3]),
            StablyTrivialMode::ParityParallel
        ));
        assert!(is_stably_trivial(
            &orb(ClassicalType::D, 4, &[3, 3, 1, 1]),
            StablyTrivialMode::ParityParallel
        ));
    }

    #[test]
    fn triangular_examples() {
        let b = orb(ClassicalType::B, 2, &[3, 1, 1]);
        assert!(is_triangular(&b));
        assert_eq!(triangular_levi(&b).unwrap(), LeviShape::new(vec![2], 0));

        let c = orb(ClassicalType::C, 6, &[4, 4, 2, 2]);
        assert!(is_triangular(&c));
        assert_eq!(triangular_levi(&c).unwrap(), LeviShape::new(vec![3, 1], 2));

        let d = orb(ClassicalType::D, 4, &[3, 3, 1, 1]);
        assert!(is_triangular(&d));
        assert_eq!(triangular_levi(&d).unwrap(), LeviShape::new(vec![2], 2));

        let not = orb(ClassicalType::B, 3, &[5, 1, 1]);
        assert!(!is_triangular(&not));
        assert!(matches!(
            triangular_levi(&not),
            Err(OrbitError::NotTriangular(_))
        ));

        let d1 = orb(ClassicalType::D, 1, &[1, 1]);
        assert!(is_triangular(&d1));
        assert_eq!(triangular_levi(&d1).unwrap(), LeviShape::new(vec![], 1));
    }

    #[test]
    fn induce_examples() {
        let so1 = Orbit::zero(ClassicalType::B, 0);
        assert_eq!(
            induce(ClassicalType::B, 2, &so1, &[2]).unwrap(),
            orb(ClassicalType::B, 2, &[3, 1, 1])
        );
        assert_eq!(
            induce(ClassicalType::B, 6, &so1, &[2, 4]).unwrap(),
            orb(ClassicalType::B, 6, &[5, 3, 3, 1, 1])
        );
        let sp2 = Orbit::zero(ClassicalType::C, 1);
        assert_eq!(
            induce(ClassicalType::C, 2, &sp2, &[1]).unwrap(),
            orb(ClassicalType::C, 2, &[2, 2])
        );
        assert!(matches!(
            induce(ClassicalType::B, 3, &so1, &[2]),
            Err(OrbitError::RankMismatch { .. })
        ));
    }

    #[test]
    fn induce_general_examples() {
        let sp0 = Orbit::zero(ClassicalType::C, 0);
        assert_eq!(
            induce_general(ClassicalType::C, 2, &sp0, &[p(&[2])]).unwrap(),
            orb(ClassicalType::C, 2, &[4])
        );
        let gl1 = Orbit::zero(ClassicalType::A, 0);
        assert_eq!(
            induce_general(ClassicalType::A, 1, &gl1, &[p(&[1])]).unwrap(),
            orb(ClassicalType::A, 1, &[2])
        );
        let so1 = Orbit::zero(ClassicalType::B, 0);
        assert_eq!(
            induce_general(ClassicalType::B, 3, &so1, &[p(&[1, 1, 1])]).unwrap(),
            orb(ClassicalType::B, 3, &[3, 2, 2])
        );
    }

    #[test]
    fn staging_independence_exhaustive() {
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

        for ty in [
            ClassicalType::A,
            ClassicalType::B,
            ClassicalType::C,
            ClassicalType::D,
        ] {
            for ambient in 1..=6u32 {
                for total in 1..=ambient {
                    let base_rank = ambient - total;
                    for blocks in partitions_of(total, total) {
                        for base in enumerate_orbits_with_rank0(ty, base_rank) {
                            let direct = induce(ty, ambient, &base, blocks.parts()).unwrap();
                            assert_eq!(
                                direct.partition().size(),
                                ty.partition_size(ambient),
                                "induced total must match the ambient size"
                            );
                            for order in permutations(blocks.parts()) {
                                let mut cur = base.clone();
                                let mut rank = base_rank;
                                for k in order {
                                    rank += k;
                                    cur = induce(ty, rank, &cur, &[k]).unwrap();
                                }
                                assert_eq!(
                                    cur.partition(),
                                    direct.partition(),
                                    "staging differs: {} ambient {} base {} blocks {}",
                                    ty,
                                    ambient,
                                    base,
                                    blocks
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn triangular_roundtrip_m_up_to_4() {
        for ty in [ClassicalType::B, ClassicalType::C, ClassicalType::D] {
            for m in 1..=4u32 {
                let part = triangular_partition(ty, m).unwrap();
                let rank = ty.rank_for_size(part.size()).unwrap();
                let o = Orbit::new(ty, rank, part, None).unwrap();
                let levi = triangular_levi(&o).unwrap();
                levi.validate(ty, rank).unwrap();
                let base = Orbit::zero(ty, levi.residual_rank);
                let back = induce(ty, rank, &base, &levi.gl_blocks).unwrap();
                assert_eq!(back.partition(), o.partition(), "{ty} m={m}");
            }
        }
    }

    #[test]
    fn cuspidality_examples() {
        let bound = DEFAULT_CUSPIDAL_RANK_BOUND;
        assert!(!is_cuspidal(&orb(ClassicalType::B, 2, &[3, 1, 1]), bound).unwrap());
        assert!(is_cuspidal(&orb(ClassicalType::B, 2, &[2, 2, 1]), bound).unwrap());
        for ty in [
            ClassicalType::A,
            ClassicalType::B,
            ClassicalType::C,
            ClassicalType::D,
        ] {
            for n in 1..=4u32 {
                assert!(
                    !is_cuspidal(&Orbit::principal(ty, n), bound).unwrap(),
                    "principal {ty}{n} is induced"
                );
            }
        }
        let too_big = Orbit::zero(ClassicalType::B, 7);
        assert!(matches!(
            is_cuspidal(&too_big, bound),
            Err(OrbitError::BoundExceeded { .. })
        ));
        let pres = inducing_presentations(&orb(ClassicalType::B, 2, &[3, 1, 1]), bound).unwrap();
        assert!(pres
            .iter()
            .any(|pr| pr.block == 2 && pr.base.rank() == 0 && pr.gl_orbit == p(&[1, 1])));
        assert!(format!("{}", pres[0]).contains("gl("));
    }

    #[test]
    fn completion_examples() {
        let b = orb(ClassicalType::B, 2, &[3, 1, 1]);
        let (blocks, target) = complete_to_triangular(&b, 12).unwrap().unwrap();
        assert!(blocks.is_empty());
        assert_eq!(target.partition(), b.partition());

        let so1 = Orbit::zero(ClassicalType::B, 0);
        let (blocks, target) = complete_to_triangular(&so1, 12).unwrap().unwrap();
        assert_eq!(blocks, vec![2]);
        assert_eq!(target.partition(), &p(&[3, 1, 1]));

        let hard = orb(ClassicalType::B, 3, &[5, 1, 1]);
        assert_eq!(complete_to_triangular(&hard, 12).unwrap(), None);

        let not_st = orb(ClassicalType::B, 3, &[3, 3, 1]);
        assert!(matches!(
            complete_to_triangular(&not_st, 4),
            Err(OrbitError::NotStablyTrivial(_))
        ));
    }

    #[test]
    fn labels_are_validated() {
        assert!(Orbit::new(ClassicalType::B, 2, p(&[5]), Some(VeryEvenLabel::I)).is_err());
        assert!(Orbit::new(ClassicalType::D, 2, p(&[3, 1]), Some(VeryEvenLabel::I)).is_err());
        assert!(Orbit::new(ClassicalType::D, 2, p(&[2, 2]), Some(VeryEvenLabel::II)).is_ok());
    }
}
