//! Partitions and the partition arithmetic underlying orbit combinatorics:
//! transpose, dominance order, per-type validity and the X-collapse.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// The four classical families.
///
/// Rank `n` corresponds to `gl(n+1)` (A), `so(2n+1)` (B), `sp(2n)` (C) and
/// `so(2n)` (D). Rank 0 is allowed so that induction bases like `so(1)` and
/// `sp(0)` can be written down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassicalType {
    A,
    B,
    C,
    D,
}

impl ClassicalType {
    /// Size of the partitions classifying nilpotent orbits at rank `n`.
    pub fn partition_size(self, rank: u32) -> u32 {
        match self {
            ClassicalType::A => rank + 1,
            ClassicalType::B => 2 * rank + 1,
            ClassicalType::C | ClassicalType::D => 2 * rank,
        }
    }

    /// Inverse of [`partition_size`]: the rank whose partitions have total `size`.
    pub fn rank_for_size(self, size: u32) -> Option<u32> {
        match self {
            ClassicalType::A => size.checked_sub(1),
            ClassicalType::B => {
                if size % 2 == 1 {
                    Some(size / 2)
                } else {
                    None
                }
            }
            ClassicalType::C | ClassicalType::D => {
                if size.is_multiple_of(2) {
                    Some(size / 2)
                } else {
                    None
                }
            }
        }
    }

    pub fn letter(self) -> char {
        match self {
            ClassicalType::A => 'A',
            ClassicalType::B => 'B',
            ClassicalType::C => 'C',
            ClassicalType::D => 'D',
        }
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for ClassicalType {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(ClassicalType::A),
            "B" | "b" => Ok(ClassicalType::B),
            "C" | "c" => Ok(ClassicalType::C),
            "D" | "d" => Ok(ClassicalType::D),
            other => Err(PartitionError::BadType(String::from(other))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    /// Parts not weakly decreasing or not positive.
    NotSorted,
    /// Operation needs two partitions of equal size.
    SizeMismatch {
        left: u32,
        right: u32,
    },
    /// Collapse requested for a size of the wrong parity.
    SizeParity {
        ty: ClassicalType,
        size: u32,
    },
    /// Box removal from the empty partition.
    Empty,
    /// Unparseable partition or type string.
    Parse(String),
    BadType(String),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::NotSorted => write!(f, "parts must be positive and weakly decreasing"),
            PartitionError::SizeMismatch { left, right } => {
                write!(f, "partition sizes differ: {left} vs {right}")
            }
            PartitionError::SizeParity { ty, size } => {
                write!(f, "size {size} has the wrong parity for type {ty}")
            }
            PartitionError::Empty => write!(f, "cannot remove a box from the empty partition"),
            PartitionError::Parse(s) => write!(f, "cannot parse partition from {s:?}"),
            PartitionError::BadType(s) => write!(f, "unknown classical type {s:?}"),
        }
    }
}

/// A partition: weakly decreasing positive integers. Zero parts are never
/// stored; the empty partition (size 0) is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotSorted);
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from arbitrary entries: sorts descending, drops zeros.
    pub fn from_unsorted(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The column partition of a single row of length `n` is `1^n`.
    pub fn rectangle(part: u32, count: usize) -> Self {
        if part == 0 {
            return Partition::empty();
        }
        Partition {
            parts: alloc::vec![part; count],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part, zero-padded beyond the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::new();
        for &p in &self.parts {
            if out.last() != Some(&p) {
                out.push(p);
            }
        }
        out
    }

    /// Conjugate partition: `result[j] = #{i : parts[i] >= j+1}`.
    pub fn transpose(&self) -> Partition {
        let mut cols = Vec::new();
        let mut j = 1;
        loop {
            let c = self.parts.iter().filter(|&&p| p >= j).count() as u32;
            if c == 0 {
                break;
            }
            cols.push(c);
            j += 1;
        }
        Partition { parts: cols }
    }

    /// Dominance order: true iff every partial sum of `self` is >= the
    /// corresponding partial sum of `other`. Requires equal sizes.
    pub fn dominates(&self, other: &Partition) -> Result<bool, PartitionError> {
        if self.size() != other.size() {
            return Err(PartitionError::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let n = self.len().max(other.len());
        let mut acc_self = 0u32;
        let mut acc_other = 0u32;
        for i in 0..n {
            acc_self += self.part(i);
            acc_other += other.part(i);
            if acc_self < acc_other {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Removes one box from a largest part, re-sorting.
    pub fn remove_box_largest(&self) -> Result<Partition, PartitionError> {
        if self.parts.is_empty() {
            return Err(PartitionError::Empty);
        }
        let mut parts = self.parts.clone();
        parts[0] -= 1;
        Ok(Partition::from_unsorted(parts))
    }

    /// Adds one box to a largest part.
    pub fn add_box_largest(&self) -> Partition {
        let mut parts = self.parts.clone();
        if parts.is_empty() {
            parts.push(1);
        } else {
            parts[0] += 1;
        }
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses comma-separated decreasing integers, e.g. `"3,1,1"`. The empty
    /// string is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| PartitionError::Parse(String::from(s)))?;
            if p == 0 {
                return Err(PartitionError::Parse(String::from(s)));
            }
            parts.push(p);
        }
        Partition::new(parts).map_err(|_| PartitionError::Parse(String::from(s)))
    }
}

/// Does `p` label a nilpotent orbit of the rank-`n` algebra of type `ty`?
///
/// A: any partition of n+1. B: partition of 2n+1, even parts with even
/// multiplicity. C: partition of 2n, odd parts with even multiplicity.
/// D: partition of 2n, even parts with even multiplicity.
pub fn is_valid(ty: ClassicalType, rank: u32, p: &Partition) -> bool {
    if p.size() != ty.partition_size(rank) {
        return false;
    }
    parity_ok(ty, p)
}

/// The multiplicity condition alone, without the size check.
pub fn parity_ok(ty: ClassicalType, p: &Partition) -> bool {
    match ty {
        ClassicalType::A => true,
        ClassicalType::B | ClassicalType::D => p
            .distinct_parts()
            .iter()
            .all(|&v| v % 2 == 1 || p.multiplicity(v).is_multiple_of(2)),
        ClassicalType::C => p
            .distinct_parts()
            .iter()
            .all(|&v| v % 2 == 0 || p.multiplicity(v).is_multiple_of(2)),
    }
}

/// X-collapse: the dominance-greatest valid partition of the same size lying
/// below `p`. Type A is the identity; the size parity must match the type.
///
/// Greedy repair: take the largest bad-parity part with odd multiplicity,
/// move one box from its last occurrence down to the first part that is at
/// least two smaller (or a new part of size 1), and repeat. Certified against
/// the brute-force definition in tests.
pub fn collapse(ty: ClassicalType, p: &Partition) -> Result<Partition, PartitionError> {
    if ty == ClassicalType::A {
        return Ok(p.clone());
    }
    let size = p.size();
    let odd_total = matches!(ty, ClassicalType::B);
    if (size % 2 == 1) != odd_total {
        return Err(PartitionError::SizeParity { ty, size });
    }
    let bad_parity = match ty {
        ClassicalType::B | ClassicalType::D => 0,
        ClassicalType::C => 1,
        ClassicalType::A => unreachable!(),
    };
    let mut parts = p.parts().to_vec();
    loop {
        let offender = parts
            .iter()
            .copied()
            .filter(|&v| v % 2 == bad_parity)
            .find(|&v| parts.iter().filter(|&&x| x == v).count() % 2 == 1);
        let q = match offender {
            None => break,
            Some(q) => q,
        };
        // Shrink the last occurrence of q; parts stay sorted since the next
        // part is strictly smaller.
        let last = parts.iter().rposition(|&x| x == q).unwrap();
        parts[last] -= 1;
        // Drop the box onto the first part that can take it without passing q-1.
        match parts.iter().position(|&x| x + 2 <= q) {
            Some(i) => parts[i] += 1,
            None => parts.push(1),
        }
        parts.retain(|&x| x > 0);
    }
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// All partitions of `n`, parts bounded by `max`.
    pub(crate) fn partitions_of(n: u32, max: u32) -> Vec<Partition> {
        if n == 0 {
            return vec![Partition::empty()];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for rest in partitions_of(n - first, first) {
                let mut parts = vec![first];
                parts.extend_from_slice(rest.parts());
                out.push(Partition::new(parts).unwrap());
            }
        }
        out
    }

    /// Brute-force collapse: dominance maximum over all valid partitions below `p`.
    fn collapse_oracle(ty: ClassicalType, p: &Partition) -> Partition {
        let candidates: Vec<Partition> = partitions_of(p.size(), p.size())
            .into_iter()
            .filter(|q| parity_ok(ty, q) && p.dominates(q).unwrap())
            .collect();
        let mut best: Option<Partition> = None;
        for c in candidates {
            best = match best {
                None => Some(c),
                Some(b) => {
                    if c.dominates(&b).unwrap() {
                        Some(c)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best.expect("a valid partition below p always exists")
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[5]).transpose(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(p(&[3, 1, 1]).transpose(), p(&[3, 1, 1]));
        // Frozen from the column-count oracle: columns of (4,2) are 2,2,1,1.
        let q = p(&[4, 2]);
        let mut cols = Vec::new();
        for j in 1..=4 {
            cols.push(q.parts().iter().filter(|&&x| x >= j).count() as u32);
        }
        cols.retain(|&c| c > 0);
        assert_eq!(q.transpose().parts(), &cols[..]);
        assert_eq!(q.transpose(), p(&[2, 2, 1, 1]));
    }

    #[test]
    fn transpose_involution_exhaustive() {
        for n in 0..=30u32 {
            for q in partitions_of(n, n) {
                assert_eq!(q.transpose().transpose(), q, "n={n} q={q}");
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[5]).dominates(&p(&[3, 1, 1])).unwrap());
        // partial sums 3,4,5 vs 2,4,5
        assert!(p(&[3, 1, 1]).dominates(&p(&[2, 2, 1])).unwrap());
        // first partial sum 2 < 3
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 1, 1, 1])).unwrap());
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])).err().is_none());
        assert!(matches!(
            p(&[3]).dominates(&p(&[2, 2])),
            Err(PartitionError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn dominance_is_partial_order() {
        for n in 1..=12u32 {
            let all = partitions_of(n, n);
            for a in &all {
                assert!(a.dominates(a).unwrap());
                for b in &all {
                    if a.dominates(b).unwrap() && b.dominates(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if a.dominates(b).unwrap() && b.dominates(c).unwrap() {
                            assert!(a.dominates(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid(ClassicalType::B, 2, &p(&[3, 1, 1])));
        assert!(is_valid(ClassicalType::C, 2, &p(&[2, 1, 1])));
        assert!(!is_valid(ClassicalType::B, 2, &p(&[3, 2])));
        assert!(is_valid(ClassicalType::A, 2, &p(&[2, 1])));
        assert!(!is_valid(ClassicalType::A, 2, &p(&[2, 2])));
        assert!(is_valid(ClassicalType::D, 2, &p(&[2, 2])));
        assert!(!is_valid(ClassicalType::D, 2, &p(&[2, 1, 1])));
        // rank-0 edge algebras
        assert!(is_valid(ClassicalType::B, 0, &p(&[1])));
        assert!(is_valid(ClassicalType::C, 0, &Partition::empty()));
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(
            collapse(ClassicalType::B, &p(&[3, 2])).unwrap(),
            p(&[3, 1, 1])
        );
        assert_eq!(
            collapse(ClassicalType::C, &p(&[3, 3, 3, 1])).unwrap(),
            p(&[3, 3, 2, 2])
        );
        // idempotence on valid input
        assert_eq!(
            collapse(ClassicalType::B, &p(&[3, 1, 1])).unwrap(),
            p(&[3, 1, 1])
        );
        assert_eq!(collapse(ClassicalType::A, &p(&[3, 2])).unwrap(), p(&[3, 2]));
        assert!(matches!(
            collapse(ClassicalType::B, &p(&[2, 2])),
            Err(PartitionError::SizeParity { .. })
        ));
        assert!(matches!(
            collapse(ClassicalType::C, &p(&[3, 2])),
            Err(PartitionError::SizeParity { .. })
        ));
    }

    #[test]
    fn collapse_matches_brute_force_up_to_16() {
        for n in 1..=16u32 {
            for q in partitions_of(n, n) {
                for ty in [ClassicalType::B, ClassicalType::C, ClassicalType::D] {
                    let odd_total = ty == ClassicalType::B;
                    if (n % 2 == 1) != odd_total {
                        continue;
                    }
                    let got = collapse(ty, &q).unwrap();
                    let want = collapse_oracle(ty, &q);
                    assert_eq!(got, want, "ty={ty} q={q}");
                }
            }
        }
    }

    #[test]
    fn box_moves() {
        assert_eq!(p(&[3, 2, 2]).remove_box_largest().unwrap(), p(&[2, 2, 2]));
        assert_eq!(p(&[2, 2]).add_box_largest(), p(&[3, 2]));
        assert_eq!(p(&[1]).remove_box_largest().unwrap(), Partition::empty());
        assert!(matches!(
            Partition::empty().remove_box_largest(),
            Err(PartitionError::Empty)
        ));
        assert_eq!(Partition::empty().add_box_largest(), p(&[1]));
    }

    #[test]
    fn parse_and_print() {
        let q: Partition = "3,1,1".parse().unwrap();
        assert_eq!(q, p(&[3, 1, 1]));
        assert_eq!(alloc::format!("{q}"), "3,1,1");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
    }

    proptest! {
        #[test]
        fn transpose_involution_random(parts in proptest::collection::vec(1u32..12, 0..10)) {
            let q = Partition::from_unsorted(parts);
            prop_assert_eq!(q.transpose().transpose(), q);
        }

        #[test]
        fn collapse_is_valid_and_below(parts in proptest::collection::vec(1u32..10, 1..9)) {
            let q = Partition::from_unsorted(parts);
            for ty in [ClassicalType::B, ClassicalType::C, ClassicalType::D] {
                let odd_total = ty == ClassicalType::B;
                if (q.size() % 2 == 1) != odd_total {
                    continue;
                }
                let c = collapse(ty, &q).unwrap();
                prop_assert!(parity_ok(ty, &c));
                prop_assert!(q.dominates(&c).unwrap());
                prop_assert_eq!(collapse(ty, &c).unwrap(), c);
            }
        }
    }
}
