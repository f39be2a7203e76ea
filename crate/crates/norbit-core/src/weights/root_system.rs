//! Classical root systems in the orthonormal e-basis.

use alloc::vec::Vec;

use super::{dot, WeightError};
use crate::orbit::ClassicalType;
use crate::Rat;

/// A classical root system with its standard coordinates: type A_n lives
/// in n+1 gl coordinates, B/C/D_n in n.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: ClassicalType,
    rank: u32,
    coords: usize,
    positive_roots: Vec<Vec<Rat>>,
    simple_roots: Vec<Vec<Rat>>,
    fundamental_weights: Vec<Vec<Rat>>,
    rho: Vec<Rat>,
}

fn basis_vec(coords: usize, entries: &[(usize, Rat)]) -> Vec<Rat> {
    let mut v = alloc::vec![Rat::from_integer(0); coords];
    for &(i, x) in entries {
        v[i] = x;
    }
    v
}

impl RootSystem {
    pub fn new(ty: ClassicalType, rank: u32) -> RootSystem {
        let n = rank as usize;
        let one = Rat::from_integer(1);
        let coords = if ty == ClassicalType::A { n + 1 } else { n };
        let mut positive = Vec::new();
        match ty {
            ClassicalType::A => {
                for i in 0..coords {
                    for j in (i + 1)..coords {
                        positive.push(basis_vec(coords, &[(i, one), (j, -one)]));
                    }
                }
            }
            ClassicalType::B => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        positive.push(basis_vec(coords, &[(i, one), (j, -one)]));
                        positive.push(basis_vec(coords, &[(i, one), (j, one)]));
                    }
                    positive.push(basis_vec(coords, &[(i, one)]));
                }
            }
            ClassicalType::C => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        positive.push(basis_vec(coords, &[(i, one), (j, -one)]));
                        positive.push(basis_vec(coords, &[(i, one), (j, one)]));
                    }
                    positive.push(basis_vec(coords, &[(i, one + one)]));
                }
            }
            ClassicalType::D => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        positive.push(basis_vec(coords, &[(i, one), (j, -one)]));
                        positive.push(basis_vec(coords, &[(i, one), (j, one)]));
                    }
                }
            }
        }

        let mut simple = Vec::new();
        if coords >= 1 {
            let chain = if ty == ClassicalType::A {
                coords - 1
            } else {
                n.saturating_sub(1)
            };
            for i in 0..chain {
                simple.push(basis_vec(coords, &[(i, one), (i + 1, -one)]));
            }
            match ty {
                ClassicalType::A => {}
                ClassicalType::B => {
                    if n >= 1 {
                        simple.push(basis_vec(coords, &[(n - 1, one)]));
                    }
                }
                ClassicalType::C => {
                    if n >= 1 {
                        simple.push(basis_vec(coords, &[(n - 1, one + one)]));
                    }
                }
                ClassicalType::D => {
                    // so(2) has no roots; so(4) gets the second null node
                    if n >= 2 {
                        simple.push(basis_vec(coords, &[(n - 2, one), (n - 1, one)]));
                    }
                }
            }
        }

        let half = Rat::new(1, 2);
        let mut rho = alloc::vec![Rat::from_integer(0); coords];
        for r in &positive {
            for (i, x) in r.iter().enumerate() {
                rho[i] += *x * half;
            }
        }

        let fundamental_weights = fundamental(ty, n, coords);

        RootSystem {
            ty,
            rank,
            coords,
            positive_roots: positive,
            simple_roots: simple,
            fundamental_weights,
            rho,
        }
    }

    pub fn ty(&self) -> ClassicalType {
        self.ty
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Number of e-basis coordinates a weight carries.
    pub fn coords(&self) -> usize {
        self.coords
    }

    pub fn positive_roots(&self) -> &[Vec<Rat>] {
        &self.positive_roots
    }

    pub fn simple_roots(&self) -> &[Vec<Rat>] {
        &self.simple_roots
    }

    pub fn fundamental_weights(&self) -> &[Vec<Rat>] {
        &self.fundamental_weights
    }

    pub fn rho(&self) -> &[Rat] {
        &self.rho
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>().max(1);
        match self.ty {
            ClassicalType::A => fact(n + 1),
            ClassicalType::B | ClassicalType::C => fact(n) << n,
            ClassicalType::D => {
                if n == 0 {
                    1
                } else {
                    fact(n) << (n - 1)
                }
            }
        }
    }

    /// Pairing with the coroot of `root`.
    pub fn coroot_pairing(&self, w: &[Rat], root: &[Rat]) -> Rat {
        let two = Rat::from_integer(2);
        two * dot(w, root) / dot(root, root)
    }

    pub fn check_coords(&self, w: &[Rat]) -> Result<(), WeightError> {
        if w.len() != self.coords {
            return Err(WeightError::WrongCoordinateCount {
                expected: self.coords,
                got: w.len(),
            });
        }
        Ok(())
    }

    /// Dominant integral means every simple coroot pairing is a
    /// nonnegative integer.
    pub fn is_dominant_integral(&self, w: &[Rat]) -> bool {
        w.len() == self.coords
            && self.simple_roots.iter().all(|a| {
                let p = self.coroot_pairing(w, a);
                p >= Rat::from_integer(0) && p.is_integer()
            })
    }

    /// The dominant Weyl-chamber representative of a weight.
    pub fn dominant_representative(&self, w: &[Rat]) -> Vec<Rat> {
        let zero = Rat::from_integer(0);
        let mut v = w.to_vec();
        match self.ty {
            ClassicalType::A => v.sort_by(|a, b| b.cmp(a)),
            ClassicalType::B | ClassicalType::C => {
                for x in v.iter_mut() {
                    if *x < zero {
                        *x = -*x;
                    }
                }
                v.sort_by(|a, b| b.cmp(a));
            }
            ClassicalType::D => {
                let mut neg = 0usize;
                let mut has_zero = false;
                for x in v.iter_mut() {
                    if *x < zero {
                        *x = -*x;
                        neg += 1;
                    } else if *x == zero {
                        has_zero = true;
                    }
                }
                v.sort_by(|a, b| b.cmp(a));
                // odd sign flips move the last coordinate back below zero
                if neg % 2 == 1 && !has_zero {
                    let last = v.len() - 1;
                    v[last] = -v[last];
                }
            }
        }
        v
    }

    /// Full Weyl orbit of a weight: permutations, plus sign changes in
    /// B/C (even sign changes in D).
    pub fn weyl_orbit(&self, w: &[Rat]) -> Vec<Vec<Rat>> {
        use alloc::collections::BTreeSet;
        let zero = Rat::from_integer(0);
        let mut sign_patterns: Vec<Vec<Rat>> = alloc::vec![w.to_vec()];
        match self.ty {
            ClassicalType::A => {}
            ClassicalType::B | ClassicalType::C | ClassicalType::D => {
                let mut acc: BTreeSet<Vec<Rat>> = BTreeSet::new();
                let n = w.len();
                let even_only = self.ty == ClassicalType::D;
                let mut stack = alloc::vec![(Vec::<Rat>::new(), 0usize, 0usize)];
                while let Some((prefix, i, flips)) = stack.pop() {
                    if i == n {
                        if !even_only || flips % 2 == 0 || w.contains(&zero) {
                            // zero entries absorb the flip parity
                            acc.insert(prefix);
                        }
                        continue;
                    }
                    let mut keep = prefix.clone();
                    keep.push(w[i]);
                    stack.push((keep, i + 1, flips));
                    if w[i] != zero {
                        let mut flip = prefix;
                        flip.push(-w[i]);
                        stack.push((flip, i + 1, flips + 1));
                    }
                }
                sign_patterns = acc.into_iter().collect();
            }
        }
        let mut orbit: BTreeSet<Vec<Rat>> = BTreeSet::new();
        for pat in sign_patterns {
            permute_into(&pat, &mut orbit);
        }
        orbit.into_iter().collect()
    }
}

fn permute_into(v: &[Rat], acc: &mut alloc::collections::BTreeSet<Vec<Rat>>) {
    let mut sorted = v.to_vec();
    sorted.sort();
    // lexicographic next_permutation walk over the multiset
    loop {
        acc.insert(sorted.clone());
        // find the rightmost ascent
        let n = sorted.len();
        if n < 2 {
            return;
        }
        let mut i = n - 1;
        while i > 0 && sorted[i - 1] >= sorted[i] {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        let mut j = n - 1;
        while sorted[j] <= sorted[i - 1] {
            j -= 1;
        }
        sorted.swap(i - 1, j);
        sorted[i..].reverse();
    }
}

/// Fundamental weights in e-coordinates.
fn fundamental(ty: ClassicalType, n: usize, coords: usize) -> Vec<Vec<Rat>> {
    let one = Rat::from_integer(1);
    let half = Rat::new(1, 2);
    let mut out = Vec::new();
    match ty {
        ClassicalType::A => {
            // e_1+..+e_i minus the balancing multiple of the full sum
            for i in 1..coords {
                let c = Rat::new(i as i64, coords as i64);
                let mut w = alloc::vec![-c; coords];
                for x in w.iter_mut().take(i) {
                    *x += one;
                }
                out.push(w);
            }
        }
        ClassicalType::B => {
            for i in 1..n {
                let mut w = alloc::vec![Rat::from_integer(0); coords];
                for x in w.iter_mut().take(i) {
                    *x = one;
                }
                out.push(w);
            }
            if n >= 1 {
                out.push(alloc::vec![half; coords]);
            }
        }
        ClassicalType::C => {
            for i in 1..=n {
                let mut w = alloc::vec![Rat::from_integer(0); coords];
                for x in w.iter_mut().take(i) {
                    *x = one;
                }
                out.push(w);
            }
        }
        ClassicalType::D => {
            for i in 1..=n.saturating_sub(2) {
                let mut w = alloc::vec![Rat::from_integer(0); coords];
                for x in w.iter_mut().take(i) {
                    *x = one;
                }
                out.push(w);
            }
            if n >= 2 {
                let mut spin_minus = alloc::vec![half; coords];
                spin_minus[n - 1] = -half;
                out.push(spin_minus);
                out.push(alloc::vec![half; coords]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n)
    }

    #[test]
    fn counts_and_rho() {
        let b2 = RootSystem::new(ClassicalType::B, 2);
        assert_eq!(b2.positive_roots().len(), 4);
        assert_eq!(b2.simple_roots().len(), 2);
        assert_eq!(b2.rho(), &[Rat::new(3, 2), Rat::new(1, 2)]);

        let c2 = RootSystem::new(ClassicalType::C, 2);
        assert_eq!(c2.positive_roots().len(), 4);
        assert_eq!(c2.rho(), &[rat(2), rat(1)]);

        let a2 = RootSystem::new(ClassicalType::A, 2);
        assert_eq!(a2.positive_roots().len(), 3);
        assert_eq!(a2.coords(), 3);
        assert_eq!(a2.rho(), &[rat(1), rat(0), rat(-1)]);

        let d4 = RootSystem::new(ClassicalType::D, 4);
        assert_eq!(d4.positive_roots().len(), 12);
        assert_eq!(d4.simple_roots().len(), 4);
        assert_eq!(d4.rho(), &[rat(3), rat(2), rat(1), rat(0)]);

        // rho equals the half-sum by construction; cross-check coroot pairings
        for rs in [&b2, &c2, &d4] {
            for a in rs.simple_roots() {
                assert_eq!(rs.coroot_pairing(rs.rho(), a), rat(1));
            }
        }

        // so(2) is a torus
        let d1 = RootSystem::new(ClassicalType::D, 1);
        assert!(d1.positive_roots().is_empty());
        assert!(d1.simple_roots().is_empty());
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(RootSystem::new(ClassicalType::A, 2).weyl_order(), 6);
        assert_eq!(RootSystem::new(ClassicalType::B, 2).weyl_order(), 8);
        assert_eq!(RootSystem::new(ClassicalType::C, 3).weyl_order(), 48);
        assert_eq!(RootSystem::new(ClassicalType::D, 4).weyl_order(), 192);
    }

    #[test]
    fn dominance_tests() {
        let b2 = RootSystem::new(ClassicalType::B, 2);
        assert!(b2.is_dominant_integral(&[rat(2), rat(1)]));
        assert!(!b2.is_dominant_integral(&[rat(1), rat(2)]));
        assert!(b2.is_dominant_integral(&[Rat::new(1, 2), Rat::new(1, 2)]));
        assert!(!b2.is_dominant_integral(&[Rat::new(1, 2), rat(0)]));

        let d3 = RootSystem::new(ClassicalType::D, 3);
        assert!(d3.is_dominant_integral(&[rat(1), rat(1), rat(-1)]));
        assert!(!d3.is_dominant_integral(&[rat(1), rat(-1), rat(-1)]));
    }

    #[test]
    fn orbits_and_representatives() {
        let c2 = RootSystem::new(ClassicalType::C, 2);
        let orbit = c2.weyl_orbit(&[rat(1), rat(0)]);
        assert_eq!(orbit.len(), 4);
        assert_eq!(
            c2.dominant_representative(&[rat(0), rat(-1)]),
            vec![rat(1), rat(0)]
        );

        let d2 = RootSystem::new(ClassicalType::D, 2);
        // even sign changes only: (1,1) has orbit {(1,1),(-1,-1),(1,-1)?...}
        let orbit = d2.weyl_orbit(&[rat(1), rat(1)]);
        assert_eq!(orbit.len(), 2);
        assert!(orbit.contains(&vec![rat(1), rat(1)]));
        assert!(orbit.contains(&vec![rat(-1), rat(-1)]));
        assert_eq!(
            d2.dominant_representative(&[rat(-1), rat(-1)]),
            vec![rat(1), rat(1)]
        );
        assert_eq!(
            d2.dominant_representative(&[rat(-1), rat(1)]),
            vec![rat(1), rat(-1)]
        );

        let a1 = RootSystem::new(ClassicalType::A, 1);
        let orbit = a1.weyl_orbit(&[rat(1), rat(0)]);
        assert_eq!(orbit.len(), 2);
    }
}
