//! Weyl dimension formula and Freudenthal weight multiplicities.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{add, dot, sub, RootSystem, WeightError};
use crate::Rat;

/// Default cap on the dimension of a computed weight diagram.
pub const DEFAULT_DIM_BOUND: u64 = 20_000;

/// The full weight diagram of one irreducible: every weight with its
/// multiplicity. Weyl-symmetric, highest weight has multiplicity 1, and
/// the multiplicities sum to the Weyl dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDiagram {
    highest: Vec<Rat>,
    mult: BTreeMap<Vec<Rat>, u64>,
}

impl WeightDiagram {
    pub fn highest(&self) -> &[Rat] {
        &self.highest
    }

    pub fn multiplicities(&self) -> &BTreeMap<Vec<Rat>, u64> {
        &self.mult
    }

    pub fn multiplicity(&self, w: &[Rat]) -> u64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.mult.values().sum()
    }

    /// Pointwise product diagram of two factors on disjoint coordinates.
    pub fn product(&self, other: &WeightDiagram) -> WeightDiagram {
        let mut mult = BTreeMap::new();
        for (w1, m1) in &self.mult {
            for (w2, m2) in &other.mult {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                mult.insert(w, m1 * m2);
            }
        }
        let mut highest = self.highest.clone();
        highest.extend_from_slice(&other.highest);
        WeightDiagram { highest, mult }
    }

    /// The trivial diagram on zero coordinates.
    pub fn unit() -> WeightDiagram {
        let mut mult = BTreeMap::new();
        mult.insert(Vec::new(), 1);
        WeightDiagram {
            highest: Vec::new(),
            mult,
        }
    }

    /// A one-weight diagram (a torus character).
    pub fn singleton(w: Vec<Rat>) -> WeightDiagram {
        let mut mult = BTreeMap::new();
        mult.insert(w.clone(), 1);
        WeightDiagram { highest: w, mult }
    }
}

/// Exact Weyl dimension of the irreducible with highest weight `lambda`.
pub fn weyl_dim(rs: &RootSystem, lambda: &[Rat]) -> Result<u64, WeightError> {
    rs.check_coords(lambda)?;
    if !rs.is_dominant_integral(lambda) {
        return Err(WeightError::NotDominantIntegral(lambda.to_vec()));
    }
    let shifted = add(lambda, rs.rho());
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for alpha in rs.positive_roots() {
        let a = dot(&shifted, alpha);
        let b = dot(rs.rho(), alpha);
        num *= i128::from(*a.numer()) * i128::from(*b.denom());
        den *= i128::from(*a.denom()) * i128::from(*b.numer());
        let g = gcd_i128(num.abs(), den.abs());
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den.abs(), 1);
    Ok((num / den) as u64)
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.max(1)
    } else {
        gcd_i128(b, a % b)
    }
}

/// Is `diff` a nonnegative integer combination of the simple roots?
fn in_positive_root_cone(rs: &RootSystem, diff: &[Rat]) -> bool {
    let zero = Rat::from_integer(0);
    let two = Rat::from_integer(2);
    let n = diff.len();
    let mut partial = Vec::with_capacity(n);
    let mut acc = zero;
    for d in diff {
        acc += *d;
        partial.push(acc);
    }
    let ok = |x: Rat| x >= zero && x.is_integer();
    match rs.ty() {
        crate::orbit::ClassicalType::A => {
            // coefficients are the partial sums; the total must vanish
            *partial.last().unwrap_or(&zero) == zero
                && partial[..n.saturating_sub(1)].iter().all(|&c| ok(c))
        }
        crate::orbit::ClassicalType::B => partial.iter().all(|&c| ok(c)),
        crate::orbit::ClassicalType::C => {
            partial[..n - 1].iter().all(|&c| ok(c)) && ok(partial[n - 1] / two)
        }
        crate::orbit::ClassicalType::D => {
            if n < 2 {
                return diff.iter().all(|&d| d == zero);
            }
            let s_head = partial[n - 2];
            let total = partial[n - 1];
            partial[..n.saturating_sub(2)].iter().all(|&c| ok(c))
                && ok((s_head - diff[n - 1]) / two)
                && ok(total / two)
        }
    }
}

/// All weights of the irreducible: breadth-first walk from the highest
/// weight along simple-root steps, kept when the dominant representative
/// still lies under `lambda`.
fn weight_support(rs: &RootSystem, lambda: &[Rat]) -> Vec<Vec<Rat>> {
    use alloc::collections::BTreeSet;
    let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
    let mut queue: Vec<Vec<Rat>> = alloc::vec![lambda.to_vec()];
    seen.insert(lambda.to_vec());
    while let Some(w) = queue.pop() {
        for alpha in rs.simple_roots() {
            let next = sub(&w, alpha);
            if seen.contains(&next) {
                continue;
            }
            let dom = rs.dominant_representative(&next);
            if in_positive_root_cone(rs, &sub(lambda, &dom)) {
                seen.insert(next.clone());
                queue.push(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// Freudenthal recursion: the full weight diagram of the irreducible with
/// highest weight `lambda`, refused above `dim_bound`.
pub fn weight_multiplicities(
    rs: &RootSystem,
    lambda: &[Rat],
    dim_bound: u64,
) -> Result<WeightDiagram, WeightError> {
    let dim = weyl_dim(rs, lambda)?;
    if dim > dim_bound {
        return Err(WeightError::BoundExceeded {
            dim,
            bound: dim_bound,
        });
    }

    let support = weight_support(rs, lambda);
    let mut dominants: Vec<Vec<Rat>> = support
        .iter()
        .filter(|w| rs.is_dominant_integral(w))
        .cloned()
        .collect();
    // shallowest first: sort by decreasing height of the weight itself
    let height = |w: &[Rat]| dot(w, rs.rho());
    dominants.sort_by_key(|w| core::cmp::Reverse(height(w)));

    let shifted_norm = {
        let s = add(lambda, rs.rho());
        dot(&s, &s)
    };
    let support_set: alloc::collections::BTreeSet<Vec<Rat>> = support.iter().cloned().collect();
    let mut dom_mult: BTreeMap<Vec<Rat>, u64> = BTreeMap::new();
    dom_mult.insert(lambda.to_vec(), 1);

    for mu in dominants.iter().skip(1) {
        let mut acc = Rat::from_integer(0);
        for alpha in rs.positive_roots() {
            let mut k = 1i64;
            loop {
                let mut w = mu.clone();
                for (i, a) in alpha.iter().enumerate() {
                    w[i] += Rat::from_integer(k) * *a;
                }
                if !support_set.contains(&w) {
                    break;
                }
                let dom = rs.dominant_representative(&w);
                let m = dom_mult.get(&dom).copied().unwrap_or(0);
                acc += Rat::from_integer(m as i64) * dot(&w, alpha);
                k += 1;
            }
        }
        let mu_shifted = add(mu, rs.rho());
        let denom = shifted_norm - dot(&mu_shifted, &mu_shifted);
        let m = Rat::from_integer(2) * acc / denom;
        debug_assert!(m.is_integer());
        dom_mult.insert(mu.clone(), *m.numer() as u64 / *m.denom() as u64);
    }

    let mut mult = BTreeMap::new();
    for w in support {
        let dom = rs.dominant_representative(&w);
        let m = dom_mult.get(&dom).copied().unwrap_or(0);
        if m > 0 {
            mult.insert(w, m);
        }
    }
    let diagram = WeightDiagram {
        highest: lambda.to_vec(),
        mult,
    };
    debug_assert_eq!(
        diagram.dimension(),
        dim,
        "diagram total is the Weyl dimension"
    );
    Ok(diagram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::ClassicalType;
    use alloc::vec;

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n)
    }

    #[test]
    fn weyl_dim_examples() {
        let a2 = RootSystem::new(ClassicalType::A, 2);
        assert_eq!(weyl_dim(&a2, &[rat(1), rat(0), rat(-1)]).unwrap(), 8);
        assert_eq!(weyl_dim(&a2, &[rat(0), rat(0), rat(0)]).unwrap(), 1);

        let c2 = RootSystem::new(ClassicalType::C, 2);
        assert_eq!(weyl_dim(&c2, &[rat(1), rat(0)]).unwrap(), 4);
        assert_eq!(weyl_dim(&c2, &[rat(1), rat(1)]).unwrap(), 5);
        assert_eq!(weyl_dim(&c2, &[rat(2), rat(0)]).unwrap(), 10);

        let b2 = RootSystem::new(ClassicalType::B, 2);
        assert_eq!(weyl_dim(&b2, &[rat(1), rat(0)]).unwrap(), 5);
        assert_eq!(weyl_dim(&b2, &[Rat::new(1, 2), Rat::new(1, 2)]).unwrap(), 4);

        assert!(matches!(
            weyl_dim(&c2, &[rat(0), rat(1)]),
            Err(WeightError::NotDominantIntegral(_))
        ));
    }

    #[test]
    fn small_diagrams() {
        // sl(2): V_2 has weights 2, 0, -2 each once
        let a1 = RootSystem::new(ClassicalType::A, 1);
        let d = weight_multiplicities(&a1, &[rat(1), rat(-1)], 100).unwrap();
        assert_eq!(d.dimension(), 3);
        assert_eq!(d.multiplicity(&[rat(1), rat(-1)]), 1);
        assert_eq!(d.multiplicity(&[rat(0), rat(0)]), 1);
        assert_eq!(d.multiplicity(&[rat(-1), rat(1)]), 1);

        // sl(3) adjoint: zero weight has multiplicity 2
        let a2 = RootSystem::new(ClassicalType::A, 2);
        let d = weight_multiplicities(&a2, &[rat(1), rat(0), rat(-1)], 100).unwrap();
        assert_eq!(d.dimension(), 8);
        assert_eq!(d.multiplicity(&[rat(0), rat(0), rat(0)]), 2);

        // sp(4) 5-dim: zero weight once
        let c2 = RootSystem::new(ClassicalType::C, 2);
        let d = weight_multiplicities(&c2, &[rat(1), rat(1)], 100).unwrap();
        assert_eq!(d.dimension(), 5);
        assert_eq!(d.multiplicity(&[rat(0), rat(0)]), 1);

        let bound = weight_multiplicities(&c2, &[rat(5), rat(5)], 10);
        assert!(matches!(bound, Err(WeightError::BoundExceeded { .. })));
    }

    /// Strictly positive height on every positive root: the pairing with a
    /// strictly decreasing positive vector.
    fn root_height(v: &[Rat]) -> Rat {
        let n = v.len();
        let mut acc = Rat::from_integer(0);
        for (i, x) in v.iter().enumerate() {
            acc += Rat::from_integer((n - i) as i64) * *x;
        }
        acc
    }

    /// Kostant partition function: the number of ways to write `target` as
    /// a nonnegative integer combination of the positive roots.
    fn kostant_count(roots: &[Vec<Rat>], target: &[Rat], from: usize) -> u64 {
        let zero = Rat::from_integer(0);
        if target.iter().all(|&x| x == zero) {
            return 1;
        }
        if from == roots.len() || root_height(target) < zero {
            return 0;
        }
        let mut total = 0;
        let mut t = target.to_vec();
        while root_height(&t) >= zero {
            total += kostant_count(roots, &t, from + 1);
            for (x, a) in t.iter_mut().zip(roots[from].iter()) {
                *x -= *a;
            }
        }
        total
    }

    /// Weyl group as (permutation, sign-flip mask) pairs with parity.
    fn weyl_elements(rs: &RootSystem) -> Vec<(Vec<usize>, Vec<bool>, i64)> {
        fn perms(n: usize) -> Vec<(Vec<usize>, i64)> {
            if n == 0 {
                return vec![(vec![], 1)];
            }
            let mut out = Vec::new();
            for (tail, sign) in perms(n - 1) {
                for slot in 0..n {
                    let mut p = tail.clone();
                    p.insert(slot, n - 1);
                    let moved = (n - 1 - slot) as i64;
                    out.push((p, sign * if moved % 2 == 0 { 1 } else { -1 }));
                }
            }
            out
        }
        let n = rs.coords();
        let mut out = Vec::new();
        let flips_allowed = !matches!(rs.ty(), ClassicalType::A);
        let masks = if flips_allowed { 1usize << n } else { 1 };
        for (p, psign) in perms(n) {
            for mask in 0..masks {
                let flip: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
                let fcount = flip.iter().filter(|&&b| b).count();
                if rs.ty() == ClassicalType::D && fcount % 2 == 1 {
                    continue;
                }
                let sign = psign * if fcount % 2 == 0 { 1 } else { -1 };
                out.push((p.clone(), flip, sign));
            }
        }
        out
    }

    fn apply(w: &(Vec<usize>, Vec<bool>, i64), v: &[Rat]) -> Vec<Rat> {
        let (p, flip, _) = w;
        let mut out = alloc::vec![Rat::from_integer(0); v.len()];
        for (i, &pi) in p.iter().enumerate() {
            out[i] = if flip[pi] { -v[pi] } else { v[pi] };
        }
        out
    }

    fn check_against_kostant(rs: &RootSystem, lambda: &[Rat]) {
        let weyl = weyl_elements(rs);
        let diagram = weight_multiplicities(rs, lambda, 200).unwrap();
        let shifted = add(lambda, rs.rho());
        for (mu, m) in diagram.multiplicities() {
            let mut expected: i64 = 0;
            let target_shift = add(mu, rs.rho());
            for w in &weyl {
                let image = apply(w, &shifted);
                let diff = sub(&image, &target_shift);
                if diff.iter().all(|x| x.is_integer()) {
                    expected += w.2 * kostant_count(rs.positive_roots(), &diff, 0) as i64;
                }
            }
            assert_eq!(expected, *m as i64, "lambda={lambda:?} mu={mu:?}");
        }
    }

    #[test]
    fn freudenthal_matches_kostant_on_sl2_exhaustive() {
        // every dominant lambda with dim <= 200, normalized to trailing zero
        let a1 = RootSystem::new(ClassicalType::A, 1);
        for a in 0..200i64 {
            check_against_kostant(&a1, &[rat(a), rat(0)]);
        }
    }

    #[test]
    fn freudenthal_matches_kostant_on_sl3_exhaustive() {
        let a2 = RootSystem::new(ClassicalType::A, 2);
        for a in 0..=20i64 {
            for b in 0..=a {
                let lambda = [rat(a), rat(b), rat(0)];
                if weyl_dim(&a2, &lambda).unwrap() <= 200 {
                    check_against_kostant(&a2, &lambda);
                }
            }
        }
    }

    #[test]
    fn freudenthal_matches_kostant_on_so5_and_so4() {
        let b2 = RootSystem::new(ClassicalType::B, 2);
        for a in 0..=6i64 {
            for b in 0..=a {
                for half in [0, 1] {
                    let lambda = [Rat::new(2 * a + half, 2), Rat::new(2 * b + half, 2)];
                    if weyl_dim(&b2, &lambda).unwrap() <= 120 {
                        check_against_kostant(&b2, &lambda);
                    }
                }
            }
        }
        // so(4) splits into two sl(2)s; even sign changes only
        let d2 = RootSystem::new(ClassicalType::D, 2);
        for a in 0..=6i64 {
            for b in -a..=a {
                let lambda = [rat(a), rat(b)];
                if weyl_dim(&d2, &lambda).unwrap() <= 120 {
                    check_against_kostant(&d2, &lambda);
                }
            }
        }
    }

    #[test]
    fn freudenthal_matches_kostant_on_sp4_exhaustive() {
        let c2 = RootSystem::new(ClassicalType::C, 2);
        for a in 0..=12i64 {
            for b in 0..=a {
                let lambda = [rat(a), rat(b)];
                if weyl_dim(&c2, &lambda).unwrap() <= 200 {
                    check_against_kostant(&c2, &lambda);
                }
            }
        }
    }

    #[test]
    fn diagrams_are_weyl_symmetric() {
        let c2 = RootSystem::new(ClassicalType::C, 2);
        let d = weight_multiplicities(&c2, &[rat(2), rat(1)], 200).unwrap();
        for (w, m) in d.multiplicities() {
            let dom = c2.dominant_representative(w);
            assert_eq!(d.multiplicity(&dom), *m);
        }
        assert_eq!(d.multiplicity(d.highest()), 1);
    }
}
