//! Seeded samplers drawing random points from a nilpotent orbit, as flat
//! coordinate vectors with attached torus weights.

use norbit_core::Partition;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::matrix::Mat;
use super::VerifyError;

/// A realization of one orbit: the nilpotent representative, the
/// independent matrix coordinates and their torus weights.
pub trait OrbitSampler {
    /// Number of independent coordinates.
    fn coords(&self) -> usize;

    /// Torus weight of each coordinate, as an integer vector.
    fn weights(&self) -> &[Vec<i64>];

    /// One random orbit point as independent-coordinate values.
    fn sample(&self, rng: &mut ChaCha8Rng) -> Vec<f64>;

    fn rng(&self, seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }
}

/// Conjugation orbit of a Jordan matrix inside gl(n): points g e g^{-1}
/// for random invertible g with entries uniform in [-1, 1]. Coordinates
/// are all n^2 entries; entry (i, j) has weight e_i - e_j.
pub struct GlOrbitSampler {
    n: usize,
    e: Mat,
    weights: Vec<Vec<i64>>,
}

impl GlOrbitSampler {
    pub fn new(partition: &Partition) -> GlOrbitSampler {
        let n = partition.size() as usize;
        let mut e = Mat::zeros(n);
        let mut at = 0usize;
        for &part in partition.parts() {
            for i in 0..(part as usize - 1) {
                e.set(at + i, at + i + 1, 1.0);
            }
            at += part as usize;
        }
        let mut weights = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut w = vec![0i64; n];
                w[i] += 1;
                w[j] -= 1;
                weights.push(w);
            }
        }
        GlOrbitSampler { n, e, weights }
    }

    pub fn nilpotent(&self) -> &Mat {
        &self.e
    }
}

impl OrbitSampler for GlOrbitSampler {
    fn coords(&self) -> usize {
        self.n * self.n
    }

    fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        let n = self.n;
        loop {
            let mut g = Mat::zeros(n);
            for i in 0..n {
                for j in 0..n {
                    g.set(i, j, rng.random_range(-1.0..1.0));
                }
            }
            let Some(ginv) = g.inverse() else { continue };
            let x = g.mul(&self.e).mul(&ginv);
            return x.a;
        }
    }
}

/// Conjugation orbit inside so(N) for the split symmetric form (the
/// antidiagonal), N = 2n+1: points g e g^{-1} with g = exp(X) for random
/// X in so(N). Coordinates are the entries strictly above the
/// antidiagonal; the diagonal torus gives entry (i, j) the weight
/// w_i - w_j with w = (e_1, ..., e_n, 0, -e_n, ..., -e_1).
///
/// The representative is assembled from one chain per odd part with odd
/// multiplicity and one doubled chain per remaining pair of equal parts.
/// Partitions needing more than one standalone odd chain are refused.
pub struct SoOrbitSampler {
    size: usize,
    rank: usize,
    e: Mat,
    coords: Vec<(usize, usize)>,
    weights: Vec<Vec<i64>>,
}

impl SoOrbitSampler {
    pub fn new(partition: &Partition) -> Result<SoOrbitSampler, VerifyError> {
        let size = partition.size() as usize;
        if size.is_multiple_of(2) {
            return Err(VerifyError::UnsupportedOrbit(format!(
                "so sampler needs an odd total, got {size}"
            )));
        }
        let rank = size / 2;

        // split parts into standalone odd chains and equal pairs
        let mut standalone: Vec<u32> = Vec::new();
        let mut pairs: Vec<u32> = Vec::new();
        for &v in partition.distinct_parts().iter() {
            let mult = partition.multiplicity(v);
            if v % 2 == 1 && mult % 2 == 1 {
                standalone.push(v);
                for _ in 0..(mult - 1) / 2 {
                    pairs.push(v);
                }
            } else {
                if v % 2 == 0 && mult % 2 == 1 {
                    return Err(VerifyError::UnsupportedOrbit(format!(
                        "({partition}) is not an orthogonal partition"
                    )));
                }
                for _ in 0..mult / 2 {
                    pairs.push(v);
                }
            }
        }
        if standalone.len() != 1 {
            return Err(VerifyError::UnsupportedOrbit(format!(
                "so sampler supports one standalone odd chain, ({partition}) has {}",
                standalone.len()
            )));
        }

        // slot assignment: fronts from the outside in, one self-paired middle
        let mut e = Mat::zeros(size);
        let middle = rank;
        let mut next_front = 0usize;
        {
            // standalone chain of length 2k+1 on front slots + the middle
            let k = (standalone[0] as usize - 1) / 2;
            let mut slots: Vec<usize> = Vec::with_capacity(2 * k + 1);
            for _ in 0..k {
                slots.push(next_front);
                next_front += 1;
            }
            slots.push(middle);
            for i in (0..k).rev() {
                slots.push(size - 1 - slots[i]);
            }
            for i in 0..k {
                e.set(slots[i], slots[i + 1], 1.0);
            }
            for i in k..2 * k {
                e.set(slots[i], slots[i + 1], -1.0);
            }
        }
        for &m in &pairs {
            // doubled chain (m, m) on front slots and their mirrors
            let m = m as usize;
            let mut slots: Vec<usize> = Vec::with_capacity(2 * m);
            for _ in 0..m {
                slots.push(next_front);
                next_front += 1;
            }
            for i in (0..m).rev() {
                slots.push(size - 1 - slots[i]);
            }
            for i in 0..m - 1 {
                e.set(slots[i], slots[i + 1], 1.0);
                e.set(slots[2 * m - 2 - i], slots[2 * m - 1 - i], -1.0);
            }
        }
        debug_assert_eq!(next_front, rank);
        debug_assert!(is_so_split(&e), "representative lies in so(N)");

        let mut coords = Vec::new();
        let mut weights = Vec::new();
        let torus: Vec<Vec<i64>> = (0..size)
            .map(|i| {
                let mut w = vec![0i64; rank];
                if i < rank {
                    w[i] = 1;
                } else if i > rank {
                    w[size - 1 - i] = -1;
                }
                w
            })
            .collect();
        for i in 0..size {
            for j in 0..size {
                if i + j < size - 1 {
                    coords.push((i, j));
                    let w: Vec<i64> = torus[i]
                        .iter()
                        .zip(torus[j].iter())
                        .map(|(a, b)| a - b)
                        .collect();
                    weights.push(w);
                }
            }
        }

        Ok(SoOrbitSampler {
            size,
            rank,
            e,
            coords,
            weights,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nilpotent(&self) -> &Mat {
        &self.e
    }
}

/// Split-orthogonal condition for the antidiagonal form:
/// A[i][j] = -A[N-1-j][N-1-i].
fn is_so_split(m: &Mat) -> bool {
    let n = m.n;
    for i in 0..n {
        for j in 0..n {
            if (m.get(i, j) + m.get(n - 1 - j, n - 1 - i)).abs() > 1e-12 {
                return false;
            }
        }
    }
    true
}

impl OrbitSampler for SoOrbitSampler {
    fn coords(&self) -> usize {
        self.coords.len()
    }

    fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        let n = self.size;
        let mut x = Mat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if i + j < n - 1 {
                    let v = rng.random_range(-1.0..1.0);
                    x.set(i, j, v);
                    x.set(n - 1 - j, n - 1 - i, -v);
                }
            }
        }
        let g = x.expm();
        let ginv = x.scale(-1.0).expm();
        let p = g.mul(&self.e).mul(&ginv);
        self.coords.iter().map(|&(i, j)| p.get(i, j)).collect()
    }
}
