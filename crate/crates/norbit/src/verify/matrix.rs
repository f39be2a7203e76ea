//! Small dense matrix helpers for the numeric oracles.

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    pub n: usize,
    pub a: Vec<f64>,
}

impl Mat {
    pub fn zeros(n: usize) -> Mat {
        Mat {
            n,
            a: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n);
        for i in 0..n {
            m.a[i * n + i] = 1.0;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        let n = self.n;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.get(i, k);
                if aik == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] += aik * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn scale(&self, s: f64) -> Mat {
        Mat {
            n: self.n,
            a: self.a.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        Mat {
            n: self.n,
            a: self
                .a
                .iter()
                .zip(other.a.iter())
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.a.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Matrix exponential by scaling-and-squaring on the Taylor series.
    pub fn expm(&self) -> Mat {
        let norm = self.max_abs() * self.n as f64;
        let squarings = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as u32
        } else {
            0
        };
        let scaled = self.scale(1.0 / f64::powi(2.0, squarings as i32));
        let mut term = Mat::identity(self.n);
        let mut sum = Mat::identity(self.n);
        for k in 1..=20 {
            term = term.mul(&scaled).scale(1.0 / k as f64);
            sum = sum.add(&term);
            if term.max_abs() < 1e-300 {
                break;
            }
        }
        let mut out = sum;
        for _ in 0..squarings {
            out = out.mul(&out);
        }
        out
    }

    /// Inverse by Gauss-Jordan with partial pivoting; None when singular
    /// to working precision.
    pub fn inverse(&self) -> Option<Mat> {
        let n = self.n;
        let mut a = self.a.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let mut pivot = col;
            for r in col + 1..n {
                if a[r * n + col].abs() > a[pivot * n + col].abs() {
                    pivot = r;
                }
            }
            if a[pivot * n + col].abs() < 1e-12 {
                return None;
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                    inv.a.swap(col * n + j, pivot * n + j);
                }
            }
            let d = a[col * n + col];
            for j in 0..n {
                a[col * n + j] /= d;
                inv.a[col * n + j] /= d;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f == 0.0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] -= f * a[col * n + j];
                    inv.a[r * n + j] -= f * inv.a[col * n + j];
                }
            }
        }
        Some(inv)
    }
}
