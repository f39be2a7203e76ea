//! One-sided Jacobi singular values and thresholded numeric rank.

/// Singular values of the matrix whose columns are given, descending.
/// Rows must be at least as numerous as columns.
pub fn singular_values(columns: &[Vec<f64>]) -> Vec<f64> {
    let mut cols: Vec<Vec<f64>> = columns.to_vec();
    let k = cols.len();
    if k == 0 {
        return Vec::new();
    }
    let eps = 1e-14;
    for _sweep in 0..60 {
        let mut rotated = false;
        for p in 0..k {
            for q in p + 1..k {
                let alpha: f64 = cols[p].iter().map(|x| x * x).sum();
                let beta: f64 = cols[q].iter().map(|x| x * x).sum();
                let gamma: f64 = cols[p].iter().zip(cols[q].iter()).map(|(x, y)| x * y).sum();
                if gamma.abs() <= eps * (alpha * beta).sqrt() || gamma == 0.0 {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..cols[p].len() {
                    let xp = cols[p][i];
                    let xq = cols[q][i];
                    cols[p][i] = c * xp - s * xq;
                    cols[q][i] = s * xp + c * xq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut sv: Vec<f64> = cols
        .iter()
        .map(|c| c.iter().map(|x| x * x).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}

/// Number of singular values above `tol` relative to the largest.
pub fn numeric_rank(columns: &[Vec<f64>], tol: f64) -> usize {
    let sv = singular_values(columns);
    let top = sv.first().copied().unwrap_or(0.0);
    if top <= 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > tol * top).count()
}
