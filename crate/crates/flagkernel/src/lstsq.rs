//! Dense least squares via Householder QR, sized for small design matrices.

use crate::error::{Error, Result};

pub(crate) struct LstsqSolution {
    pub coeffs: Vec<f64>,
    pub residual_norm: f64,
    /// Ratio of extreme |R| diagonal entries of the column-scaled matrix;
    /// a cheap condition estimate, reported with fit results.
    pub condition: f64,
}

/// Solves min ||A x - y||_2 for a tall matrix given as rows. Columns are
/// scaled to unit max-norm before factorization and the solution unscaled,
/// so wildly different column magnitudes (rho^k over a geometric grid) do
/// not poison the factorization.
pub(crate) fn solve_least_squares(rows: &[Vec<f64>], y: &[f64]) -> Result<LstsqSolution> {
    let m = rows.len();
    if m == 0 {
        return Err(Error::invalid("least squares needs at least one row"));
    }
    let n = rows[0].len();
    if n == 0 || rows.iter().any(|r| r.len() != n) || y.len() != m {
        return Err(Error::invalid("inconsistent least-squares dimensions"));
    }
    if m < n {
        return Err(Error::invalid(format!(
            "least squares is underdetermined: {m} rows, {n} columns"
        )));
    }

    let mut scale = vec![0f64; n];
    for row in rows {
        for (j, v) in row.iter().enumerate() {
            scale[j] = scale[j].max(v.abs());
        }
    }
    if let Some(j) = scale.iter().position(|&s| s == 0.0) {
        return Err(Error::Fit {
            message: format!("design matrix column {j} is identically zero"),
            condition: f64::INFINITY,
        });
    }

    // column-major scaled copy
    let mut a = vec![0f64; m * n];
    for (i, row) in rows.iter().enumerate() {
        for j in 0..n {
            a[j * m + i] = row[j] / scale[j];
        }
    }
    let mut rhs = y.to_vec();

    // Householder QR, applying reflectors to the rhs as we go.
    for k in 0..n {
        let col = &a[k * m..(k + 1) * m];
        let norm = col[k..].iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = if col[k] >= 0.0 { -norm } else { norm };
        let mut v = vec![0f64; m - k];
        v[0] = col[k] - alpha;
        v[1..].copy_from_slice(&col[k + 1..]);
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        for j in k..n {
            let cj = &mut a[j * m..(j + 1) * m];
            let dot: f64 = v.iter().zip(&cj[k..]).map(|(a, b)| a * b).sum();
            let f = 2.0 * dot / vnorm2;
            for (vi, c) in v.iter().zip(cj[k..].iter_mut()) {
                *c -= f * vi;
            }
        }
        let dot: f64 = v.iter().zip(&rhs[k..]).map(|(a, b)| a * b).sum();
        let f = 2.0 * dot / vnorm2;
        for (vi, r) in v.iter().zip(rhs[k..].iter_mut()) {
            *r -= f * vi;
        }
    }

    let diag: Vec<f64> = (0..n).map(|k| a[k * m + k].abs()).collect();
    let dmax = diag.iter().cloned().fold(0.0f64, f64::max);
    let dmin = diag.iter().cloned().fold(f64::INFINITY, f64::min);
    let condition = if dmin > 0.0 { dmax / dmin } else { f64::INFINITY };
    if dmin <= dmax * 1e-13 {
        return Err(Error::Fit {
            message: "rank-deficient design matrix".to_string(),
            condition,
        });
    }

    // back substitution on the leading n x n triangle
    let mut x = vec![0f64; n];
    for k in (0..n).rev() {
        let mut s = rhs[k];
        for j in k + 1..n {
            s -= a[j * m + k] * x[j];
        }
        x[k] = s / a[k * m + k];
    }
    let residual_norm = rhs[n..].iter().map(|v| v * v).sum::<f64>().sqrt();
    for (xj, sj) in x.iter_mut().zip(&scale) {
        *xj /= sj;
    }
    Ok(LstsqSolution {
        coeffs: x,
        residual_norm,
        condition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_exact_polynomial_data() {
        // y = 3 - 2 x + 0.5 x^2 sampled without noise
        let xs: Vec<f64> = (0..8).map(|i| 0.1 + 0.2 * i as f64).collect();
        let rows: Vec<Vec<f64>> = xs.iter().map(|&x| vec![1.0, x, x * x]).collect();
        let y: Vec<f64> = xs.iter().map(|&x| 3.0 - 2.0 * x + 0.5 * x * x).collect();
        let sol = solve_least_squares(&rows, &y).unwrap();
        assert!((sol.coeffs[0] - 3.0).abs() < 1e-12);
        assert!((sol.coeffs[1] + 2.0).abs() < 1e-12);
        assert!((sol.coeffs[2] - 0.5).abs() < 1e-12);
        assert!(sol.residual_norm < 1e-12);
    }

    #[test]
    fn flags_rank_deficiency() {
        let rows: Vec<Vec<f64>> = (0..5).map(|i| vec![1.0, i as f64, 2.0 * i as f64]).collect();
        let y = vec![0.0; 5];
        match solve_least_squares(&rows, &y) {
            Err(Error::Fit { condition, .. }) => assert!(condition > 1e12),
            other => panic!("expected fit error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_underdetermined_systems() {
        let rows = vec![vec![1.0, 2.0, 3.0]];
        assert!(solve_least_squares(&rows, &[1.0]).is_err());
    }
}
