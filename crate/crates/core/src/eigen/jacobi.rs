use super::DenseSymMatrix;
use crate::{Error, Result};

fn off_diagonal_norm(a: &[f64], m: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..m {
        for j in i + 1..m {
            sum += a[i * m + j] * a[i * m + j];
        }
    }
    (2.0 * sum).sqrt()
}

/// Cyclic-by-row Jacobi. Sweeps until the off-diagonal Frobenius norm drops
/// below `tol·‖M‖_F`; returns the diagonal in row order (unsorted).
pub fn jacobi_eigenvalues(matrix: &DenseSymMatrix, tol: f64, max_sweeps: usize) -> Result<Vec<f64>> {
    let m = matrix.dim();
    let mut a = matrix.as_slice().to_vec();
    let threshold = tol * matrix.frobenius_norm();

    let mut residual = off_diagonal_norm(&a, m);
    let mut sweeps = 0;
    while residual > threshold {
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence { sweeps, residual });
        }
        for p in 0..m {
            for q in p + 1..m {
                let apq = a[p * m + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * m + p];
                let aqq = a[q * m + q];
                // tan of the rotation angle, smaller root of t² + 2θt − 1 = 0
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..m {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * m + p];
                    let akq = a[k * m + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * m + p] = new_kp;
                    a[p * m + k] = new_kp;
                    a[k * m + q] = new_kq;
                    a[q * m + k] = new_kq;
                }
                a[p * m + p] = app - t * apq;
                a[q * m + q] = aqq + t * apq;
                a[p * m + q] = 0.0;
                a[q * m + p] = 0.0;
            }
        }
        sweeps += 1;
        residual = off_diagonal_norm(&a, m);
    }
    Ok((0..m).map(|i| a[i * m + i]).collect())
}
