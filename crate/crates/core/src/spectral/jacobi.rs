//! Cyclic Jacobi eigensolver for small dense symmetric matrices.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::tol::MAX_SWEEPS;

/// Eigen-decomposition `A = V diag(λ) Vᵀ` of a symmetric matrix.
///
/// Eigenvalues are returned in ascending order; column `k` of the matrix is
/// the unit eigenvector of the `k`-th eigenvalue. Only the upper triangle of
/// `a` is trusted; the lower triangle is overwritten by its mirror.
pub fn symmetric_eigen(a: &DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "square matrix required");
    let mut m = a.clone();
    for i in 0..n {
        for j in 0..i {
            m[(i, j)] = m[(j, i)];
        }
    }
    let mut v = DMatrix::<f64>::identity(n, n);
    let scale = m.norm();

    let off = |m: &DMatrix<f64>| {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += m[(i, j)] * m[(i, j)];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off(&m) <= f64::EPSILON * scale {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut m, &mut v, p, q, c, s);
            }
        }
    }
    if !converged && off(&m) > f64::EPSILON * scale {
        return Err(Error::ConvergenceFailure { sweeps: MAX_SWEEPS });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].total_cmp(&m[(j, j)]));
    let values = order.iter().map(|&i| m[(i, i)]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok((values, vectors))
}

// A ← JᵀAJ and V ← VJ for the plane rotation J in (p, q).
fn rotate(m: &mut DMatrix<f64>, v: &mut DMatrix<f64>, p: usize, q: usize, c: f64, s: f64) {
    let n = m.nrows();
    for k in 0..n {
        let (mkp, mkq) = (m[(k, p)], m[(k, q)]);
        m[(k, p)] = c * mkp - s * mkq;
        m[(k, q)] = s * mkp + c * mkq;
    }
    for k in 0..n {
        let (mpk, mqk) = (m[(p, k)], m[(q, k)]);
        m[(p, k)] = c * mpk - s * mqk;
        m[(q, k)] = s * mpk + c * mqk;
    }
    m[(p, q)] = 0.0;
    m[(q, p)] = 0.0;
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

/// Largest absolute eigenvalue of a symmetric matrix (its operator 2-norm).
pub fn symmetric_operator_norm(a: &DMatrix<f64>) -> Result<f64> {
    let (values, _) = symmetric_eigen(a)?;
    Ok(values.iter().fold(0.0f64, |m, l| m.max(l.abs())))
}
