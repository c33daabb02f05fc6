//! Cyclic Jacobi eigensolver: the numeric cross-check path for symmetric
//! integer matrices. The exact path is always the source of truth.

use crate::matrix::{IntMatrix, MatrixError};
use num_traits::ToPrimitive;

/// Default convergence tolerance for the off-diagonal Frobenius norm.
pub const DEFAULT_JACOBI_TOL: f64 = 1e-12;

/// All eigenvalues of a symmetric integer matrix via cyclic Jacobi rotations,
/// sorted descending. Sweeps stop once the off-diagonal Frobenius norm drops
/// below `tol` times the matrix scale.
pub fn eigenvalues_symmetric(m: &IntMatrix, tol: f64) -> Result<Vec<f64>, MatrixError> {
    if !m.is_symmetric() {
        return Err(MatrixError::NotSymmetric);
    }
    let n = m.n();
    let mut a = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = m
                .get(i, j)
                .to_f64()
                .expect("matrix entry representable in f64");
        }
    }
    let scale = frobenius(&a, n).max(1.0);
    let mut eigs: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();

    for _sweep in 0..100 {
        if off_frobenius(&a, n) < tol * scale {
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for j in 0..n {
                    if j == p || j == q {
                        continue;
                    }
                    let ajp = a[j * n + p];
                    let ajq = a[j * n + q];
                    let njp = ajp - s * (ajq + tau * ajp);
                    let njq = ajq + s * (ajp - tau * ajq);
                    a[j * n + p] = njp;
                    a[p * n + j] = njp;
                    a[j * n + q] = njq;
                    a[q * n + j] = njq;
                }
            }
        }
        for i in 0..n {
            eigs[i] = a[i * n + i];
        }
    }
    for i in 0..n {
        eigs[i] = a[i * n + i];
    }
    eigs.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(eigs)
}

fn frobenius(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            s += a[i * n + j] * a[i * n + j];
        }
    }
    s.sqrt()
}

fn off_frobenius(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn k3_eigenvalues() {
        let eigs =
            eigenvalues_symmetric(&Graph::triangle().adjacency_matrix(), DEFAULT_JACOBI_TOL)
                .unwrap();
        assert!((eigs[0] - 2.0).abs() < 1e-9);
        assert!((eigs[1] + 1.0).abs() < 1e-9);
        assert!((eigs[2] + 1.0).abs() < 1e-9);
    }

    #[test]
    fn all_ones_5x5() {
        let j5 = IntMatrix::from_rows_i64(&vec![vec![1i64; 5]; 5]);
        let eigs = eigenvalues_symmetric(&j5, DEFAULT_JACOBI_TOL).unwrap();
        assert!((eigs[0] - 5.0).abs() < 1e-9);
        for e in &eigs[1..] {
            assert!(e.abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_non_symmetric() {
        let m = IntMatrix::from_rows_i64(&[vec![0, 1], vec![0, 0]]);
        assert_eq!(
            eigenvalues_symmetric(&m, DEFAULT_JACOBI_TOL),
            Err(MatrixError::NotSymmetric)
        );
    }

    #[test]
    fn matches_trace() {
        let g = Graph::with_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        let eigs = eigenvalues_symmetric(&g.adjacency_matrix(), DEFAULT_JACOBI_TOL).unwrap();
        let sum: f64 = eigs.iter().sum();
        assert!(sum.abs() < 1e-6);
    }
}
