use num_complex::Complex64;

use super::matrix::Hermitian;
use super::scalar::{Scalar, ScalarField};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TOL: f64 = 1e-13;

/// Eigen-decomposition of a complex Hermitian matrix.
#[derive(Clone, Debug)]
pub struct Eigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// Row-major `n × n`; column `k` is the unit eigenvector of `values[k]`.
    pub vectors: Vec<Complex64>,
}

fn off_norm(a: &[Complex64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi diagonalization of a complex Hermitian matrix.
///
/// Each rotation first removes the phase of `a_pq` with a diagonal unitary
/// and then applies a real Givens rotation.
pub fn eigh(m: &Hermitian<Complex64>) -> Result<Eigen> {
    let n = m.n();
    let mut a = m.data().to_vec();
    let mut v = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::new(1.0, 0.0);
    }
    let scale = m.frobenius_norm();
    let tol = OFF_DIAGONAL_TOL * scale;

    let mut converged = off_norm(&a, n) <= tol;
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let phase = apq / r;
                for k in 0..n {
                    a[k * n + q] *= phase.conj();
                    v[k * n + q] *= phase.conj();
                }
                for k in 0..n {
                    a[q * n + k] *= phase;
                }

                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = if theta == 0.0 { 1.0 } else { theta.signum() / (theta.abs() + theta.hypot(1.0)) };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                for k in 0..n {
                    let (kp, kq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = kp * c - kq * s;
                    a[k * n + q] = kp * s + kq * c;
                    let (vp, vq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = vp * c - vq * s;
                    v[k * n + q] = vp * s + vq * c;
                }
                for k in 0..n {
                    let (pk, qk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = pk * c - qk * s;
                    a[q * n + k] = pk * s + qk * c;
                }
                a[p * n + q] = Complex64::new(0.0, 0.0);
                a[q * n + p] = Complex64::new(0.0, 0.0);
                a[p * n + p] = Complex64::new(a[p * n + p].re, 0.0);
                a[q * n + q] = Complex64::new(a[q * n + q].re, 0.0);
            }
        }
        sweeps += 1;
        converged = off_norm(&a, n) <= tol;
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps, residual: off_norm(&a, n) });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re));
    let values = order.iter().map(|&i| a[i * n + i].re).collect();
    let mut vectors = vec![Complex64::new(0.0, 0.0); n * n];
    for (dst, &src) in order.iter().enumerate() {
        for k in 0..n {
            vectors[k * n + dst] = v[k * n + src];
        }
    }
    Ok(Eigen { values, vectors })
}

/// Ascending eigenvalues of a self-adjoint matrix over any field.
///
/// Quaternionic matrices are diagonalized through their complex embedding,
/// where each eigenvalue appears twice; the pairs are merged.
pub fn eigenvalues<S: Scalar>(m: &Hermitian<S>) -> Result<Vec<f64>> {
    let values = eigh(&S::embed(m))?.values;
    Ok(match S::FIELD {
        ScalarField::Quaternion => values.chunks(2).map(|p| 0.5 * (p[0] + p[1])).collect(),
        _ => values,
    })
}

/// Positive semidefinite square root.
pub fn sqrt_psd<S: Scalar>(m: &Hermitian<S>) -> Result<Hermitian<S>> {
    let e = eigh(&S::embed(m))?;
    let w = e.values.len();
    if let Some(&lo) = e.values.first() {
        if lo < -1e-10 {
            return Err(Error::domain(format!("matrix has negative eigenvalue {lo:e}")));
        }
    }
    let roots: Vec<f64> = e.values.iter().map(|&l| l.max(0.0).sqrt()).collect();
    let root = Hermitian::from_fn(w, |i, j| {
        (0..w).fold(Complex64::new(0.0, 0.0), |acc, k| acc + e.vectors[i * w + k] * roots[k] * e.vectors[j * w + k].conj())
    });
    Ok(S::extract(&root))
}
