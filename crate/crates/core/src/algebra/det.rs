use num_complex::Complex64;

use super::matrix::{complex_det, Hermitian};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Solves `A y = x` by Gaussian elimination with partial pivoting.
///
/// Row operations multiply from the left, so the routine is valid over the
/// quaternions as well. Returns `None` on an exactly singular pivot.
pub(crate) fn solve<S: Scalar>(a: &Hermitian<S>, x: &[S]) -> Option<Vec<S>> {
    let n = a.n();
    let mut m = a.data().to_vec();
    let mut b = x.to_vec();
    for k in 0..n {
        let p = (k..n).max_by(|&i, &j| m[i * n + k].norm_sqr().total_cmp(&m[j * n + k].norm_sqr()))?;
        if m[p * n + k].norm_sqr() == 0.0 {
            return None;
        }
        if p != k {
            for j in 0..n {
                m.swap(k * n + j, p * n + j);
            }
            b.swap(k, p);
        }
        let pinv = m[k * n + k].inv();
        for i in k + 1..n {
            let l = m[i * n + k] * pinv;
            if l.norm_sqr() == 0.0 {
                continue;
            }
            for j in k..n {
                let v = m[k * n + j];
                m[i * n + j] = m[i * n + j] - l * v;
            }
            b[i] = b[i] - l * b[k];
        }
    }
    let mut y = vec![S::zero(); n];
    for k in (0..n).rev() {
        let rhs = (k + 1..n).fold(b[k], |acc, j| acc - m[k * n + j] * y[j]);
        y[k] = m[k * n + k].inv() * rhs;
    }
    Some(y)
}

/// `(det A_1, …, det A_n)` for the upper-left blocks `A_k`, by the
/// bordering recursion `det A_k = a_kk det A_{k-1} - ⟨x, T x⟩` with
/// `T = det(A_{k-1}) A_{k-1}^{-1}` and `x` the first `k-1` entries of column `k`.
///
/// For quaternionic matrices the values are Moore determinants (real).
pub fn leading_minor_determinants<S: Scalar>(a: &Hermitian<S>) -> Result<Vec<f64>> {
    minors_until(a, false).map(|(m, _)| m)
}

/// Sylvester's criterion: every leading minor determinant is positive.
pub fn is_positive_definite<S: Scalar>(a: &Hermitian<S>) -> bool {
    match minors_until(a, true) {
        Ok((m, complete)) => complete && m.iter().all(|&d| d > 0.0),
        Err(_) => false,
    }
}

fn minors_until<S: Scalar>(a: &Hermitian<S>, stop_on_nonpositive: bool) -> Result<(Vec<f64>, bool)> {
    let n = a.n();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let akk = a.get(k, k).re();
        let d = if k == 0 {
            akk
        } else {
            let prev = out[k - 1];
            if prev == 0.0 {
                return Err(Error::SingularMinor { k });
            }
            let x: Vec<S> = (0..k).map(|i| a.get(i, k)).collect();
            let y = solve(&a.leading(k), &x).ok_or(Error::SingularMinor { k })?;
            let quad = x.iter().zip(&y).fold(0.0, |acc, (&xi, &yi)| acc + (xi.conj() * yi).re());
            akk * prev - prev * quad
        };
        out.push(d);
        if stop_on_nonpositive && !(d > 0.0) {
            return Ok((out, false));
        }
    }
    Ok((out, true))
}

/// `det(A + B)` where every entry of `A` equals `x` and `B = diag(b)`:
/// `det B + x Σ_i Π_{j≠i} b_j`.
pub fn det_diag_plus_constant(x: f64, diag: &[f64]) -> f64 {
    let prod: f64 = diag.iter().product();
    let sum: f64 = (0..diag.len()).map(|i| diag.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, b)| b).product::<f64>()).sum();
    prod + x * sum
}

/// Complex `2n × 2n` form of a quaternionic self-adjoint matrix.
pub fn embed_complex(a: &Hermitian<super::Quaternion>) -> Hermitian<Complex64> {
    <super::Quaternion as Scalar>::embed(a)
}

/// Moore determinant of a quaternionic self-adjoint matrix, as the
/// nonnegative square root of the determinant of its complex embedding.
pub fn qdet(a: &Hermitian<super::Quaternion>) -> f64 {
    let e = embed_complex(a);
    complex_det(e.n(), e.data()).re.max(0.0).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Quaternion;

    #[test]
    fn identity_minors() {
        let m = leading_minor_determinants(&Hermitian::<f64>::identity(3)).unwrap();
        assert_eq!(m, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn real_three_by_three_second_minor() {
        let (a, b, c, f, g, h) = (0.5, 0.3, 0.2, 0.1, 0.05, 0.02);
        let m = Hermitian::from_raw(3, vec![a, f, h, f, b, g, h, g, c]);
        let d = leading_minor_determinants(&m).unwrap();
        assert!((d[1] - 0.14).abs() < 1e-15);
        let full = a * b * c + 2.0 * f * g * h - h * h * b - g * g * a - f * f * c;
        assert!((d[2] - full).abs() < 1e-15);
    }

    #[test]
    fn positivity_examples() {
        assert!(is_positive_definite(&Hermitian::<f64>::identity(4)));
        assert!(!is_positive_definite(&Hermitian::<f64>::diagonal(&[1.0, -1.0])));
        assert!(!is_positive_definite(&Hermitian::from_raw(2, vec![2.0, 3.0, 3.0, 2.0])));
        let d = leading_minor_determinants(&Hermitian::from_raw(2, vec![2.0, 3.0, 3.0, 2.0])).unwrap();
        assert_eq!(d[1], -5.0);
    }

    #[test]
    fn singular_minor_is_reported() {
        let m = Hermitian::from_raw(3, vec![0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0]);
        assert_eq!(leading_minor_determinants(&m), Err(Error::SingularMinor { k: 1 }));
        assert!(!is_positive_definite(&m));
    }

    #[test]
    fn diag_plus_constant_examples() {
        assert_eq!(det_diag_plus_constant(0.0, &[2.0, 3.0, 5.0]), 30.0);
        assert_eq!(det_diag_plus_constant(1.0, &[2.0, 3.0]), 11.0);
        // cofactor expansion of [[1.7, .7, .7], [.7, 2.7, .7], [.7, .7, 3.7]]
        let m = [[1.7, 0.7, 0.7], [0.7, 2.7, 0.7], [0.7, 0.7, 3.7]];
        let cof = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        assert!((det_diag_plus_constant(0.7, &[1.0, 2.0, 3.0]) - cof).abs() < 1e-14);
    }

    #[test]
    fn qdet_examples() {
        assert!((qdet(&Hermitian::<Quaternion>::identity(3)) - 1.0).abs() < 1e-14);
        assert!((qdet(&Hermitian::<Quaternion>::diagonal(&[0.3, 0.7])) - 0.21).abs() < 1e-14);

        let q = Quaternion::new(0.1, -0.2, 0.05, 0.15);
        let (a, b) = (0.6, 0.4);
        let m = Hermitian::from_fn(2, |i, j| match (i, j) {
            (0, 0) => Quaternion::real(a),
            (1, 1) => Quaternion::real(b),
            _ => q,
        });
        let moore = a * b - q.norm_sqr();
        assert!((qdet(&m) - moore).abs() < 1e-14);
        let e = embed_complex(&m);
        let cdet = complex_det(4, e.data());
        assert!((cdet.re - moore * moore).abs() < 1e-14 && cdet.im.abs() < 1e-14);
        let rec = leading_minor_determinants(&m).unwrap();
        assert!((rec[1] - moore).abs() < 1e-14);
    }

    #[test]
    fn embedding_is_self_adjoint() {
        let m = Hermitian::from_fn(3, |i, j| Quaternion::new((i + j) as f64, 0.3 * i as f64, -0.2, 0.1 * j as f64));
        let e = embed_complex(&m);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(e.get(i, j), e.get(j, i).conj());
            }
        }
        assert_eq!(<Quaternion as Scalar>::extract(&e), m);
    }
}
