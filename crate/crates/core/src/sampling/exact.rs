use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Beta, Distribution, Gamma, StandardNormal};

use crate::algebra::{sqrt_psd, Hermitian, Quaternion, Scalar, ScalarField, SelfAdjointState};
use crate::error::{Error, Result};

use super::{run_streams, McConfig};

const MAX_RADIUS: f64 = 1.0 - 1e-15;

/// Draw a state from the normalized Lebesgue measure on the `n × n` states
/// over `field`.
///
/// The diagonal is Dirichlet with every parameter `(n-1)d/2 + 1`. Column
/// `j + 1` is then `√a_{j+1} · r · A_j^{1/2} u` with `u` uniform on the unit
/// sphere of `R^{jd}` and `r² ~ Beta(jd/2, (n-1-j)d/2 + 1)`, which is uniform
/// on the ellipsoid `{x : x* A_j^{-1} x < a_{j+1}}` weighted by the volume of
/// the remaining fibre.
pub fn sample_state<R: Rng + ?Sized>(field: ScalarField, n: usize, rng: &mut R) -> Result<SelfAdjointState> {
    if n < 2 {
        return Err(Error::domain(format!("sampling needs n >= 2, got {n}")));
    }
    match field {
        ScalarField::Real => SelfAdjointState::new(sample_matrix::<f64, R>(n, rng)?),
        ScalarField::Complex => SelfAdjointState::new(sample_matrix::<Complex64, R>(n, rng)?),
        ScalarField::Quaternion => SelfAdjointState::new(sample_matrix::<Quaternion, R>(n, rng)?),
    }
}

fn sample_matrix<S: Scalar, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Hermitian<S>> {
    let d = S::FIELD.dim();
    let shape = ((n - 1) * d) as f64 / 2.0 + 1.0;
    let gamma = Gamma::new(shape, 1.0).map_err(|e| Error::domain(e.to_string()))?;
    let mut diag: Vec<f64> = (0..n).map(|_| gamma.sample(rng)).collect();
    let total: f64 = diag.iter().sum();
    diag.iter_mut().for_each(|a| *a /= total);

    let mut data = vec![S::zero(); n * n];
    for (i, &a) in diag.iter().enumerate() {
        data[i * n + i] = S::from_real(a);
    }
    for j in 1..n {
        let root = if j == 1 {
            Hermitian::from_raw(1, vec![S::from_real(diag[0].sqrt())])
        } else {
            let block = Hermitian::from_fn(j, |r, c| data[r * n + c]);
            sqrt_psd(&block)?
        };
        let dim = j * d;
        let mut u: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
        let norm = u.iter().map(|v| v * v).sum::<f64>().sqrt();
        u.iter_mut().for_each(|v| *v /= norm);
        let beta = Beta::new(dim as f64 / 2.0, ((n - 1 - j) * d) as f64 / 2.0 + 1.0).map_err(|e| Error::domain(e.to_string()))?;
        let r = beta.sample(rng).sqrt().min(MAX_RADIUS);
        let u: Vec<S> = u.chunks(d).map(S::from_components).collect();
        let scale = diag[j].sqrt() * r;
        for (i, y) in root.mul_vec(&u).into_iter().enumerate() {
            data[i * n + j] = y.scale(scale);
        }
    }
    Ok(Hermitian::from_raw(n, data))
}

/// `count` states, split over the streams of `config` and concatenated in
/// stream order.
pub fn sample_states(field: ScalarField, n: usize, count: u64, config: &McConfig) -> Result<Vec<SelfAdjointState>> {
    let parts = run_streams(count, config, |rng, k| (0..k).map(|_| sample_state(field, n, rng)).collect::<Result<Vec<_>>>());
    let mut out = Vec::with_capacity(count as usize);
    for part in parts {
        out.extend(part?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::RngStream;

    #[test]
    fn samples_are_states() {
        let mut rng = RngStream::new(11, 0);
        for field in ScalarField::ALL {
            for n in 2..=6 {
                for _ in 0..200 {
                    let s = sample_state(field, n, &mut rng).unwrap();
                    assert!((s.matrix().trace() - 1.0).abs() < 1e-12);
                    assert!(s.minors().iter().all(|&m| m > 0.0));
                    assert!(s.matrix().is_positive_definite());
                }
            }
        }
        assert!(sample_state(ScalarField::Real, 1, &mut rng).is_err());
    }

    #[test]
    fn determinant_recursion_is_respected() {
        // det A_{j+1} = a_{j+1} det A_j (1 - r²) lies in (0, a_{j+1} det A_j)
        let mut rng = RngStream::new(5, 2);
        for field in ScalarField::ALL {
            let s = sample_state(field, 4, &mut rng).unwrap();
            let diag = s.matrix().diag();
            let minors = s.minors();
            for (k, w) in minors.windows(2).enumerate() {
                assert!(w[1] < diag[k + 1] * w[0]);
            }
        }
    }

    #[test]
    fn sample_states_is_deterministic() {
        let cfg = McConfig::new(9).with_streams(3);
        let a = sample_states(ScalarField::Complex, 3, 10, &cfg).unwrap();
        let b = sample_states(ScalarField::Complex, 3, 10, &cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 10);
    }
}
