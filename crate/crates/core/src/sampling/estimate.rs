use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use crate::algebra::{is_positive_definite, Hermitian, Quaternion, Scalar, ScalarField, SelfAdjointState};
use crate::error::{Error, Result};
use crate::volumes::volume_lebesgue;

use super::{run_streams, sample_state, McConfig, Moments};

pub const MIN_SAMPLES: u64 = 10_000;
/// Fraction of non-finite functional values above which an estimate is flagged.
pub const NON_FINITE_WARN_FRACTION: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub n_samples: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_accepted: Option<u64>,
}

impl McEstimate {
    /// `|value - target|` in units of the standard error.
    pub fn z_score(&self, target: f64) -> f64 {
        (self.value - target).abs() / self.std_error
    }
}

/// Mean of a functional over uniform states and its integral against the
/// Lebesgue measure.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FunctionalEstimate {
    pub mean: McEstimate,
    pub integral: McEstimate,
    pub n_non_finite: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

fn check_args(n: usize, n_samples: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::domain(format!("Monte Carlo estimation needs n >= 2, got {n}")));
    }
    if n_samples < MIN_SAMPLES {
        return Err(Error::domain(format!("at least {MIN_SAMPLES} samples are required, got {n_samples}")));
    }
    Ok(())
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Rejection estimate of the Lebesgue volume over the box
/// `Δ_{n-1} × [-1/2, 1/2]^{d n(n-1)/2}`, whose volume is `1/(n-1)!`.
pub fn estimate_volume_mc(field: ScalarField, n: usize, n_samples: u64, config: &McConfig) -> Result<McEstimate> {
    check_args(n, n_samples)?;
    let hits: u64 = run_streams(n_samples, config, |rng, count| {
        (0..count)
            .filter(|_| match field {
                ScalarField::Real => box_point_accepted::<f64, _>(n, rng),
                ScalarField::Complex => box_point_accepted::<Complex64, _>(n, rng),
                ScalarField::Quaternion => box_point_accepted::<Quaternion, _>(n, rng),
            })
            .count() as u64
    })
    .into_iter()
    .sum();
    if hits == 0 {
        return Err(Error::ZeroAcceptance { n_samples });
    }
    let p = hits as f64 / n_samples as f64;
    let box_volume = 1.0 / factorial(n - 1);
    Ok(McEstimate {
        value: p * box_volume,
        std_error: (p * (1.0 - p) / n_samples as f64).sqrt() * box_volume,
        n_samples,
        n_accepted: Some(hits),
    })
}

fn box_point_accepted<S: Scalar, R: Rng + ?Sized>(n: usize, rng: &mut R) -> bool {
    let mut cuts: Vec<f64> = (0..n - 1).map(|_| rng.random::<f64>()).collect();
    cuts.sort_by(f64::total_cmp);
    let mut diag = Vec::with_capacity(n);
    let mut prev = 0.0;
    for &c in &cuts {
        diag.push(c - prev);
        prev = c;
    }
    diag.push(1.0 - prev);

    let d = S::FIELD.dim();
    let mut data = vec![S::zero(); n * n];
    let mut comps = [0.0; 4];
    for i in 0..n {
        data[i * n + i] = S::from_real(diag[i]);
        for j in i + 1..n {
            comps[..d].iter_mut().for_each(|c| *c = rng.random::<f64>() - 0.5);
            let entry = S::from_components(&comps[..d]);
            // cheap necessary condition before the full minor test
            if entry.norm_sqr() >= diag[i] * diag[j] {
                return false;
            }
            data[i * n + j] = entry;
        }
    }
    is_positive_definite(&Hermitian::from_raw(n, data))
}

/// Monte Carlo estimate of `E[φ]` under the normalized Lebesgue measure and
/// of `∫ φ dλ = E[φ] · V`, using the exact sampler.
pub fn estimate_functional_mc<F>(
    field: ScalarField,
    n: usize,
    n_samples: u64,
    config: &McConfig,
    functional: F,
) -> Result<FunctionalEstimate>
where
    F: Fn(&SelfAdjointState) -> f64 + Sync + Send,
{
    let mut out = estimate_functionals_mc(field, n, n_samples, config, &[&functional])?;
    Ok(out.remove(0))
}

/// Several functionals evaluated on the same sample sequence.
pub fn estimate_functionals_mc(
    field: ScalarField,
    n: usize,
    n_samples: u64,
    config: &McConfig,
    functionals: &[&(dyn Fn(&SelfAdjointState) -> f64 + Sync + Send)],
) -> Result<Vec<FunctionalEstimate>> {
    check_args(n, n_samples)?;
    let volume = volume_lebesgue(field, n)?.value();
    let k = functionals.len();
    let parts = run_streams(n_samples, config, |rng, count| -> Result<Vec<(Moments, u64)>> {
        let mut acc = vec![(Moments::default(), 0u64); k];
        for _ in 0..count {
            let state = sample_state(field, n, rng)?;
            for (slot, phi) in acc.iter_mut().zip(functionals) {
                let v = phi(&state);
                if v.is_finite() {
                    slot.0.push(v);
                } else {
                    slot.1 += 1;
                }
            }
        }
        Ok(acc)
    });
    let mut total = vec![(Moments::default(), 0u64); k];
    for part in parts {
        for (t, p) in total.iter_mut().zip(part?) {
            t.0.merge(&p.0);
            t.1 += p.1;
        }
    }
    Ok(total
        .into_iter()
        .map(|(m, bad)| {
            let mean = McEstimate { value: m.mean, std_error: m.std_error(), n_samples, n_accepted: None };
            let integral = McEstimate { value: m.mean * volume, std_error: m.std_error() * volume, ..mean };
            let warning = (bad as f64 > NON_FINITE_WARN_FRACTION * n_samples as f64)
                .then(|| format!("{bad} of {n_samples} functional values were not finite and were excluded"));
            FunctionalEstimate { mean, integral, n_non_finite: bad, warning }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::Execution;

    #[test]
    fn small_volume_runs() {
        let cfg = McConfig::new(1);
        let e = estimate_volume_mc(ScalarField::Real, 2, 400_000, &cfg).unwrap();
        assert!(e.z_score(std::f64::consts::PI / 4.0) < 4.0, "{e:?}");
        let q = estimate_volume_mc(ScalarField::Quaternion, 2, 400_000, &cfg).unwrap();
        assert!(q.z_score(std::f64::consts::PI.powi(2) / 60.0) < 4.0, "{q:?}");
    }

    #[test]
    fn argument_checks() {
        let cfg = McConfig::new(1);
        assert!(matches!(estimate_volume_mc(ScalarField::Real, 1, 100_000, &cfg), Err(Error::Domain(_))));
        assert!(matches!(estimate_volume_mc(ScalarField::Real, 3, 10, &cfg), Err(Error::Domain(_))));
    }

    #[test]
    fn zero_acceptance_is_an_error() {
        // (real, 9) accepts roughly once in 10^13 draws
        let err = estimate_volume_mc(ScalarField::Real, 9, MIN_SAMPLES, &McConfig::new(2)).unwrap_err();
        assert_eq!(err, Error::ZeroAcceptance { n_samples: MIN_SAMPLES });
    }

    #[test]
    fn constant_functional_integrates_to_the_volume() {
        let cfg = McConfig::new(4).with_streams(3);
        let e = estimate_functional_mc(ScalarField::Complex, 3, MIN_SAMPLES, &cfg, |_| 1.0).unwrap();
        let v = volume_lebesgue(ScalarField::Complex, 3).unwrap().value();
        assert_eq!(e.mean.value, 1.0);
        assert!((e.integral.value - v).abs() <= 1e-15 * v);
        assert_eq!(e.integral.std_error, 0.0);
    }

    #[test]
    fn non_finite_values_are_counted() {
        let cfg = McConfig::new(4);
        let e = estimate_functional_mc(ScalarField::Real, 2, MIN_SAMPLES, &cfg, |s| if s.det() > 0.2 { f64::NAN } else { 1.0 }).unwrap();
        assert!(e.n_non_finite > 0 && e.warning.is_some());
        assert_eq!(e.mean.value, 1.0);
    }

    #[test]
    fn bit_identical_across_execution_modes() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            let cfg = McConfig::new(99).with_streams(5).with_execution(exec);
            let base = McConfig::new(99).with_streams(5).with_execution(Execution::Sequential);
            assert_eq!(
                estimate_volume_mc(ScalarField::Complex, 3, 50_000, &cfg).unwrap(),
                estimate_volume_mc(ScalarField::Complex, 3, 50_000, &base).unwrap()
            );
            assert_eq!(
                estimate_functional_mc(ScalarField::Real, 3, 20_000, &cfg, |s| s.det()).unwrap(),
                estimate_functional_mc(ScalarField::Real, 3, 20_000, &base, |s| s.det()).unwrap()
            );
        }
    }
}
