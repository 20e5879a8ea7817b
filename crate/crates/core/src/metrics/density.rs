//! Volume densities `√det g` of monotone and pull-back metrics, expressed
//! against the Lebesgue measure on the state coordinates.

use crate::algebra::{ScalarField, SelfAdjointState};
use crate::error::{Error, Result};

use super::{AdmissibleFunction, MonotoneFunction};

/// Eigenvalues are clamped into this band before evaluating pull-back densities.
pub const EIGEN_CLAMP: f64 = 1e-15;
const DIAGONAL_BRANCH: f64 = 1e-7;

/// The weight `m(μ_i, μ_j) = 1 / (μ_j f(μ_i / μ_j))`.
pub fn m_weight(f: &MonotoneFunction, mu_i: f64, mu_j: f64) -> f64 {
    1.0 / (mu_j * f.eval(mu_i / mu_j))
}

/// `(h(μ_i) - h(μ_j)) / (μ_i - μ_j)`, or `h'` at the midpoint when the two
/// eigenvalues are within a relative `1e-7` of each other.
pub fn divided_difference(h: &AdmissibleFunction, mu_i: f64, mu_j: f64) -> f64 {
    if (mu_i - mu_j).abs() < DIAGONAL_BRANCH * mu_i.max(mu_j) {
        h.deriv(0.5 * (mu_i + mu_j))
    } else {
        (h.eval(mu_i) - h.eval(mu_j)) / (mu_i - mu_j)
    }
}

fn metric_field(field: ScalarField) -> Result<()> {
    match field {
        ScalarField::Quaternion => Err(Error::Unsupported("metric volumes are defined for the real and complex state spaces only".into())),
        _ => Ok(()),
    }
}

fn prefactor(field: ScalarField, n: usize) -> f64 {
    let pairs = (n * (n - 1)) as f64;
    match field {
        ScalarField::Real => 2f64.powf(pairs / 4.0),
        _ => 2f64.powf(pairs / 2.0),
    }
}

/// Monotone-metric density from the spectrum `mu` and `det D`.
pub fn sqrt_det_g_monotone_spectral(field: ScalarField, f: &MonotoneFunction, mu: &[f64], det: f64) -> Result<f64> {
    metric_field(field)?;
    let n = mu.len();
    let mut prod = 1.0;
    for i in 0..n {
        for j in i + 1..n {
            prod *= m_weight(f, mu[i], mu[j]);
        }
    }
    if field == ScalarField::Real {
        prod = prod.sqrt();
    }
    Ok(prefactor(field, n) * prod / det.sqrt())
}

/// `√det g_f` at the state `d`, for the monotone metric generated by `f`.
pub fn sqrt_det_g_monotone(f: &MonotoneFunction, d: &SelfAdjointState) -> Result<f64> {
    metric_field(d.field())?;
    let mu: Vec<f64> = d.eigenvalues()?.into_iter().map(|m| m.max(f64::MIN_POSITIVE)).collect();
    sqrt_det_g_monotone_spectral(d.field(), f, &mu, d.det())
}

/// A pull-back density together with whether any eigenvalue had to be clamped.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PullbackDensity {
    pub value: f64,
    pub clamped: bool,
}

pub fn sqrt_det_g_pullback_spectral(field: ScalarField, h: &AdmissibleFunction, mu: &[f64]) -> Result<PullbackDensity> {
    metric_field(field)?;
    let mut clamped = false;
    let mu: Vec<f64> = mu
        .iter()
        .map(|&m| {
            let c = m.clamp(EIGEN_CLAMP, 1.0 - EIGEN_CLAMP);
            clamped |= c != m;
            c
        })
        .collect();
    let n = mu.len();
    let dh2: Vec<f64> = mu.iter().map(|&m| h.deriv(m).powi(2)).collect();
    let sum: f64 = (0..n).map(|i| (0..n).filter(|&j| j != i).map(|j| dh2[j]).product::<f64>()).sum();
    let mut prod = 1.0;
    for i in 0..n {
        for j in i + 1..n {
            prod *= divided_difference(h, mu[i], mu[j]);
        }
    }
    if field == ScalarField::Complex {
        prod *= prod;
    }
    Ok(PullbackDensity { value: prefactor(field, n) * sum.sqrt() * prod.abs(), clamped })
}

/// `√det g_h` at the state `d`, for the pull-back of the flat metric through `h`.
pub fn sqrt_det_g_pullback(h: &AdmissibleFunction, d: &SelfAdjointState) -> Result<f64> {
    Ok(sqrt_det_g_pullback_detailed(h, d)?.value)
}

pub fn sqrt_det_g_pullback_detailed(h: &AdmissibleFunction, d: &SelfAdjointState) -> Result<PullbackDensity> {
    metric_field(d.field())?;
    sqrt_det_g_pullback_spectral(d.field(), h, &d.eigenvalues()?)
}

/// `√det g_f` of the qubit metric written in Stokes coordinates, where at
/// Bloch radius `r` the metric is `diag(1/(4λ₁λ₂), m/2, m/2)` (complex) or
/// `diag(1/(4λ₁λ₂), m/2)` (real) with `λ = (1 ± r)/2`.
pub fn stokes_sqrt_det_g(field: ScalarField, f: &MonotoneFunction, r: f64) -> Result<f64> {
    metric_field(field)?;
    let (l1, l2) = ((1.0 + r) / 2.0, (1.0 - r) / 2.0);
    let radial = 1.0 / (4.0 * l1 * l2);
    let tangential = m_weight(f, l1, l2) / 2.0;
    Ok(match field {
        ScalarField::Real => (radial * tangential).sqrt(),
        _ => (radial * tangential * tangential).sqrt(),
    })
}

/// Jacobian from Stokes coordinates to the Lebesgue coordinates
/// `(a_11, Re a_12[, Im a_12])`: each coordinate is halved.
pub fn stokes_jacobian(field: ScalarField) -> f64 {
    match field {
        ScalarField::Real => 4.0,
        _ => 8.0,
    }
}
