use std::f64::consts::{PI, SQRT_2};

use crate::algebra::ScalarField;
use crate::error::{Error, Result};
use crate::metrics::{AdmissibleFunction, MonotoneFunction};
use crate::quadrature::{classify_and_integrate, integrate_split, Classified, Endpoint, QuadratureResult, DEFAULT_REL_TOL};

fn require_qubit_field(field: ScalarField) -> Result<()> {
    match field {
        ScalarField::Quaternion => Err(Error::Unsupported("qubit metric volumes cover the real and complex fields".into())),
        _ => Ok(()),
    }
}

/// Volume integrand in the variable `t = λ₂/λ₁ ∈ (0, 1)`, split as `(t, 1 - t)`.
pub fn monotone_integrand(field: ScalarField, f: &MonotoneFunction, t: f64, tc: f64) -> f64 {
    let ratio = tc / (1.0 + t);
    match field {
        ScalarField::Real => SQRT_2 * PI * ratio / ((t * (1.0 + t)).sqrt() * f.eval(t).sqrt()),
        _ => 2.0 * PI * ratio * ratio / (t.sqrt() * f.eval(t)),
    }
}

/// Volume of the qubit states under the monotone metric generated by `f`.
///
/// The integrand vanishes at `t = 1`, so only `t → 0` is probed before
/// integrating.
pub fn qubit_volume_monotone(field: ScalarField, f: &MonotoneFunction) -> Result<Classified> {
    require_qubit_field(field)?;
    classify_and_integrate(|t, tc| monotone_integrand(field, f, t, tc), &[Endpoint::Zero], DEFAULT_REL_TOL, 0.0)
}

/// The same volume as an integral over the Bloch radius `r`.
pub fn qubit_volume_monotone_radial(field: ScalarField, f: &MonotoneFunction) -> Result<QuadratureResult> {
    require_qubit_field(field)?;
    integrate_split(
        |r, s| {
            let t = s / (2.0 - s);
            match field {
                ScalarField::Real => 2.0 * PI * r / (s.sqrt() * (1.0 + r) * f.eval(t).sqrt()),
                _ => 4.0 * PI * r * r / ((s * (1.0 + r)).sqrt() * (1.0 + r) * f.eval(t)),
            }
        },
        DEFAULT_REL_TOL,
        0.0,
    )
}

/// Radial pull-back integrand at Bloch radius `r`, split as `(r, 1 - r)`.
pub fn pullback_integrand(field: ScalarField, h: &AdmissibleFunction, r: f64, s: f64) -> f64 {
    let (big, small) = ((1.0 + r) / 2.0, s / 2.0);
    let grad = (h.deriv(big).powi(2) + h.deriv(small).powi(2)).sqrt();
    let diff = h.eval(big) - h.eval(small);
    match field {
        ScalarField::Real => PI / SQRT_2 * grad * diff,
        _ => PI * grad * diff * diff,
    }
}

/// Volume of the qubit states under the pull-back metric of `h`; the
/// integrand may blow up as `r → 1`, where the smaller eigenvalue vanishes.
pub fn qubit_volume_pullback(field: ScalarField, h: &AdmissibleFunction) -> Result<Classified> {
    require_qubit_field(field)?;
    classify_and_integrate(|r, s| pullback_integrand(field, h, r, s), &[Endpoint::One], DEFAULT_REL_TOL, 0.0)
}
