use std::f64::consts::PI;

use crate::error::Result;
use crate::metrics::LownerMeasure;
use crate::quadrature::{classify_and_integrate, endpoint_exponent_split, Classified, Endpoint, QuadratureResult, QuadratureVerdict};

const SERIES_RADIUS: f64 = 1e-3;

/// Kernel `K` with `V = ∫ K dμ` for the complex qubit volume, where `μ`
/// represents `1/f` through `1/f(x) = ∫ dμ(t) / ((1-t)x + t)`:
///
/// `K(z) = 2π [2/u - π/u² + arccos(u) / (u² √(z - z²))]`, `u = 2z - 1`.
///
/// The bracket alone gives `π/2` at `z = 1/2`; the factor `2π` is needed
/// for `μ = δ_{1/2}` (which represents `f = (1+x)/2`) to give `π²`.
/// `K` blows up like `2π²/√z` at `0` and tends to `2π(4 - π)` at `1`.
pub fn lowner_kernel(z: f64) -> f64 {
    lowner_kernel_split(z, 1.0 - z)
}

/// [`lowner_kernel`] with the complement `1 - z` supplied by the caller.
pub fn lowner_kernel_split(z: f64, zc: f64) -> f64 {
    let u = z - zc;
    let bracket = if u.abs() < SERIES_RADIUS {
        PI / 2.0 + u * (-4.0 / 3.0 + u * (3.0 * PI / 8.0 + u * (-16.0 / 15.0 + u * 5.0 * PI / 16.0)))
    } else {
        // arccos(2z - 1) / √(z - z²) without cancellation at either end
        let acos_term = if z < 0.5 {
            (PI - 2.0 * z.sqrt().asin()) / (z * zc).sqrt()
        } else {
            let w = zc.sqrt();
            let sinc = if w < 1e-8 { 1.0 } else { w.asin() / w };
            2.0 * sinc / z.sqrt()
        };
        2.0 / u - PI / (u * u) + acos_term / (u * u)
    };
    2.0 * PI * bracket
}

/// Complex qubit volume `∫ K dμ` of the metric whose generator's inverse is
/// represented by `mu`.
///
/// An atom at `0` (or `1`, by symmetry) makes the volume infinite at once.
/// Otherwise the density is probed through `z^{-1/2} ρ(z)` at `0`, which
/// decides `∫ z^{-1/2} dμ < ∞`, before `K ρ` is integrated.
pub fn volume_from_measure(mu: &LownerMeasure) -> Result<Classified> {
    mu.validate()?;
    if mu.atoms().iter().any(|&(z, _)| z == 0.0 || z == 1.0) {
        let verdict = QuadratureVerdict::Infinite { exponent: f64::INFINITY, endpoint: Endpoint::Zero };
        return Ok(Classified { verdict, probes: Vec::new(), warnings: Vec::new() });
    }
    let atoms: f64 = mu.atoms().iter().map(|&(z, w)| w * lowner_kernel(z)).sum();
    let Some(rho) = mu.density() else {
        let result = QuadratureResult { value: atoms, err_est: 0.0, levels_used: 0, converged: true };
        return Ok(Classified { verdict: QuadratureVerdict::Finite(result), probes: Vec::new(), warnings: Vec::new() });
    };
    let probe = endpoint_exponent_split(|z, zc| rho(z, zc) / z.sqrt(), Endpoint::Zero)?;
    if probe.is_divergent() {
        let verdict = QuadratureVerdict::Infinite { exponent: probe.exponent, endpoint: Endpoint::Zero };
        return Ok(Classified { verdict, probes: vec![(Endpoint::Zero, probe)], warnings: Vec::new() });
    }
    let mut c = classify_and_integrate(|z, zc| lowner_kernel_split(z, zc) * rho(z, zc), &[Endpoint::Zero, Endpoint::One], 1e-12, 0.0)?;
    if let QuadratureVerdict::Finite(r) = &mut c.verdict {
        r.value += atoms;
    }
    Ok(c)
}
