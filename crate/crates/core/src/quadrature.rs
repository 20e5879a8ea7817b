//! Tanh-sinh quadrature on `(0, 1)` and endpoint-exponent probing.
//!
//! Integrands are passed in split form `f(x, 1 - x)` so that callers can use
//! the complement directly; near `x = 1` the complement is far more accurate
//! than `1.0 - x`. [`integrate`] wraps single-argument closures.

use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_REL_TOL: f64 = 1e-10;
pub const MAX_LEVEL: u32 = 12;
/// Local exponents at or above this value are treated as divergent.
pub const DIVERGENCE_THRESHOLD: f64 = 0.99;
/// Distances from the endpoint at which the integrand is probed.
pub const PROBE_DISTANCES: [f64; 3] = [1e-4, 1e-6, 1e-8];
pub const PROBE_AGREEMENT: f64 = 0.05;

const MIN_LEVEL: u32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub err_est: f64,
    pub levels_used: u32,
    pub converged: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Endpoint {
    Zero,
    One,
}

impl Endpoint {
    pub fn as_f64(self) -> f64 {
        match self {
            Endpoint::Zero => 0.0,
            Endpoint::One => 1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum QuadratureVerdict {
    Finite(QuadratureResult),
    Infinite { exponent: f64, endpoint: Endpoint },
}

impl QuadratureVerdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, QuadratureVerdict::Finite(_))
    }

    /// The integral value, or `+∞` for a divergent integrand.
    pub fn value(&self) -> f64 {
        match self {
            QuadratureVerdict::Finite(r) => r.value,
            QuadratureVerdict::Infinite { .. } => f64::INFINITY,
        }
    }
}

/// Result of probing the local power `p` in `f ~ dist^{-p}` near an endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ExponentProbe {
    pub exponent: f64,
    pub slopes: [f64; 2],
    pub conclusive: bool,
}

impl ExponentProbe {
    /// Both slopes sit at or above the threshold, so even an inconclusive
    /// probe (a log factor on top of `dist^{-1}`, say) is divergent.
    pub fn is_divergent(&self) -> bool {
        self.slopes.iter().all(|&s| s >= DIVERGENCE_THRESHOLD)
    }
}

/// A node of one refinement level: abscissa, complement and `π cosh t · x(1-x)`.
#[derive(Clone, Copy)]
struct Node {
    x: f64,
    xc: f64,
    w: f64,
}

fn levels() -> &'static [Vec<Node>] {
    static TABLE: OnceLock<Vec<Vec<Node>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let t_max = (690.0 / PI).asinh();
        (0..=MAX_LEVEL)
            .map(|level| {
                let h = 0.5f64.powi(level as i32);
                let step = if level == 0 { 1 } else { 2 };
                let first = if level == 0 { 0 } else { 1 };
                let mut nodes = Vec::new();
                let mut j = first;
                loop {
                    let t = j as f64 * h;
                    if t > t_max {
                        break;
                    }
                    for t in if j == 0 { vec![0.0] } else { vec![t, -t] } {
                        let s = PI * t.sinh();
                        let x = 1.0 / (1.0 + (-s).exp());
                        let xc = 1.0 / (1.0 + s.exp());
                        let w = PI * t.cosh() * x * xc;
                        if w > 0.0 && x > 0.0 && xc > 0.0 {
                            nodes.push(Node { x, xc, w });
                        }
                    }
                    j += step;
                }
                nodes
            })
            .collect()
    })
}

/// Integrate `f(x, 1 - x)` over `(0, 1)`.
///
/// Stops when two successive levels differ by at most
/// `max(rel_tol·|value|, abs_tol)`. Hitting the level cap returns
/// `converged = false` rather than an error.
pub fn integrate_split<F>(f: F, rel_tol: f64, abs_tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64, f64) -> f64,
{
    let mut sum = 0.0;
    let mut prev = f64::NAN;
    let mut last = QuadratureResult { value: f64::NAN, err_est: f64::INFINITY, levels_used: 0, converged: false };
    for (level, nodes) in levels().iter().enumerate() {
        for node in nodes {
            let v = f(node.x, node.xc);
            if !v.is_finite() {
                return Err(Error::NonFiniteIntegrand { x: node.x });
            }
            sum += v * node.w;
        }
        let value = sum * 0.5f64.powi(level as i32);
        let err_est = (value - prev).abs();
        let tol = (rel_tol * value.abs()).max(abs_tol);
        let converged = level as u32 >= MIN_LEVEL && err_est <= tol;
        last = QuadratureResult { value, err_est, levels_used: level as u32, converged };
        if converged {
            break;
        }
        prev = value;
    }
    Ok(last)
}

pub fn integrate<F>(f: F, rel_tol: f64, abs_tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    integrate_split(|x, _| f(x), rel_tol, abs_tol)
}

/// Local exponent of `f(x, 1 - x)` at `endpoint`, from secant slopes of
/// `log f` against `log dist` over [`PROBE_DISTANCES`].
pub fn endpoint_exponent_split<F>(f: F, endpoint: Endpoint) -> Result<ExponentProbe>
where
    F: Fn(f64, f64) -> f64,
{
    let mut logs = [0.0; 3];
    for (slot, &dist) in logs.iter_mut().zip(PROBE_DISTANCES.iter()) {
        let v = match endpoint {
            Endpoint::Zero => f(dist, 1.0 - dist),
            Endpoint::One => f(1.0 - dist, dist),
        };
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::domain(format!("integrand must be positive and finite near the endpoint, got {v} at distance {dist:e}")));
        }
        *slot = v.ln();
    }
    let ld = PROBE_DISTANCES.map(f64::ln);
    let slopes = [-(logs[1] - logs[0]) / (ld[1] - ld[0]), -(logs[2] - logs[1]) / (ld[2] - ld[1])];
    Ok(ExponentProbe { exponent: 0.5 * (slopes[0] + slopes[1]), slopes, conclusive: (slopes[0] - slopes[1]).abs() <= PROBE_AGREEMENT })
}

pub fn endpoint_exponent<F>(f: F, endpoint: Endpoint) -> Result<ExponentProbe>
where
    F: Fn(f64) -> f64,
{
    endpoint_exponent_split(|x, _| f(x), endpoint)
}

/// Outcome of the probe-then-integrate protocol.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classified {
    pub verdict: QuadratureVerdict,
    pub probes: Vec<(Endpoint, ExponentProbe)>,
    pub warnings: Vec<String>,
}

/// Probe each of `endpoints` and integrate only if none diverges.
pub fn classify_and_integrate<F>(f: F, endpoints: &[Endpoint], rel_tol: f64, abs_tol: f64) -> Result<Classified>
where
    F: Fn(f64, f64) -> f64,
{
    let mut probes = Vec::with_capacity(endpoints.len());
    let mut warnings = Vec::new();
    for &endpoint in endpoints {
        let probe = endpoint_exponent_split(&f, endpoint)?;
        probes.push((endpoint, probe));
        if probe.is_divergent() {
            let verdict = QuadratureVerdict::Infinite { exponent: probe.exponent, endpoint };
            return Ok(Classified { verdict, probes, warnings });
        }
        if !probe.conclusive {
            warnings.push(format!(
                "inconclusive exponent at {}: slopes {:.4} and {:.4}",
                endpoint.as_f64(),
                probe.slopes[0],
                probe.slopes[1]
            ));
        }
    }
    let result = integrate_split(&f, rel_tol, abs_tol)?;
    if !result.converged {
        warnings.push(format!("quadrature did not converge (error estimate {:e})", result.err_est));
    }
    Ok(Classified { verdict: QuadratureVerdict::Finite(result), probes, warnings })
}
