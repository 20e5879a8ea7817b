//! Closed-form Lebesgue volumes of the state spaces and the moments
//! `E[det^α]` under the normalized Lebesgue measure.
//!
//! Two routes are provided. [`volume_lebesgue`] and [`expected_det_alpha`]
//! evaluate the closed forms; [`lebesgue_integral_det_alpha_exact`]
//! assembles the same quantities from the column-by-column ellipsoid
//! integrals `Π_j F_{jd-1} G_{jd-1,(n-1-j)d/2+α}` and the simplex moment of
//! the diagonal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::algebra::ScalarField;
use crate::error::{Error, Result};
use crate::special::{
    as_half_integer, g, g_exact, gamma_half_integer, ln_gamma, simplex_moment, simplex_moment_exact, sphere_surface, sphere_surface_exact,
    ExactVolume, PiMonomial,
};

fn fact(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn prod_fact(range: impl Iterator<Item = u64>) -> BigInt {
    range.fold(BigInt::one(), |acc, m| acc * fact(m))
}

/// Exact Lebesgue volume of the faithful `n × n` states over `field`, in the
/// coordinates `(a_11, …, a_{n-1,n-1})` plus the real components of the
/// strict upper triangle.
///
/// `n = 1` is a single point and returns 1.
pub fn volume_lebesgue(field: ScalarField, n: usize) -> Result<ExactVolume> {
    if n == 0 {
        return Err(Error::domain("state space dimension must be at least 1"));
    }
    if n == 1 {
        return Ok(ExactVolume::one());
    }
    let n = n as u64;
    let (coeff, pi_pow) = match field {
        ScalarField::Real if n.is_multiple_of(2) => {
            let k = n / 2;
            let num = fact(2 * k) * prod_fact((1..k).map(|i| 2 * i));
            let den = num_traits::pow(BigInt::from(2), (k * k + k) as usize) * fact(k) * fact(2 * k * k + k - 1);
            (BigRational::new(num, den), k * k)
        }
        ScalarField::Real => {
            // The odd case carries no (k-1)! in the denominator; with it the
            // value disagrees with the assembled integral from n = 7 on.
            let k = (n - 1) / 2;
            let num = fact(2 * k) * prod_fact((1..k).map(|i| 2 * i));
            let den = num_traits::pow(BigInt::from(2), (k * k + k) as usize) * fact(2 * k * k + 3 * k);
            (BigRational::new(num, den), k * k + k)
        }
        ScalarField::Complex => {
            let num = prod_fact(1..n);
            (BigRational::new(num, fact(n * n - 1)), n * (n - 1) / 2)
        }
        ScalarField::Quaternion => {
            let num = fact(2 * n - 2) * prod_fact((1..n - 1).map(|i| 2 * i));
            (BigRational::new(num, fact(2 * n * n - n - 1)), n * n - n)
        }
    };
    Ok(ExactVolume::new(coeff, pi_pow as u32))
}

/// Exact `∫ det(A)^α dλ` over the state space for `α = two_alpha / 2`,
/// assembled from the nested ellipsoid integrals.
pub fn lebesgue_integral_det_alpha_exact(field: ScalarField, n: usize, two_alpha: u32) -> Result<PiMonomial> {
    if n == 0 {
        return Err(Error::domain("state space dimension must be at least 1"));
    }
    if n == 1 {
        return Ok(PiMonomial::one());
    }
    let d = field.dim() as u32;
    let n = n as u32;
    let columns: PiMonomial = (1..n).map(|j| sphere_surface_exact(j * d) * g_exact(j * d - 1, (n - 1 - j) * d + two_alpha)).product();
    Ok(columns * simplex_moment_exact(n, (n - 1) * d + two_alpha))
}

/// Floating version of [`lebesgue_integral_det_alpha_exact`] for any `α >= 0`.
pub fn lebesgue_integral_det_alpha(field: ScalarField, n: usize, alpha: f64) -> Result<f64> {
    if !(alpha >= 0.0) {
        return Err(Error::domain(format!("alpha must be >= 0, got {alpha}")));
    }
    if let Some(t) = as_half_integer(alpha + 1.0) {
        return Ok(lebesgue_integral_det_alpha_exact(field, n, (t - 2) as u32)?.to_f64());
    }
    if n < 2 {
        return volume_lebesgue(field, n).map(|v| v.value());
    }
    let d = field.dim() as u32;
    let n32 = n as u32;
    let mut acc = 1.0;
    for j in 1..n32 {
        acc *= sphere_surface(j * d)? * g((j * d - 1) as f64, ((n32 - 1 - j) * d) as f64 / 2.0 + alpha)?;
    }
    Ok(acc * simplex_moment(n32, ((n32 - 1) * d) as f64 / 2.0 + alpha)?)
}

/// `E[det^α]` with its exact form when one exists.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DetMoment {
    pub value: f64,
    #[serde(skip)]
    pub exact: Option<PiMonomial>,
}

/// `E[det^α]` under the normalized Lebesgue measure, from the Γ-ratio
/// closed forms. Exact whenever `2α` is an integer.
pub fn expected_det_alpha(field: ScalarField, n: usize, alpha: f64) -> Result<DetMoment> {
    if n == 0 {
        return Err(Error::domain("state space dimension must be at least 1"));
    }
    if !(alpha >= 0.0) {
        return Err(Error::domain(format!("alpha must be >= 0, got {alpha}")));
    }
    // Every Γ argument below is (twice) `numer + alpha_mult · 2α`, halved.
    let terms = gamma_ratio_terms(field, n as u64);
    if let Some(t) = as_half_integer(alpha + 1.0) {
        let two_alpha = t - 2;
        let eval = |(two_base, mult): (u64, u64)| gamma_half_integer(two_base + mult * two_alpha);
        let mut acc = PiMonomial::one();
        for &term in &terms.num {
            acc = acc * eval(term)?;
        }
        for &term in &terms.den {
            acc = acc / eval(term)?;
        }
        return Ok(DetMoment { value: acc.to_f64(), exact: Some(acc) });
    }
    let lg = |(two_base, mult): (u64, u64)| ln_gamma((two_base as f64 + mult as f64 * 2.0 * alpha) / 2.0);
    let mut ln = 0.0;
    for &term in &terms.num {
        ln += lg(term)?;
    }
    for &term in &terms.den {
        ln -= lg(term)?;
    }
    Ok(DetMoment { value: ln.exp(), exact: None })
}

/// Γ arguments as `(2·base, multiplier of α)` pairs, so that the argument is
/// `base + multiplier · α`.
struct GammaRatio {
    num: Vec<(u64, u64)>,
    den: Vec<(u64, u64)>,
}

fn gamma_ratio_terms(field: ScalarField, n: u64) -> GammaRatio {
    let mut num = Vec::new();
    let mut den = Vec::new();
    match field {
        ScalarField::Real => {
            num.push((n * n + n, 0));
            den.push((n + 1, 0));
            num.push((n + 1, 1));
            den.push((n * n + n, n));
            for i in 1..n {
                num.push((i + 1, 1));
                den.push((i + 1, 0));
            }
        }
        ScalarField::Complex => {
            num.push((2 * n * n, 0));
            den.push((2 * n, 0));
            num.push((2 * n, 1));
            den.push((2 * n * n, n));
            for i in 1..n {
                num.push((2 * i, 1));
                den.push((2 * i, 0));
            }
        }
        ScalarField::Quaternion => {
            num.push((2 * (2 * n * n - n), 0));
            den.push((2 * (2 * n - 1), 0));
            num.push((2 * (2 * n - 1), 1));
            den.push((2 * (2 * n * n - n), n));
            for i in 1..n {
                num.push((2 * (2 * i - 1), 1));
                den.push((2 * (2 * i - 1), 0));
            }
        }
    }
    GammaRatio { num, den }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn ev(num: i64, den: i64, pi: u32) -> ExactVolume {
        ExactVolume::new(BigRational::new(num.into(), den.into()), pi)
    }

    #[test]
    fn worked_examples() {
        assert_eq!(volume_lebesgue(ScalarField::Real, 3).unwrap(), ev(1, 240, 2));
        assert_eq!(volume_lebesgue(ScalarField::Real, 4).unwrap(), ev(3, 8 * 362_880, 4));
        assert_eq!(volume_lebesgue(ScalarField::Real, 2).unwrap(), ev(1, 4, 1));
        assert_eq!(volume_lebesgue(ScalarField::Complex, 2).unwrap(), ev(1, 6, 1));
        assert_eq!(volume_lebesgue(ScalarField::Quaternion, 2).unwrap(), ev(1, 60, 2));
        assert_eq!(volume_lebesgue(ScalarField::Complex, 3).unwrap(), ev(1, 20_160, 3));
        assert_eq!(volume_lebesgue(ScalarField::Real, 1).unwrap(), ExactVolume::one());
        assert!(volume_lebesgue(ScalarField::Real, 0).is_err());
    }

    #[test]
    fn real_two_by_two_area() {
        // ∫₀¹ 2√(a(1-a)) da = π/4, by the midpoint rule
        let m = 200_000;
        let h = 1.0 / m as f64;
        let s: f64 = (0..m)
            .map(|i| {
                let a = (i as f64 + 0.5) * h;
                2.0 * (a * (1.0 - a)).sqrt() * h
            })
            .sum();
        assert!((s - PI / 4.0).abs() < 1e-6);
    }

    #[test]
    fn three_by_three_step_by_step() {
        // F_1 F_0 G_{1,0} G_{0,1/2} · simplex_moment(3, 1)
        let steps = sphere_surface_exact(2) * sphere_surface_exact(1) * g_exact(1, 0) * g_exact(0, 1) * simplex_moment_exact(3, 2);
        assert_eq!(ExactVolume::try_from(steps).unwrap(), ev(1, 240, 2));
        // and the four-dimensional pipeline F_2 F_1 F_0 G_{2,0} G_{1,1/2} G_{0,1} · Γ(5/2)^4/Γ(10)
        let steps4 = sphere_surface_exact(3)
            * sphere_surface_exact(2)
            * sphere_surface_exact(1)
            * g_exact(2, 0)
            * g_exact(1, 1)
            * g_exact(0, 2)
            * simplex_moment_exact(4, 3);
        assert_eq!(ExactVolume::try_from(steps4).unwrap(), ev(3, 8 * 362_880, 4));
    }

    #[test]
    fn closed_forms_match_assembled_integrals() {
        for field in ScalarField::ALL {
            for n in 1..=12 {
                let closed = volume_lebesgue(field, n).unwrap();
                let assembled = ExactVolume::try_from(lebesgue_integral_det_alpha_exact(field, n, 0).unwrap()).unwrap();
                assert_eq!(closed, assembled, "{field} n={n}");
            }
        }
    }

    #[test]
    fn det_moment_examples() {
        for field in ScalarField::ALL {
            for n in 1..6 {
                assert_eq!(expected_det_alpha(field, n, 0.0).unwrap().exact, Some(PiMonomial::one()));
            }
        }
        assert_eq!(expected_det_alpha(ScalarField::Real, 2, 1.0).unwrap().exact, Some(PiMonomial::ratio(1, 8)));
        assert_eq!(expected_det_alpha(ScalarField::Complex, 2, 1.0).unwrap().exact, Some(PiMonomial::ratio(1, 10)));
        assert!(expected_det_alpha(ScalarField::Real, 2, -1.0).is_err());
    }

    #[test]
    fn real_two_by_two_det_moment_by_quadrature() {
        // (4/π) ∫₀¹ (4/3) (a(1-a))^{3/2} da = 1/8
        let m = 200_000;
        let h = 1.0 / m as f64;
        let s: f64 = (0..m)
            .map(|i| {
                let a = (i as f64 + 0.5) * h;
                (4.0 / 3.0) * (a * (1.0 - a)).powf(1.5) * h
            })
            .sum();
        assert!((4.0 / PI * s - 0.125).abs() < 1e-9);
    }

    #[test]
    fn moment_times_volume_is_the_assembled_integral() {
        for field in ScalarField::ALL {
            for n in 2..=5 {
                let vol = volume_lebesgue(field, n).unwrap().value();
                for &alpha in &[0.0, 0.5, 1.0, 2.0, 0.3, 1.7] {
                    let lhs = expected_det_alpha(field, n, alpha).unwrap().value * vol;
                    let rhs = lebesgue_integral_det_alpha(field, n, alpha).unwrap();
                    assert!((lhs - rhs).abs() <= 1e-12 * rhs, "{field} n={n} alpha={alpha}: {lhs} vs {rhs}");
                }
            }
        }
    }

    #[test]
    fn moments_decrease_in_alpha() {
        for field in ScalarField::ALL {
            for n in 2..=5 {
                let vals: Vec<f64> = (0..40).map(|i| expected_det_alpha(field, n, i as f64 * 0.25).unwrap().value).collect();
                assert!(vals.windows(2).all(|w| w[1] < w[0]), "{field} n={n}");
            }
        }
    }

    #[test]
    fn large_n_volumes_stay_finite_in_log_domain() {
        let v = volume_lebesgue(ScalarField::Real, 30).unwrap();
        assert!(v.ln_value().is_finite() && v.ln_value() < 0.0);
        let via_lgamma = lebesgue_integral_det_alpha(ScalarField::Real, 30, 0.0).unwrap();
        assert!(via_lgamma >= 0.0);
    }
}
