use super::exact::PiMonomial;
use super::gamma::{as_half_integer, gamma_half_integer, ln_gamma};
use crate::algebra::ScalarField;
use crate::error::{Error, Result};

/// Exact `F_{n-1} = n π^{n/2} / Γ(n/2 + 1)`, the surface of the unit sphere in `ℝ^n`.
pub fn sphere_surface_exact(n: u32) -> PiMonomial {
    PiMonomial::integer(n) * PiMonomial::new(num_traits::One::one(), n as i32)
        / gamma_half_integer(n as u64 + 2).expect("argument is positive")
}

/// Surface of the unit sphere in `ℝ^n` (`F_0 = 2`, `F_1 = 2π`, `F_2 = 4π`, …).
pub fn sphere_surface(n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("sphere surface needs an ambient dimension n >= 1"));
    }
    Ok(sphere_surface_exact(n).to_f64())
}

/// Exact `G_{a,b}` for integer `a` and `b = two_b / 2`.
pub fn g_exact(a: u32, two_b: u32) -> PiMonomial {
    let num = gamma_half_integer(two_b as u64 + 2).expect("positive") * gamma_half_integer(a as u64 + 1).expect("positive");
    let den = gamma_half_integer(a as u64 + two_b as u64 + 3).expect("positive");
    PiMonomial::ratio(1, 2) * num / den
}

/// `G_{a,b} = ∫₀¹ x^a (1 - x²)^b dx = ½ Γ(b+1) Γ((a+1)/2) / Γ(a/2 + b + 3/2)`.
pub fn g(a: f64, b: f64) -> Result<f64> {
    if !(a >= 0.0 && b >= 0.0) {
        return Err(Error::domain(format!("G needs a, b >= 0, got ({a}, {b})")));
    }
    if a == a.round() && a < 1e6 {
        if let Some(tb) = as_half_integer(b + 1.0) {
            return Ok(g_exact(a as u32, (tb - 2) as u32).to_f64());
        }
    }
    let ln = ln_gamma(b + 1.0)? + ln_gamma((a + 1.0) / 2.0)? - ln_gamma(a / 2.0 + b + 1.5)?;
    Ok(0.5 * ln.exp())
}

/// Exact `∫_{Δ_{n-1}} (Π x_i)^k dλ = Γ(k+1)^n / Γ(n(k+1))` for `k = two_k / 2`.
pub fn simplex_moment_exact(n: u32, two_k: u32) -> PiMonomial {
    let num = gamma_half_integer(two_k as u64 + 2).expect("positive").powu(n);
    let den = gamma_half_integer(n as u64 * (two_k as u64 + 2)).expect("positive");
    num / den
}

pub fn simplex_moment(n: u32, k: f64) -> Result<f64> {
    if n < 2 || !(k >= 0.0) {
        return Err(Error::domain(format!("simplex moment needs n >= 2 and k >= 0, got ({n}, {k})")));
    }
    if let Some(tk) = as_half_integer(k + 1.0) {
        return Ok(simplex_moment_exact(n, (tk - 2) as u32).to_f64());
    }
    let ln = n as f64 * ln_gamma(k + 1.0)? - ln_gamma(n as f64 * (k + 1.0))?;
    Ok(ln.exp())
}

/// `∫_{⟨x,Tx⟩<ρ} (ρ - ⟨x,Tx⟩)^k dλ_m(x)` over an ellipsoid of real dimension `m`.
///
/// `det_t` is the determinant of `T` over its own field (Moore determinant
/// for ℍ); the real quadratic form then has determinant `det_t^d` with
/// `d = field.dim()`, giving `ρ^{m/2+k} F_{m-1} G_{m-1,k} / det_t^{d/2}`.
pub fn ellipsoid_integral(field: ScalarField, m: u32, det_t: f64, rho: f64, k: f64) -> Result<f64> {
    if m == 0 || !(m as usize).is_multiple_of(field.dim()) {
        return Err(Error::domain(format!("real dimension {m} is not a positive multiple of {}", field.dim())));
    }
    if !(det_t > 0.0 && rho > 0.0 && k >= 0.0) {
        return Err(Error::domain("ellipsoid integral needs det T > 0, rho > 0, k >= 0"));
    }
    let d = field.dim() as f64;
    let mf = m as f64;
    Ok(rho.powf(mf / 2.0 + k) * sphere_surface(m)? * g(mf - 1.0, k)? / det_t.powf(d / 2.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn sphere_surfaces() {
        assert_eq!(sphere_surface(1).unwrap(), 2.0);
        assert!(close(sphere_surface(2).unwrap(), 2.0 * PI, 1e-15));
        assert!(close(sphere_surface(4).unwrap(), 2.0 * PI * PI, 1e-15));
        assert!(sphere_surface(0).is_err());
    }

    #[test]
    fn beta_type_constants() {
        assert!(close(g(2.0, 0.0).unwrap(), 1.0 / 3.0, 1e-15));
        assert!(close(g(0.0, 1.0).unwrap(), 2.0 / 3.0, 1e-15));
        // antiderivative -(1-x²)^{3/2}/3
        assert!(close(g(1.0, 0.5).unwrap(), 1.0 / 3.0, 1e-15));
        assert_eq!(g_exact(1, 1), PiMonomial::ratio(1, 3));
        assert!(g(-1.0, 0.0).is_err());
    }

    #[test]
    fn g_gamma_identity_on_grid() {
        for ia in 0..=10 {
            for ib in 0..=10 {
                let (a, b) = (ia as f64 * 0.5, ib as f64 * 0.5);
                let lhs = g(a, b).unwrap() * 2.0 * crate::special::gamma(a / 2.0 + b + 1.5).unwrap();
                let rhs = crate::special::gamma(b + 1.0).unwrap() * crate::special::gamma((a + 1.0) / 2.0).unwrap();
                assert!(close(lhs, rhs, 1e-13), "a={a} b={b}: {lhs} vs {rhs}");
            }
        }
    }

    #[test]
    fn simplex_moments() {
        assert!(close(simplex_moment(2, 1.0).unwrap(), 1.0 / 6.0, 1e-15));
        assert!(close(simplex_moment(3, 0.0).unwrap(), 0.5, 1e-15));
        let g52 = crate::special::gamma(2.5).unwrap();
        assert!(close(simplex_moment(4, 1.5).unwrap(), g52.powi(4) / 362_880.0, 1e-14));
        assert!(simplex_moment(1, 1.0).is_err());
        // generic exponent goes through log-gamma
        let k = 0.3;
        let direct = crate::special::gamma(k + 1.0).unwrap().powi(3) / crate::special::gamma(3.0 * (k + 1.0)).unwrap();
        assert!(close(simplex_moment(3, k).unwrap(), direct, 1e-12));
    }

    #[test]
    fn ellipsoid_examples() {
        assert!(close(ellipsoid_integral(ScalarField::Real, 2, 1.0, 1.0, 0.0).unwrap(), PI, 1e-15));
        let (a, b) = (0.4, 0.35);
        assert!(close(ellipsoid_integral(ScalarField::Real, 1, 1.0, a * b, 0.5).unwrap(), PI * a * b / 2.0, 1e-14));
        assert!(close(ellipsoid_integral(ScalarField::Complex, 2, 1.0, 1.0, 0.0).unwrap(), PI, 1e-15));
        assert!(ellipsoid_integral(ScalarField::Quaternion, 2, 1.0, 1.0, 0.0).is_err());
    }
}
