use num_bigint::BigInt;
use num_traits::One;

use super::exact::PiMonomial;
use crate::error::{Error, Result};

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Exact `Γ(two_z / 2)` for a positive integer `two_z`:
/// `Γ(m) = (m-1)!` and `Γ(m + 1/2) = (2m)! / (4^m m!) · √π`.
pub fn gamma_half_integer(two_z: u64) -> Result<PiMonomial> {
    if two_z == 0 {
        return Err(Error::domain("gamma is undefined at 0"));
    }
    if two_z.is_multiple_of(2) {
        return Ok(PiMonomial::integer(factorial(two_z / 2 - 1)));
    }
    let m = (two_z - 1) / 2;
    let den = num_traits::pow(BigInt::from(4), m as usize) * factorial(m);
    Ok(PiMonomial::ratio(factorial(2 * m), den) * PiMonomial::sqrt_pi())
}

/// `Some(2z)` when `z` is a positive integer or half-integer.
pub(crate) fn as_half_integer(z: f64) -> Option<u64> {
    let t = 2.0 * z;
    (t >= 1.0 && t == t.round() && t < 1e15).then_some(t as u64)
}

pub fn gamma(z: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(Error::domain(format!("gamma requires a positive argument, got {z}")));
    }
    if let Some(t) = as_half_integer(z) {
        if t <= 340 {
            return Ok(gamma_half_integer(t)?.to_f64());
        }
    }
    Ok(statrs::function::gamma::gamma(z))
}

pub fn ln_gamma(z: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(Error::domain(format!("log-gamma requires a positive argument, got {z}")));
    }
    if let Some(t) = as_half_integer(z) {
        if t <= 2000 {
            return Ok(gamma_half_integer(t)?.ln_abs());
        }
    }
    Ok(statrs::function::gamma::ln_gamma(z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn known_values() {
        assert_eq!(gamma_half_integer(1).unwrap(), PiMonomial::sqrt_pi());
        assert_eq!(gamma_half_integer(10).unwrap(), PiMonomial::integer(24));
        assert_eq!(gamma_half_integer(7).unwrap(), PiMonomial::ratio(15, 8) * PiMonomial::sqrt_pi());
        assert!((gamma(0.5).unwrap() - PI.sqrt()).abs() < 1e-15);
        assert_eq!(gamma(5.0).unwrap(), 24.0);
        assert!((gamma(3.5).unwrap() - 15.0 * PI.sqrt() / 8.0).abs() < 1e-14);
    }

    #[test]
    fn generic_arguments() {
        // Γ(1/3) from a reference table
        let g = gamma(1.0 / 3.0).unwrap();
        assert!((g - 2.678_938_534_707_747_6).abs() < 1e-13 * g);
        assert!((ln_gamma(100.5).unwrap() - gamma_half_integer(201).unwrap().ln_abs()).abs() < 1e-12);
        assert!((ln_gamma(2.3).unwrap() - gamma(2.3).unwrap().ln()).abs() < 1e-13);
    }

    #[test]
    fn nonpositive_arguments_are_rejected() {
        assert!(gamma(0.0).is_err());
        assert!(gamma(-1.5).is_err());
        assert!(ln_gamma(-0.0).is_err());
        assert!(gamma_half_integer(0).is_err());
    }

    #[test]
    fn recurrence_holds() {
        for &z in &[0.3, 1.7, 4.25, 9.9] {
            let lhs = gamma(z + 1.0).unwrap();
            let rhs = z * gamma(z).unwrap();
            assert!((lhs - rhs).abs() < 1e-13 * rhs);
        }
    }
}
