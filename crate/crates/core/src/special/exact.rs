use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `coeff · (√π)^half_pow` with an exact rational coefficient.
///
/// Closed under products and quotients, which is all the Γ-ratio formulas
/// need when every Γ argument is an integer or a half-integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiMonomial {
    pub coeff: BigRational,
    pub half_pow: i32,
}

impl PiMonomial {
    pub fn new(coeff: BigRational, half_pow: i32) -> Self {
        PiMonomial { coeff, half_pow }
    }

    pub fn one() -> Self {
        PiMonomial::new(BigRational::one(), 0)
    }

    pub fn integer(v: impl Into<BigInt>) -> Self {
        PiMonomial::new(BigRational::from_integer(v.into()), 0)
    }

    pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        PiMonomial::new(BigRational::new(num.into(), den.into()), 0)
    }

    /// `π^k`.
    pub fn pi_pow(k: i32) -> Self {
        PiMonomial::new(BigRational::one(), 2 * k)
    }

    pub fn sqrt_pi() -> Self {
        PiMonomial::new(BigRational::one(), 1)
    }

    pub fn powu(&self, e: u32) -> Self {
        PiMonomial::new(num_traits::pow(self.coeff.clone(), e as usize), self.half_pow * e as i32)
    }

    pub fn is_rational(&self) -> bool {
        self.half_pow == 0 || self.coeff.is_zero()
    }

    /// Natural log of the absolute value.
    pub fn ln_abs(&self) -> f64 {
        ln_rational(&self.coeff) + 0.5 * self.half_pow as f64 * std::f64::consts::PI.ln()
    }

    pub fn to_f64(&self) -> f64 {
        if self.coeff.is_zero() {
            return 0.0;
        }
        let pi_part = pi_half_power(self.half_pow);
        if let Some(c) = self.coeff.to_f64() {
            let v = c * pi_part;
            if v.is_normal() {
                return v;
            }
        }
        let sign = if self.coeff.is_negative() { -1.0 } else { 1.0 };
        sign * self.ln_abs().exp()
    }
}

fn pi_half_power(h: i32) -> f64 {
    let pi = std::f64::consts::PI;
    let whole = pi.powi(h.div_euclid(2));
    if h.rem_euclid(2) == 1 {
        whole * pi.sqrt()
    } else {
        whole
    }
}

fn ln_bigint(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits < 1000 {
        return x.abs().to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 900;
    let top: BigInt = x.abs() >> shift;
    top.to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * std::f64::consts::LN_2
}

pub(crate) fn ln_rational(r: &BigRational) -> f64 {
    ln_bigint(r.numer()) - ln_bigint(r.denom())
}

impl Mul for PiMonomial {
    type Output = PiMonomial;
    fn mul(self, o: PiMonomial) -> PiMonomial {
        PiMonomial::new(self.coeff * o.coeff, self.half_pow + o.half_pow)
    }
}

impl<'a> Mul<&'a PiMonomial> for PiMonomial {
    type Output = PiMonomial;
    fn mul(self, o: &'a PiMonomial) -> PiMonomial {
        PiMonomial::new(self.coeff * &o.coeff, self.half_pow + o.half_pow)
    }
}

impl Div for PiMonomial {
    type Output = PiMonomial;
    fn div(self, o: PiMonomial) -> PiMonomial {
        PiMonomial::new(self.coeff / o.coeff, self.half_pow - o.half_pow)
    }
}

impl std::iter::Product for PiMonomial {
    fn product<I: Iterator<Item = PiMonomial>>(iter: I) -> Self {
        iter.fold(PiMonomial::one(), |a, b| a * b)
    }
}

impl fmt::Display for PiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pi = match self.half_pow {
            0 => String::new(),
            1 => "sqrt(pi)".to_string(),
            -1 => "/sqrt(pi)".to_string(),
            h if h % 2 == 0 => match h / 2 {
                1 => "pi".to_string(),
                -1 => "/pi".to_string(),
                k if k > 0 => format!("pi^{k}"),
                k => format!("/pi^{}", -k),
            },
            h if h > 0 => format!("pi^({h}/2)"),
            h => format!("/pi^({}/2)", -h),
        };
        render(f, &self.coeff, &pi)
    }
}

fn render(f: &mut fmt::Formatter<'_>, coeff: &BigRational, pi: &str) -> fmt::Result {
    let num = coeff.numer();
    let den = coeff.denom();
    let (num_txt, pi_txt) = if pi.is_empty() {
        (num.to_string(), String::new())
    } else if pi.starts_with('/') {
        (num.to_string(), pi.to_string())
    } else if num.is_one() {
        (String::new(), pi.to_string())
    } else if (-num.clone()).is_one() {
        ("-".to_string(), pi.to_string())
    } else {
        (num.to_string(), format!("*{pi}"))
    };
    write!(f, "{num_txt}{pi_txt}")?;
    if !den.is_one() {
        write!(f, "/{den}")?;
    }
    Ok(())
}

/// Exact volume `coeff · π^pi_pow`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactVolume {
    pub coeff: BigRational,
    pub pi_pow: u32,
}

impl ExactVolume {
    pub fn new(coeff: BigRational, pi_pow: u32) -> Self {
        ExactVolume { coeff, pi_pow }
    }

    pub fn one() -> Self {
        ExactVolume::new(BigRational::one(), 0)
    }

    /// Decimal value; falls back to the log domain when the rational
    /// coefficient does not fit an `f64`.
    pub fn value(&self) -> f64 {
        self.as_monomial().to_f64()
    }

    pub fn ln_value(&self) -> f64 {
        self.as_monomial().ln_abs()
    }

    pub fn as_monomial(&self) -> PiMonomial {
        PiMonomial::new(self.coeff.clone(), 2 * self.pi_pow as i32)
    }
}

impl TryFrom<PiMonomial> for ExactVolume {
    type Error = Error;

    fn try_from(m: PiMonomial) -> Result<Self> {
        if m.half_pow < 0 || m.half_pow % 2 != 0 {
            return Err(Error::domain(format!("{m} is not a rational multiple of an integer power of pi")));
        }
        Ok(ExactVolume::new(m.coeff, (m.half_pow / 2) as u32))
    }
}

impl fmt::Display for ExactVolume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pi = match self.pi_pow {
            0 => String::new(),
            1 => "pi".to_string(),
            k => format!("pi^{k}"),
        };
        render(f, &self.coeff, &pi)
    }
}
