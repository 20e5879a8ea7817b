use std::fmt::{self, Debug};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::matrix::Hermitian;
use super::quaternion::Quaternion;
use crate::error::Error;

/// The scalar field a state space is built over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarField {
    Real,
    Complex,
    Quaternion,
}

impl ScalarField {
    pub const ALL: [ScalarField; 3] = [ScalarField::Real, ScalarField::Complex, ScalarField::Quaternion];

    /// Number of real components of an off-diagonal entry.
    pub const fn dim(self) -> usize {
        match self {
            ScalarField::Real => 1,
            ScalarField::Complex => 2,
            ScalarField::Quaternion => 4,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            ScalarField::Real => "real",
            ScalarField::Complex => "complex",
            ScalarField::Quaternion => "quaternion",
        }
    }

    /// Real dimension of the state space of `n × n` matrices.
    pub const fn state_space_dim(self, n: usize) -> usize {
        if n == 0 {
            return 0;
        }
        n - 1 + self.dim() * n * (n - 1) / 2
    }
}

impl fmt::Display for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScalarField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "real" | "r" => Ok(ScalarField::Real),
            "complex" | "c" => Ok(ScalarField::Complex),
            "quaternion" | "quaternionic" | "h" => Ok(ScalarField::Quaternion),
            other => Err(Error::domain(format!("unknown scalar field `{other}`"))),
        }
    }
}

/// Matrix entry type: one of `f64`, `Complex64`, [`Quaternion`].
///
/// Multiplication need not commute; every routine generic over `Scalar`
/// keeps operand order as written.
pub trait Scalar:
    Copy + Debug + PartialEq + Send + Sync + 'static + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    const FIELD: ScalarField;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_real(r: f64) -> Self;
    fn re(self) -> f64;
    fn conj(self) -> Self;
    fn norm_sqr(self) -> f64;
    fn inv(self) -> Self;
    fn scale(self, s: f64) -> Self;

    /// Real components, `FIELD.dim()` of them.
    fn components(self) -> [f64; 4];
    fn from_components(c: &[f64]) -> Self;

    /// Complex representation: the identity map for real and complex
    /// matrices, the `2n × 2n` symplectic embedding for quaternionic ones.
    fn embed(m: &Hermitian<Self>) -> Hermitian<Complex64>;

    /// Inverse of [`Scalar::embed`] on matrices of embedded form.
    fn extract(c: &Hermitian<Complex64>) -> Hermitian<Self>;
}

impl Scalar for f64 {
    const FIELD: ScalarField = ScalarField::Real;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_real(r: f64) -> Self {
        r
    }
    fn re(self) -> f64 {
        self
    }
    fn conj(self) -> Self {
        self
    }
    fn norm_sqr(self) -> f64 {
        self * self
    }
    fn inv(self) -> Self {
        1.0 / self
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn components(self) -> [f64; 4] {
        [self, 0.0, 0.0, 0.0]
    }
    fn from_components(c: &[f64]) -> Self {
        c[0]
    }
    fn embed(m: &Hermitian<Self>) -> Hermitian<Complex64> {
        m.map(|x| Complex64::new(x, 0.0))
    }
    fn extract(c: &Hermitian<Complex64>) -> Hermitian<Self> {
        c.map(|z| z.re)
    }
}

impl Scalar for Complex64 {
    const FIELD: ScalarField = ScalarField::Complex;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_real(r: f64) -> Self {
        Complex64::new(r, 0.0)
    }
    fn re(self) -> f64 {
        self.re
    }
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
    fn norm_sqr(self) -> f64 {
        Complex64::norm_sqr(&self)
    }
    fn inv(self) -> Self {
        Complex64::inv(&self)
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn components(self) -> [f64; 4] {
        [self.re, self.im, 0.0, 0.0]
    }
    fn from_components(c: &[f64]) -> Self {
        Complex64::new(c[0], c[1])
    }
    fn embed(m: &Hermitian<Self>) -> Hermitian<Complex64> {
        m.clone()
    }
    fn extract(c: &Hermitian<Complex64>) -> Hermitian<Self> {
        c.clone()
    }
}

impl Scalar for Quaternion {
    const FIELD: ScalarField = ScalarField::Quaternion;

    fn zero() -> Self {
        Quaternion::ZERO
    }
    fn one() -> Self {
        Quaternion::ONE
    }
    fn from_real(r: f64) -> Self {
        Quaternion::real(r)
    }
    fn re(self) -> f64 {
        self.w
    }
    fn conj(self) -> Self {
        Quaternion::conj(self)
    }
    fn norm_sqr(self) -> f64 {
        Quaternion::norm_sqr(self)
    }
    fn inv(self) -> Self {
        Quaternion::inv(self)
    }
    fn scale(self, s: f64) -> Self {
        Quaternion::scale(self, s)
    }
    fn components(self) -> [f64; 4] {
        self.to_array()
    }
    fn from_components(c: &[f64]) -> Self {
        Quaternion::new(c[0], c[1], c[2], c[3])
    }

    // q = α + β j  ↦  [[α, β], [-conj(β), conj(α)]], laid out as
    // [[A, B], [-conj(B), conj(A)]] with A, B the n × n blocks of α, β.
    fn embed(m: &Hermitian<Self>) -> Hermitian<Complex64> {
        let n = m.n();
        let mut out = vec![Complex64::new(0.0, 0.0); 4 * n * n];
        let w = 2 * n;
        for i in 0..n {
            for j in 0..n {
                let (a, b) = m.get(i, j).to_complex_pair();
                out[i * w + j] = a;
                out[i * w + j + n] = b;
                out[(i + n) * w + j] = -b.conj();
                out[(i + n) * w + j + n] = a.conj();
            }
        }
        Hermitian::from_raw(w, out)
    }

    fn extract(c: &Hermitian<Complex64>) -> Hermitian<Self> {
        let w = c.n();
        let n = w / 2;
        Hermitian::from_fn(n, |i, j| Quaternion::from_complex_pair(c.get(i, j), c.get(i, j + n)))
    }
}
