use num_complex::Complex64;

use super::det;
use super::eigen;
use super::matrix::Hermitian;
use super::quaternion::Quaternion;
use super::scalar::{Scalar, ScalarField};
use crate::error::{Error, Result};

/// Self-adjoint matrix tagged with its scalar field.
#[derive(Clone, Debug, PartialEq)]
pub enum SelfAdjointMatrix {
    Real(Hermitian<f64>),
    Complex(Hermitian<Complex64>),
    Quaternion(Hermitian<Quaternion>),
}

macro_rules! dispatch {
    ($value:expr, $m:ident => $body:expr) => {
        match $value {
            SelfAdjointMatrix::Real($m) => $body,
            SelfAdjointMatrix::Complex($m) => $body,
            SelfAdjointMatrix::Quaternion($m) => $body,
        }
    };
}

impl SelfAdjointMatrix {
    pub fn field(&self) -> ScalarField {
        match self {
            SelfAdjointMatrix::Real(_) => ScalarField::Real,
            SelfAdjointMatrix::Complex(_) => ScalarField::Complex,
            SelfAdjointMatrix::Quaternion(_) => ScalarField::Quaternion,
        }
    }

    pub fn n(&self) -> usize {
        dispatch!(self, m => m.n())
    }

    pub fn trace(&self) -> f64 {
        dispatch!(self, m => m.trace())
    }

    pub fn diag(&self) -> Vec<f64> {
        dispatch!(self, m => m.diag())
    }

    pub fn leading_minor_determinants(&self) -> Result<Vec<f64>> {
        dispatch!(self, m => det::leading_minor_determinants(m))
    }

    pub fn is_positive_definite(&self) -> bool {
        dispatch!(self, m => det::is_positive_definite(m))
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        dispatch!(self, m => eigen::eigenvalues(m))
    }

    pub fn sqrt_psd(&self) -> Result<SelfAdjointMatrix> {
        Ok(match self {
            SelfAdjointMatrix::Real(m) => SelfAdjointMatrix::Real(eigen::sqrt_psd(m)?),
            SelfAdjointMatrix::Complex(m) => SelfAdjointMatrix::Complex(eigen::sqrt_psd(m)?),
            SelfAdjointMatrix::Quaternion(m) => SelfAdjointMatrix::Quaternion(eigen::sqrt_psd(m)?),
        })
    }

    /// Real components of entry `(i, j)`, `field().dim()` of them.
    pub fn entry_components(&self, i: usize, j: usize) -> Vec<f64> {
        let d = self.field().dim();
        dispatch!(self, m => m.get(i, j).components()[..d].to_vec())
    }

    /// Lebesgue coordinates of the matrix: the diagonal `a_11..a_nn` followed
    /// by the real components of the strict upper triangle in row-major order.
    pub fn coordinates(&self) -> Vec<f64> {
        let n = self.n();
        let mut out = self.diag();
        for i in 0..n {
            for j in i + 1..n {
                out.extend(self.entry_components(i, j));
            }
        }
        out
    }

    /// Inverse of [`SelfAdjointMatrix::coordinates`].
    pub fn from_coordinates(field: ScalarField, n: usize, coords: &[f64]) -> Result<Self> {
        let d = field.dim();
        let expected = n + d * n * (n - 1) / 2;
        if coords.len() != expected {
            return Err(Error::domain(format!("expected {expected} coordinates for a {field} {n}x{n} matrix, got {}", coords.len())));
        }
        let offset = |i: usize, j: usize| -> usize {
            // index of (i, j), i < j, in the row-major strict upper triangle
            let before: usize = (0..i).map(|r| n - 1 - r).sum();
            n + d * (before + (j - i - 1))
        };
        fn build<S: Scalar>(n: usize, coords: &[f64], d: usize, offset: &dyn Fn(usize, usize) -> usize) -> Hermitian<S> {
            Hermitian::from_fn(n, |i, j| {
                if i == j {
                    S::from_real(coords[i])
                } else {
                    let o = offset(i, j);
                    S::from_components(&coords[o..o + d])
                }
            })
        }
        Ok(match field {
            ScalarField::Real => SelfAdjointMatrix::Real(build(n, coords, d, &offset)),
            ScalarField::Complex => SelfAdjointMatrix::Complex(build(n, coords, d, &offset)),
            ScalarField::Quaternion => SelfAdjointMatrix::Quaternion(build(n, coords, d, &offset)),
        })
    }
}

impl From<Hermitian<f64>> for SelfAdjointMatrix {
    fn from(m: Hermitian<f64>) -> Self {
        SelfAdjointMatrix::Real(m)
    }
}

impl From<Hermitian<Complex64>> for SelfAdjointMatrix {
    fn from(m: Hermitian<Complex64>) -> Self {
        SelfAdjointMatrix::Complex(m)
    }
}

impl From<Hermitian<Quaternion>> for SelfAdjointMatrix {
    fn from(m: Hermitian<Quaternion>) -> Self {
        SelfAdjointMatrix::Quaternion(m)
    }
}

/// Faithful state: positive definite with unit trace.
#[derive(Clone, Debug, PartialEq)]
pub struct SelfAdjointState {
    matrix: SelfAdjointMatrix,
    minors: Vec<f64>,
}

pub const TRACE_TOL: f64 = 1e-12;

impl SelfAdjointState {
    pub fn new(matrix: impl Into<SelfAdjointMatrix>) -> Result<Self> {
        let matrix = matrix.into();
        let tr = matrix.trace();
        if (tr - 1.0).abs() > TRACE_TOL {
            return Err(Error::domain(format!("trace is {tr}, not 1")));
        }
        let minors = matrix.leading_minor_determinants()?;
        if let Some(k) = minors.iter().position(|&d| !(d > 0.0)) {
            return Err(Error::domain(format!("not positive definite: leading minor {} is {:e}", k + 1, minors[k])));
        }
        Ok(SelfAdjointState { matrix, minors })
    }

    /// Maximally mixed state `I / n`.
    pub fn maximally_mixed(field: ScalarField, n: usize) -> Self {
        let d = vec![1.0 / n as f64; n];
        let m = match field {
            ScalarField::Real => SelfAdjointMatrix::Real(Hermitian::diagonal(&d)),
            ScalarField::Complex => SelfAdjointMatrix::Complex(Hermitian::diagonal(&d)),
            ScalarField::Quaternion => SelfAdjointMatrix::Quaternion(Hermitian::diagonal(&d)),
        };
        let minors = (1..=n).map(|k| (1.0 / n as f64).powi(k as i32)).collect();
        SelfAdjointState { matrix: m, minors }
    }

    pub fn matrix(&self) -> &SelfAdjointMatrix {
        &self.matrix
    }

    pub fn field(&self) -> ScalarField {
        self.matrix.field()
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn minors(&self) -> &[f64] {
        &self.minors
    }

    pub fn det(&self) -> f64 {
        *self.minors.last().unwrap_or(&1.0)
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        self.matrix.eigenvalues()
    }
}
