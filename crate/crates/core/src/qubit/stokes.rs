use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{Hermitian, ScalarField, SelfAdjointMatrix, SelfAdjointState};
use crate::error::{Error, Result};

/// Bloch-ball coordinates of a qubit state
/// `D = ½ [[1 + x, y + iz], [y - iz, 1 - x]]`; real states have `z = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StokesPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl StokesPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let p = Self { x, y, z };
        if !(p.radius() < 1.0) {
            return Err(Error::domain(format!("Stokes point ({x}, {y}, {z}) is not inside the unit ball")));
        }
        Ok(p)
    }

    pub fn radius(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// `((1 + r)/2, (1 - r)/2)`.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let r = self.radius();
        ((1.0 + r) / 2.0, (1.0 - r) / 2.0)
    }

    /// The state as a matrix over `field`; the real field needs `z = 0`.
    pub fn to_state(&self, field: ScalarField) -> Result<SelfAdjointState> {
        let (a, b) = ((1.0 + self.x) / 2.0, (1.0 - self.x) / 2.0);
        let m: SelfAdjointMatrix = match field {
            ScalarField::Real if self.z == 0.0 => Hermitian::from_fn(2, |i, j| {
                if i != j {
                    self.y / 2.0
                } else if i == 0 {
                    a
                } else {
                    b
                }
            })
            .into(),
            ScalarField::Complex => Hermitian::from_fn(2, |i, j| match (i, j) {
                (0, 0) => Complex64::new(a, 0.0),
                (1, 1) => Complex64::new(b, 0.0),
                _ => Complex64::new(self.y / 2.0, self.z / 2.0),
            })
            .into(),
            _ => return Err(Error::domain(format!("no {field} qubit at ({}, {}, {})", self.x, self.y, self.z))),
        };
        SelfAdjointState::new(m)
    }

    pub fn from_state(state: &SelfAdjointState) -> Result<Self> {
        if state.n() != 2 || state.field() == ScalarField::Quaternion {
            return Err(Error::domain("Stokes coordinates need a real or complex 2x2 state"));
        }
        let m = state.matrix();
        let off = m.entry_components(0, 1);
        let diag = m.diag();
        Self::new(diag[0] - diag[1], 2.0 * off[0], 2.0 * off.get(1).copied().unwrap_or(0.0))
    }
}
