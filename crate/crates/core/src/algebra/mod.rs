//! Self-adjoint linear algebra over ℝ, ℂ and ℍ.

mod det;
mod eigen;
mod matrix;
mod quaternion;
mod scalar;
mod state;

pub use det::{det_diag_plus_constant, embed_complex, is_positive_definite, leading_minor_determinants, qdet};
pub use eigen::{eigenvalues, eigh, sqrt_psd, Eigen};
pub use matrix::{complex_det, Hermitian};
pub use quaternion::Quaternion;
pub use scalar::{Scalar, ScalarField};
pub use state::{SelfAdjointMatrix, SelfAdjointState};
