//! Volumes of quantum state spaces over the real, complex and quaternionic
//! numbers.
//!
//! The crate covers three routes to the same quantities:
//!
//! * exact closed forms for the Lebesgue volume and for the moments
//!   `E[det^α]` ([`volumes`]), carried as `rational · π^k`;
//! * an exact uniform sampler plus rejection and functional Monte Carlo
//!   estimators ([`sampling`]), parallel over deterministic RNG streams;
//! * double-exponential quadrature with endpoint divergence probing
//!   ([`quadrature`]) for metric-weighted qubit volumes ([`qubit`]).
//!
//! Monotone (Fisher-type) metrics and pull-back metrics live in [`metrics`].

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod error;
pub mod metrics;
pub mod quadrature;
pub mod qubit;
pub mod sampling;
pub mod special;
pub mod volumes;

pub use algebra::{Quaternion, ScalarField, SelfAdjointMatrix, SelfAdjointState};
pub use error::{Error, Result};
pub use special::ExactVolume;
