//! Operator monotone generators, admissible pull-back functions, the
//! volume densities of the metrics they generate, and Löwner measures.

mod admissible;
mod density;
mod lowner;
mod monotone;

pub use admissible::AdmissibleFunction;
pub use density::{
    divided_difference, m_weight, sqrt_det_g_monotone, sqrt_det_g_monotone_spectral, sqrt_det_g_pullback, sqrt_det_g_pullback_detailed,
    sqrt_det_g_pullback_spectral, stokes_jacobian, stokes_sqrt_det_g, PullbackDensity, EIGEN_CLAMP,
};
pub use lowner::{Density, LownerMeasure};
pub use monotone::{monotone_catalog, monotone_catalog_swept, MonotoneFunction, MonotoneKind};
