//! Γ, sphere surfaces, beta-type constants, simplex moments and ellipsoid
//! integrals; exact `rational · √π^k` arithmetic for half-integer arguments.

mod exact;
mod gamma;
mod integrals;

pub use exact::{ExactVolume, PiMonomial};
pub use gamma::{gamma, gamma_half_integer, ln_gamma};
pub use integrals::{ellipsoid_integral, g, g_exact, simplex_moment, simplex_moment_exact, sphere_surface, sphere_surface_exact};

pub(crate) use gamma::as_half_integer;
