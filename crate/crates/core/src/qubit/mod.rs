//! Two-level systems: Stokes coordinates, monotone and pull-back metric
//! volumes as one-dimensional integrals, the Löwner-kernel representation
//! of the complex volume, and the reproduction of the volume table.

mod kernel;
mod stokes;
mod table;
mod volume;

pub use kernel::{lowner_kernel, lowner_kernel_split, volume_from_measure};
pub use stokes::StokesPoint;
pub use table::{
    reproduce_table, table_reference, transpose_dichotomy, QubitVolumeRow, Reference, TableCell, TableRecord, TransposePair, TABLE_ALPHAS,
    TABLE_BETAS, TABLE_GAMMAS, TABLE_TOL,
};
pub use volume::{monotone_integrand, pullback_integrand, qubit_volume_monotone, qubit_volume_monotone_radial, qubit_volume_pullback};
