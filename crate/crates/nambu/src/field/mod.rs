//! Pseudo-spectral operators and ideal-fluid dynamics on the periodic box
//! [0, 2pi)^3: curl and its inverse on the divergence-free subspace, the
//! vorticity equation, the compressible barotropic fluid, and its canonical
//! (Clebsch) parameterization.

mod clebsch_fluid;
mod fields;
mod fluid;
mod grid;
mod snapshot;
pub(crate) mod spectral;
mod vortex;

#[cfg(test)]
pub(crate) mod oracle;

pub use clebsch_fluid::{clebsch_rhs, clebsch_step_rk4, clebsch_velocity, ClebschFields, ClebschRate};
pub use fields::{ScalarField, VectorField3, VorticityField};
pub(crate) use fluid::ensure_above_floor;
pub use fluid::{
    energy_gradient, fluid_energy, fluid_helicity, fluid_poisson_apply, fluid_rhs, fluid_step_rk4,
    total_mass, BarotropicEos, FluidState, RHO_FLOOR,
};
pub use grid::Grid3;
pub use snapshot::{read_scalar_snapshot, write_scalar_snapshot, SnapshotMeta};
pub use vortex::{
    beltrami, helicity, inv_curl, kinetic_energy, random_band_limited_scalar, random_vorticity,
    vortex_rhs, vortex_step_rk4,
};
