//! Multi-component wave functions as Clebsch-parameterized quantum fluids:
//! the density/phase decomposition, its linear recombination into canonical
//! fluid potentials, spin densities, quantum energies and forces, split-step
//! nonlinear Schroedinger evolution, and the discrete canonical commutation
//! check.

mod ccr;
mod hamiltonian;
mod nls;
mod snapshot;
mod spinor;

pub use ccr::ccr_residual;
pub use hamiltonian::{
    classical_energy, helicity_clebsch, quantum_force, quantum_hamiltonian, quantum_pressure,
    QuantumEnergy,
};
pub use nls::nls_step;
pub use snapshot::{read_spinor_snapshot, write_spinor_snapshot, SpinorSnapshotMeta};
pub use spinor::{clebsch_from_madelung, momentum_density, spin_densities, MadelungData, SpinorField};
