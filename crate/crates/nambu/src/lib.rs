//! Nambu mechanics as Clebsch-parameterized Poisson algebras.
//!
//! The triple-product bracket on R^3 generates rigid-body dynamics from two
//! Hamiltonians; fixing the second one turns it into a Lie-Poisson bracket
//! whose Casimir is that Hamiltonian. This crate builds that correspondence
//! end to end, at desk scale, with every structural identity exposed as a
//! numeric residual:
//!
//! - [`algebra3`]: 3-dimensional Lie algebras (the full Bianchi catalog),
//!   Nambu triple brackets, Lie-Poisson matrices, matrix deformations of the
//!   rotation bracket, and residual engines for antisymmetry, Jacobi, the
//!   derivation identity, and Casimir membership.
//! - [`clebsch`]: canonicalization maps -- the angular-momentum reduction
//!   from R^6, the spin (Cayley-Klein) reduction from R^4, gauge angles
//!   conjugate to the Casimirs, and reduction-equivalence residuals.
//! - [`integrate`]: rk4 and implicit-midpoint steppers, trajectory
//!   recording with invariant series, and the three-realization comparison
//!   of the rigid body.
//! - [`field`]: pseudo-spectral operators on the periodic box, the
//!   vorticity equation with its helicity Casimir, the compressible
//!   barotropic fluid, and its canonical (Clebsch) parameterization.
//! - [`madelung`]: multi-component wave functions as quantum fluids --
//!   density/phase splitting, spin densities, two-route quantum energies,
//!   split-step Schroedinger evolution, quantum pressure and force, and the
//!   discrete canonical commutation check.
//! - [`config`] / [`runner`]: the configuration-driven experiment runner
//!   behind the `nambu` binary.
//!
//! Every runnable capability has a worked example under `examples/`.

// Index loops over structure-constant tensors read better than iterator
// chains here.
#![allow(clippy::needless_range_loop)]

pub mod algebra3;
pub mod clebsch;
pub mod config;
pub mod error;
pub mod field;
pub mod integrate;
pub mod madelung;
pub mod output;
pub mod runner;
pub mod vec3;

pub use error::{Error, Result};
