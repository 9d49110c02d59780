//! Three-dimensional Lie algebras, Nambu triple brackets, and the
//! Lie-Poisson systems they generate.
//!
//! The triple-product bracket on R^3 with a quadratic second Hamiltonian is
//! equivalent to a Lie-Poisson bracket; which Lie algebra appears is decided
//! by the second Hamiltonian, realized here as the deformation of the
//! rotation-algebra structure constants by a matrix. All bracket axioms
//! (antisymmetry, Jacobi, the derivation/fundamental identity) are exposed as
//! numeric residuals.

mod lie;
mod observable;
mod poisson;

pub use lie::{
    deform, euler_top_rhs, jacobi_residual, lie_bracket, lie_poisson_matrix, nambu_bracket,
    BianchiType, LieAlgebra3,
};
pub use observable::{finite_difference_gradient, Observable};
pub use poisson::{
    antisymmetry_residual, casimir_check, fundamental_identity_residual, poisson_bracket,
    triple_bracket, PoissonSystem,
};
