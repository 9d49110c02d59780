//! Compressible barotropic fluid on the periodic box: Hamiltonian structure,
//! direct equations of motion, and conserved functionals.

use serde::{Deserialize, Serialize};

use super::fields::{ScalarField, VectorField3};
use super::grid::Grid3;
use crate::error::{Error, Result};

/// Density floor below which phase/velocity reconstructions are refused.
pub const RHO_FLOOR: f64 = 1e-8;

/// Reject densities at or below the floor; non-finite minima fail too.
pub(crate) fn ensure_above_floor(min: f64) -> Result<()> {
    if min.is_nan() || min <= RHO_FLOOR {
        return Err(Error::DensityUnderflow {
            min,
            floor: RHO_FLOOR,
        });
    }
    Ok(())
}

/// Barotropic closure: enthalpy `h(rho)` with the internal energy chosen so
/// that `d(rho eps)/d rho = h`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BarotropicEos {
    /// `h = c^2 ln(rho)`, `eps = c^2 (ln(rho) - 1)`.
    Isothermal { c: f64 },
    /// `h = g rho`, `eps = g rho / 2`; the cubic self-interaction of the
    /// defocusing nonlinear Schroedinger equation.
    GrossPitaevskii { g: f64 },
}

impl BarotropicEos {
    pub fn enthalpy(&self, rho: f64) -> f64 {
        match self {
            BarotropicEos::Isothermal { c } => c * c * rho.ln(),
            BarotropicEos::GrossPitaevskii { g } => g * rho,
        }
    }

    pub fn internal_energy(&self, rho: f64) -> f64 {
        match self {
            BarotropicEos::Isothermal { c } => c * c * (rho.ln() - 1.0),
            BarotropicEos::GrossPitaevskii { g } => 0.5 * g * rho,
        }
    }

    pub fn enthalpy_field(&self, rho: &ScalarField) -> ScalarField {
        rho.map(|r| self.enthalpy(r))
    }
}

/// Mass density and velocity of the compressible fluid.
#[derive(Debug, Clone, PartialEq)]
pub struct FluidState {
    pub rho: ScalarField,
    pub v: VectorField3,
}

impl FluidState {
    pub fn new(rho: ScalarField, v: VectorField3) -> Result<Self> {
        ensure_above_floor(rho.min())?;
        Ok(Self { rho, v })
    }

    pub fn grid(&self) -> Grid3 {
        self.rho.grid()
    }

    fn check_floor(&self) -> Result<()> {
        ensure_above_floor(self.rho.min())?;
        Ok(())
    }
}

/// Direct equations of motion:
/// `d rho/dt = -div(v rho)`, `dv/dt = -(v.grad) v - grad h(rho)`,
/// quadratic products dealiased by the two-thirds rule.
pub fn fluid_rhs(u: &FluidState, eos: &BarotropicEos) -> Result<(ScalarField, VectorField3)> {
    u.check_floor()?;
    let mass_flux = u.v.scaled_by_field(&u.rho);
    let rho_dot = mass_flux.divergence().scaled(-1.0).dealiased();

    let grad_h = eos.enthalpy_field(&u.rho).gradient();
    let mut v_dot = grad_h.scaled(-1.0);
    for i in 0..3 {
        let grad_vi = u.v.component(i).gradient();
        let advect = u.v.dot(&grad_vi);
        v_dot.components[i] = v_dot.components[i].add_scaled(&advect, -1.0);
    }
    Ok((rho_dot, v_dot.dealiased()))
}

/// Apply the fluid Poisson operator to a gradient pair `(F_rho, F_v)`:
/// `(-div F_v, -grad F_rho - ((curl v)/rho) x F_v)`.
///
/// With the energy gradient `F_rho = |v|^2/2 + h`, `F_v = rho v` this
/// reproduces [`fluid_rhs`]: the vorticity term turns the advective
/// derivative into its rotational (Lamb) form.
pub fn fluid_poisson_apply(
    u: &FluidState,
    grad: (&ScalarField, &VectorField3),
) -> Result<(ScalarField, VectorField3)> {
    u.check_floor()?;
    let (f_rho, f_v) = grad;
    let out_rho = f_v.divergence().scaled(-1.0).dealiased();

    let inv_rho = u.rho.map(|r| 1.0 / r);
    let omega_over_rho = u.v.curl().scaled_by_field(&inv_rho);
    let out_v = f_rho
        .gradient()
        .scaled(-1.0)
        .add_scaled(&omega_over_rho.cross(f_v), -1.0)
        .dealiased();
    Ok((out_rho, out_v))
}

/// Gradient of the fluid energy with respect to `(rho, v)`:
/// `F_rho = |v|^2/2 + h(rho)`, `F_v = rho v`.
pub fn energy_gradient(u: &FluidState, eos: &BarotropicEos) -> (ScalarField, VectorField3) {
    let half_v2 = u.v.dot(&u.v).scaled(0.5);
    let f_rho = half_v2.add_scaled(&eos.enthalpy_field(&u.rho), 1.0);
    let f_v = u.v.scaled_by_field(&u.rho);
    (f_rho, f_v)
}

/// Total fluid energy `int (|v|^2/2 + eps(rho)) rho`.
pub fn fluid_energy(u: &FluidState, eos: &BarotropicEos) -> f64 {
    let half_v2 = u.v.dot(&u.v).scaled(0.5);
    let eps = u.rho.map(|r| eos.internal_energy(r));
    half_v2.add_scaled(&eps, 1.0).pointwise_mul(&u.rho).integral()
}

/// Total mass `int rho`, a Casimir of the fluid bracket.
pub fn total_mass(u: &FluidState) -> f64 {
    u.rho.integral()
}

/// Velocity-form helicity `int v . curl v`, the other Casimir.
pub fn fluid_helicity(v: &VectorField3) -> f64 {
    v.inner(&v.curl())
}

/// One rk4 step of the compressible fluid.
pub fn fluid_step_rk4(u: &FluidState, eos: &BarotropicEos, dt: f64) -> Result<FluidState> {
    if dt <= 0.0 {
        return Err(Error::NonPositive {
            name: "dt",
            value: dt,
        });
    }
    let shift = |state: &FluidState, rate: &(ScalarField, VectorField3), s: f64| FluidState {
        rho: state.rho.add_scaled(&rate.0, s),
        v: state.v.add_scaled(&rate.1, s),
    };
    let k1 = fluid_rhs(u, eos)?;
    let k2 = fluid_rhs(&shift(u, &k1, dt / 2.0), eos)?;
    let k3 = fluid_rhs(&shift(u, &k2, dt / 2.0), eos)?;
    let k4 = fluid_rhs(&shift(u, &k3, dt), eos)?;
    let mut next = shift(u, &k1, dt / 6.0);
    next = shift(&next, &k2, dt / 3.0);
    next = shift(&next, &k3, dt / 3.0);
    next = shift(&next, &k4, dt / 6.0);
    FluidState::new(next.rho, next.v)
}
