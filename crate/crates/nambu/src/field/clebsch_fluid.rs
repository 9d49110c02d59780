//! Canonical (Clebsch) parameterization of the compressible fluid: three
//! density-like fields paired with three scalar potentials, evolving by
//! canonical Hamilton's equations and inducing the fluid motion through
//! `v = grad phi + (alpha_1/rho) grad beta_1 + (alpha_2/rho) grad beta_2`.

use super::fields::{ScalarField, VectorField3};
use super::fluid::{BarotropicEos, FluidState};
use super::grid::Grid3;
use crate::error::{Error, Result};

/// The six canonical fields: `(varrho, alpha_1, alpha_2)` are densities
/// (3-forms), `(phi, beta_1, beta_2)` are scalars (0-forms).
#[derive(Debug, Clone, PartialEq)]
pub struct ClebschFields {
    pub varrho: ScalarField,
    pub alpha1: ScalarField,
    pub alpha2: ScalarField,
    pub phi: ScalarField,
    pub beta1: ScalarField,
    pub beta2: ScalarField,
}

/// Time derivative of [`ClebschFields`]; carries no positivity constraint.
#[derive(Debug, Clone)]
pub struct ClebschRate {
    pub varrho: ScalarField,
    pub alpha1: ScalarField,
    pub alpha2: ScalarField,
    pub phi: ScalarField,
    pub beta1: ScalarField,
    pub beta2: ScalarField,
}

impl ClebschFields {
    pub fn new(
        varrho: ScalarField,
        alpha1: ScalarField,
        alpha2: ScalarField,
        phi: ScalarField,
        beta1: ScalarField,
        beta2: ScalarField,
    ) -> Result<Self> {
        super::fluid::ensure_above_floor(varrho.min())?;
        Ok(Self {
            varrho,
            alpha1,
            alpha2,
            phi,
            beta1,
            beta2,
        })
    }

    pub fn grid(&self) -> Grid3 {
        self.varrho.grid()
    }

    /// The induced fluid variables `(rho, v)`.
    pub fn to_fluid(&self) -> Result<FluidState> {
        FluidState::new(self.varrho.clone(), clebsch_velocity(self)?)
    }

    pub fn add_scaled(&self, rate: &ClebschRate, s: f64) -> Self {
        // Positivity is re-checked when the caller rebuilds through `new`.
        Self {
            varrho: self.varrho.add_scaled(&rate.varrho, s),
            alpha1: self.alpha1.add_scaled(&rate.alpha1, s),
            alpha2: self.alpha2.add_scaled(&rate.alpha2, s),
            phi: self.phi.add_scaled(&rate.phi, s),
            beta1: self.beta1.add_scaled(&rate.beta1, s),
            beta2: self.beta2.add_scaled(&rate.beta2, s),
        }
    }
}

/// `v = grad phi + (alpha_1/varrho) grad beta_1 + (alpha_2/varrho) grad beta_2`,
/// dealiased. With `phi` suppressed and `varrho = 1` this is the
/// two-potential form whose curl is `sum_j grad alpha_j x grad beta_j`.
pub fn clebsch_velocity(c: &ClebschFields) -> Result<VectorField3> {
    super::fluid::ensure_above_floor(c.varrho.min())?;
    let a1 = c.alpha1.pointwise_div(&c.varrho);
    let a2 = c.alpha2.pointwise_div(&c.varrho);
    let v = c
        .phi
        .gradient()
        .add_scaled(&c.beta1.gradient().scaled_by_field(&a1), 1.0)
        .add_scaled(&c.beta2.gradient().scaled_by_field(&a2), 1.0);
    Ok(v.dealiased())
}

/// Canonical Hamilton's equations for the fluid energy: the densities
/// `(varrho, alpha_j)` are advected as densities, the scalars `(beta_j)` as
/// scalars, and `phi` picks up the Bernoulli source `|v|^2/2 - h`.
pub fn clebsch_rhs(c: &ClebschFields, eos: &BarotropicEos) -> Result<ClebschRate> {
    let v = clebsch_velocity(c)?;

    let advect_density =
        |f: &ScalarField| -> ScalarField { v.scaled_by_field(f).divergence().scaled(-1.0).dealiased() };
    let advect_scalar =
        |f: &ScalarField| -> ScalarField { v.dot(&f.gradient()).scaled(-1.0).dealiased() };

    let bernoulli = v
        .dot(&v)
        .scaled(0.5)
        .add_scaled(&eos.enthalpy_field(&c.varrho), -1.0);

    Ok(ClebschRate {
        varrho: advect_density(&c.varrho),
        alpha1: advect_density(&c.alpha1),
        alpha2: advect_density(&c.alpha2),
        phi: advect_scalar(&c.phi).add_scaled(&bernoulli, 1.0).dealiased(),
        beta1: advect_scalar(&c.beta1),
        beta2: advect_scalar(&c.beta2),
    })
}

/// One rk4 step of the canonical fluid.
pub fn clebsch_step_rk4(c: &ClebschFields, eos: &BarotropicEos, dt: f64) -> Result<ClebschFields> {
    if dt <= 0.0 {
        return Err(Error::NonPositive {
            name: "dt",
            value: dt,
        });
    }
    let k1 = clebsch_rhs(c, eos)?;
    let k2 = clebsch_rhs(&c.add_scaled(&k1, dt / 2.0), eos)?;
    let k3 = clebsch_rhs(&c.add_scaled(&k2, dt / 2.0), eos)?;
    let k4 = clebsch_rhs(&c.add_scaled(&k3, dt), eos)?;
    let next = c
        .add_scaled(&k1, dt / 6.0)
        .add_scaled(&k2, dt / 3.0)
        .add_scaled(&k3, dt / 3.0)
        .add_scaled(&k4, dt / 6.0);
    ClebschFields::new(
        next.varrho,
        next.alpha1,
        next.alpha2,
        next.phi,
        next.beta1,
        next.beta2,
    )
}

#[cfg(test)]
mod tests {
    use super::super::fluid::fluid_step_rk4;
    use super::*;
    use approx::assert_abs_diff_eq;

    fn grid() -> Grid3 {
        Grid3::new(16).unwrap()
    }

    fn smooth_fields(g: Grid3) -> ClebschFields {
        ClebschFields::new(
            ScalarField::from_fn(g, |x, y, _| 1.0 + 0.01 * x.sin() + 0.008 * (x + y).cos()),
            ScalarField::from_fn(g, |x, _, z| 0.01 * (x + z).sin()),
            ScalarField::from_fn(g, |_, y, _| 0.012 * y.cos()),
            ScalarField::from_fn(g, |x, _, _| 0.05 * x.sin()),
            ScalarField::from_fn(g, |_, y, z| 0.2 * (y - z).sin()),
            ScalarField::from_fn(g, |x, y, _| 0.15 * (x + 2.0 * y).cos()),
        )
        .unwrap()
    }

    #[test]
    fn irrotational_reduction() {
        // alpha_j = 0: the momentum is an exact gradient.
        let g = grid();
        let phi = ScalarField::from_fn(g, |x, y, _| 0.3 * x.sin() + 0.1 * y.cos());
        let c = ClebschFields::new(
            ScalarField::constant(g, 1.0),
            ScalarField::zeros(g),
            ScalarField::zeros(g),
            phi.clone(),
            ScalarField::from_fn(g, |_, y, _| y.sin()),
            ScalarField::zeros(g),
        )
        .unwrap();
        let v = clebsch_velocity(&c).unwrap();
        assert!(v.add_scaled(&phi.gradient(), -1.0).linf() <= 1e-12);
        assert!(v.curl().linf() <= 1e-10);
    }

    #[test]
    fn single_pair_velocity() {
        // phi = 0, varrho = 1, alpha_2 = 0: v = alpha_1 grad beta_1.
        let g = grid();
        let alpha1 = ScalarField::constant(g, 1.0);
        // A mean-one density-like alpha is fine; use the periodic surrogate
        // beta_1 = sin(y) for a coordinate-like potential.
        let c = ClebschFields::new(
            ScalarField::constant(g, 1.0),
            alpha1,
            ScalarField::zeros(g),
            ScalarField::zeros(g),
            ScalarField::from_fn(g, |_, y, _| y.sin()),
            ScalarField::zeros(g),
        )
        .unwrap();
        let v = clebsch_velocity(&c).unwrap();
        let expected = VectorField3::from_fns(g, |_, y, _| [0.0, y.cos(), 0.0]);
        assert!(v.add_scaled(&expected, -1.0).linf() <= 1e-12);
    }

    #[test]
    fn curl_of_velocity_is_potential_two_form() {
        // With varrho = 1, curl v = sum grad alpha_j x grad beta_j.
        let g = grid();
        let c = ClebschFields::new(
            ScalarField::constant(g, 1.0),
            ScalarField::from_fn(g, |x, _, z| 0.2 * (x - z).sin()),
            ScalarField::from_fn(g, |_, y, z| 0.15 * (y + z).cos()),
            ScalarField::from_fn(g, |x, _, _| 0.1 * x.cos()),
            ScalarField::from_fn(g, |x, y, _| 0.3 * (x + y).sin()),
            ScalarField::from_fn(g, |_, y, z| 0.25 * (2.0 * y - z).sin()),
        )
        .unwrap();
        let lhs = clebsch_velocity(&c).unwrap().curl().dealiased();
        let rhs = c
            .alpha1
            .gradient()
            .cross(&c.beta1.gradient())
            .add_scaled(&c.alpha2.gradient().cross(&c.beta2.gradient()), 1.0)
            .dealiased();
        assert!(lhs.add_scaled(&rhs, -1.0).linf() <= 1e-10);
    }

    #[test]
    fn static_equilibrium_only_moves_phi() {
        let g = grid();
        let c = ClebschFields::new(
            ScalarField::constant(g, 1.0),
            ScalarField::zeros(g),
            ScalarField::zeros(g),
            ScalarField::zeros(g),
            ScalarField::zeros(g),
            ScalarField::zeros(g),
        )
        .unwrap();
        let eos = BarotropicEos::GrossPitaevskii { g: 0.5 };
        let rate = clebsch_rhs(&c, &eos).unwrap();
        assert_eq!(rate.varrho.linf(), 0.0);
        assert_eq!(rate.alpha1.linf(), 0.0);
        assert_eq!(rate.beta1.linf(), 0.0);
        // phi rate is the uniform value -h(1).
        let expected = -eos.enthalpy(1.0);
        assert_abs_diff_eq!(rate.phi.mean(), expected, epsilon = 1e-14);
        assert_abs_diff_eq!(rate.phi.linf(), expected.abs(), epsilon = 1e-14);
    }

    #[test]
    fn hamilton_jacobi_pair_when_potentials_vanish() {
        // alpha_j = beta_j = 0: d phi/dt = -(|v|^2/2 + h) + v.grad... with
        // v = grad phi, so the scalar advection and Bernoulli terms combine
        // to the eikonal rate -(|grad phi|^2/2 + h).
        let g = grid();
        let phi = ScalarField::from_fn(g, |x, _, _| 0.2 * x.sin());
        let c = ClebschFields::new(
            ScalarField::from_fn(g, |x, _, _| 1.0 + 0.05 * x.cos()),
            ScalarField::zeros(g),
            ScalarField::zeros(g),
            phi.clone(),
            ScalarField::zeros(g),
            ScalarField::zeros(g),
        )
        .unwrap();
        let eos = BarotropicEos::GrossPitaevskii { g: 0.3 };
        let rate = clebsch_rhs(&c, &eos).unwrap();
        let v = phi.gradient();
        let expected = v
            .dot(&v)
            .scaled(-0.5)
            .add_scaled(&c.varrho.map(|r| eos.enthalpy(r)), -1.0)
            .dealiased();
        assert!(rate.phi.add_scaled(&expected, -1.0).linf() <= 1e-10);
    }

    #[test]
    fn incompressible_subsystem_lie_drags_potentials() {
        // Frozen phi and varrho: alpha_j and beta_j are advected by v.
        let g = grid();
        let c = smooth_fields(g);
        let eos = BarotropicEos::Isothermal { c: 1.0 };
        let rate = clebsch_rhs(&c, &eos).unwrap();
        let v = clebsch_velocity(&c).unwrap();
        let expected_beta1 = v.dot(&c.beta1.gradient()).scaled(-1.0).dealiased();
        assert!(rate.beta1.add_scaled(&expected_beta1, -1.0).linf() <= 1e-12);
        let expected_alpha2 = v
            .scaled_by_field(&c.alpha2)
            .divergence()
            .scaled(-1.0)
            .dealiased();
        assert!(rate.alpha2.add_scaled(&expected_alpha2, -1.0).linf() <= 1e-12);
    }

    #[test]
    fn induced_fluid_motion_matches_direct_evolution() {
        // Short two-route comparison; the acceptance suite runs the longer
        // horizon.
        let g = grid();
        let eos = BarotropicEos::Isothermal { c: 1.0 };
        let mut c = smooth_fields(g);
        let mut u = c.to_fluid().unwrap();
        let dt = 0.01;
        let mut worst = 0.0f64;
        for _ in 0..10 {
            c = clebsch_step_rk4(&c, &eos, dt).unwrap();
            u = fluid_step_rk4(&u, &eos, dt).unwrap();
            let induced = c.to_fluid().unwrap();
            worst = worst
                .max(induced.rho.add_scaled(&u.rho, -1.0).linf())
                .max(induced.v.add_scaled(&u.v, -1.0).linf());
        }
        assert!(worst <= 1e-8, "two-route deviation {worst}");
    }
}
