//! Quantum energies, the quantum pressure/force corrections, and the
//! potential-form helicity.

use crate::error::Result;
use crate::field::{BarotropicEos, ClebschFields, ScalarField, VectorField3};

use super::spinor::{complex_laplacian, momentum_density, spin_densities, SpinorField};

/// The same energy computed along two routes that must agree:
/// the operator sandwich and the fluid (Madelung) form with its
/// quantum-gradient corrections.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumEnergy {
    /// `int Psi* (-hbar^2/2 laplacian + eps(rho)) Psi`.
    pub operator_form: f64,
    /// `int [ |v|^2/2 + eps(rho) + (hbar^2/8)(|grad rho|^2/rho^2
    ///   + sum_l |grad S_l|^2) ] rho`.
    pub madelung_form: f64,
}

fn check_floor(rho: &ScalarField) -> Result<()> {
    crate::field::ensure_above_floor(rho.min())
}

/// Classical fluid energy of the induced `(rho, v)`:
/// `int (|v|^2/2 + eps(rho)) rho`.
pub fn classical_energy(psi: &SpinorField, eos: &BarotropicEos) -> Result<f64> {
    let rho = psi.total_density();
    check_floor(&rho)?;
    let v = momentum_density(psi)?;
    let integrand = v
        .dot(&v)
        .scaled(0.5)
        .add_scaled(&rho.map(|r| eos.internal_energy(r)), 1.0)
        .pointwise_mul(&rho);
    Ok(integrand.integral())
}

/// Evaluate the quantized energy both as the operator sandwich and in the
/// Madelung form; on smooth node-free fields the two agree to spectral
/// accuracy.
pub fn quantum_hamiltonian(psi: &SpinorField, eos: &BarotropicEos) -> Result<QuantumEnergy> {
    let rho = psi.total_density();
    check_floor(&rho)?;
    let grid = psi.grid();
    let hbar = psi.hbar();

    // Operator route.
    let mut kinetic = 0.0;
    for j in 0..psi.components() {
        let lap = complex_laplacian(psi.component(j), grid);
        let sandwich: f64 = psi
            .component(j)
            .iter()
            .zip(lap.iter())
            .map(|(z, l)| (z.conj() * l).re)
            .sum();
        kinetic += -0.5 * hbar * hbar * sandwich * grid.cell_volume();
    }
    let potential = rho.map(|r| eos.internal_energy(r)).pointwise_mul(&rho).integral();
    let operator_form = kinetic + potential;

    // Madelung route.
    let v = momentum_density(psi)?;
    let grad_rho = rho.gradient().dealiased();
    let grad_rho_sq = grad_rho.dot(&grad_rho);
    let inv_rho_sq = rho.map(|r| 1.0 / (r * r));
    let mut correction = grad_rho_sq.pointwise_mul(&inv_rho_sq);
    for s in spin_densities(psi)? {
        let g = s.gradient().dealiased();
        correction = correction.add_scaled(&g.dot(&g), 1.0);
    }
    let integrand = v
        .dot(&v)
        .scaled(0.5)
        .add_scaled(&rho.map(|r| eos.internal_energy(r)), 1.0)
        .add_scaled(&correction, hbar * hbar / 8.0)
        .pointwise_mul(&rho);
    let madelung_form = integrand.integral();

    Ok(QuantumEnergy {
        operator_form,
        madelung_form,
    })
}

/// Quantum pressure `(hbar^2/2) laplacian(sqrt rho) / sqrt rho`.
pub fn quantum_pressure(rho: &ScalarField, hbar: f64) -> Result<ScalarField> {
    check_floor(rho)?;
    let sqrt_rho = rho.map(f64::sqrt);
    Ok(sqrt_rho
        .laplacian()
        .pointwise_div(&sqrt_rho)
        .scaled(0.5 * hbar * hbar))
}

/// Quantum correction to the momentum equation,
/// `F_q = (hbar^2/2) { grad(laplacian(sqrt rho)/sqrt rho)
///        - sum_l div[rho grad S_l (x) grad S_l] / (2 rho) }`.
pub fn quantum_force(rho: &ScalarField, spins: &[ScalarField], hbar: f64) -> Result<VectorField3> {
    check_floor(rho)?;
    let sqrt_rho = rho.map(f64::sqrt);
    let bohm = sqrt_rho.laplacian().pointwise_div(&sqrt_rho);
    let mut force = bohm.gradient();

    let inv_two_rho = rho.map(|r| 0.5 / r);
    for s in spins {
        let g = s.gradient().dealiased();
        // (div T)_i = sum_j d_j (rho g_j g_i).
        for i in 0..3 {
            let column = g.scaled_by_field(&rho.pointwise_mul(g.component(i)));
            let div = column.divergence().pointwise_mul(&inv_two_rho);
            force.components[i] = force.components[i].add_scaled(&div, -1.0);
        }
    }
    Ok(force.scaled(0.5 * hbar * hbar))
}

/// Helicity written in the canonical potentials,
/// `int [ (a2/rho) grad(a1/rho) - (a1/rho) grad(a2/rho) ]
///   . (grad b1 x grad b2)`;
/// agrees with `int v . curl v` on smooth periodic fields.
pub fn helicity_clebsch(c: &ClebschFields) -> Result<f64> {
    crate::field::ensure_above_floor(c.varrho.min())?;
    let a1 = c.alpha1.pointwise_div(&c.varrho);
    let a2 = c.alpha2.pointwise_div(&c.varrho);
    let paired = a1
        .gradient()
        .scaled_by_field(&a2)
        .add_scaled(&a2.gradient().scaled_by_field(&a1), -1.0);
    let surface = c.beta1.gradient().cross(&c.beta2.gradient());
    Ok(paired.dot(&surface).integral())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{clebsch_velocity, fluid_helicity, Grid3};
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    fn grid() -> Grid3 {
        Grid3::new(16).unwrap()
    }

    #[test]
    fn constant_field_has_no_kinetic_energy() {
        let psi = SpinorField::from_fns(grid(), 1, 1.0, |_, _, _, _| Complex64::new(1.3, 0.0))
            .unwrap();
        let eos = BarotropicEos::GrossPitaevskii { g: 0.0 };
        let e = quantum_hamiltonian(&psi, &eos).unwrap();
        assert_abs_diff_eq!(e.operator_form, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(e.madelung_form, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn plane_wave_energy() {
        let psi = SpinorField::from_fns(grid(), 1, 1.0, |_, x, _, _| {
            Complex64::from_polar(1.0, 2.0 * x)
        })
        .unwrap();
        let eos = BarotropicEos::GrossPitaevskii { g: 0.0 };
        let e = quantum_hamiltonian(&psi, &eos).unwrap();
        let expected = 0.5 * 4.0 * Grid3::LENGTH.powi(3);
        assert_abs_diff_eq!(e.operator_form, expected, epsilon = 1e-9);
        assert_abs_diff_eq!(e.madelung_form, expected, epsilon = 1e-9);
    }

    fn smooth_spinor(components: usize, hbar: f64) -> SpinorField {
        SpinorField::from_fns(grid(), components, hbar, |j, x, y, z| {
            let amp = (1.0 + 0.05 * ((j + 1) as f64) * x.sin() + 0.03 * (y - z).cos()).sqrt();
            let phase = (0.04 * (x + y).sin() + 0.03 * ((j as f64) + 1.0) * z.cos()) / hbar;
            Complex64::from_polar(amp, phase)
        })
        .unwrap()
    }

    #[test]
    fn operator_and_madelung_routes_agree() {
        let eos = BarotropicEos::GrossPitaevskii { g: 0.4 };
        for components in 1..=3usize {
            let psi = smooth_spinor(components, 1.0);
            let e = quantum_hamiltonian(&psi, &eos).unwrap();
            let gap = (e.operator_form - e.madelung_form).abs();
            assert!(
                gap <= 1e-8 * e.operator_form.abs().max(1.0),
                "n = {components}: {} vs {}",
                e.operator_form,
                e.madelung_form
            );
        }
    }

    #[test]
    fn quantum_term_scales_as_hbar_squared() {
        // Co-phased Madelung data: as hbar varies with (rho_j, S_j) fixed
        // the spin fields stay fixed, so the correction is exactly
        // quadratic in hbar.
        let eos = BarotropicEos::GrossPitaevskii { g: 0.2 };
        let build = |hbar: f64| {
            SpinorField::from_fns(grid(), 2, hbar, |j, x, y, _| {
                let amp =
                    (0.5 + 0.1 * ((j + 1) as f64) + 0.05 * x.sin() + 0.02 * y.cos()).sqrt();
                let phase = 0.05 * (x + y).sin() / hbar;
                Complex64::from_polar(amp, phase)
            })
            .unwrap()
        };
        let mut ratios = Vec::new();
        for hbar in [1.0, 0.5, 0.25] {
            let psi = build(hbar);
            let e = quantum_hamiltonian(&psi, &eos).unwrap();
            let classical = classical_energy(&psi, &eos).unwrap();
            ratios.push((e.operator_form - classical) / (hbar * hbar));
        }
        for r in &ratios[1..] {
            assert!(
                (r - ratios[0]).abs() / ratios[0].abs() <= 0.05,
                "ratios {ratios:?}"
            );
        }
        // Log-log slope across the hbar halvings.
        let q1 = ratios[0] * 1.0;
        let q4 = ratios[2] * 0.0625;
        let slope = (q1 / q4).log2() / 2.0;
        assert!((slope - 2.0).abs() <= 0.05, "slope {slope}");
    }

    #[test]
    fn quantum_pressure_values() {
        let g = grid();
        assert_eq!(
            quantum_pressure(&ScalarField::constant(g, 2.0), 1.0)
                .unwrap()
                .linf(),
            0.0
        );

        let eps = 0.3;
        let rho = ScalarField::from_fn(g, |x, _, _| (1.0 + eps * x.cos()).powi(2));
        let qp = quantum_pressure(&rho, 1.0).unwrap();
        let expected =
            ScalarField::from_fn(g, |x, _, _| -0.5 * eps * x.cos() / (1.0 + eps * x.cos()));
        assert!(qp.add_scaled(&expected, -1.0).linf() <= 1e-9);

        // Quadratic in hbar by the prefactor.
        let qp2 = quantum_pressure(&rho, 2.0).unwrap();
        assert!(qp2.add_scaled(&qp.scaled(4.0), -1.0).linf() <= 1e-12);
    }

    #[test]
    fn quantum_force_special_cases() {
        let g = grid();
        let uniform_s = vec![ScalarField::constant(g, 0.3); 3];
        let f = quantum_force(&ScalarField::constant(g, 1.0), &uniform_s, 1.0).unwrap();
        assert!(f.linf() <= 1e-14);

        let rho = ScalarField::from_fn(g, |x, _, _| 1.0 + 0.1 * x.cos());
        let f = quantum_force(&rho, &uniform_s, 0.0).unwrap();
        assert_eq!(f.linf(), 0.0);
    }

    #[test]
    fn quantum_force_linearization() {
        // rho = 1 + eps cos x, uniform spins: to first order in eps the
        // force is (hbar^2/2) grad(laplacian(eps cos x)/2).
        let g = grid();
        let eps = 1e-4;
        let rho = ScalarField::from_fn(g, |x, _, _| 1.0 + eps * x.cos());
        let f = quantum_force(&rho, &[], 1.0).unwrap();
        let expected = ScalarField::from_fn(g, |x, _, _| 0.5 * eps * x.cos())
            .laplacian()
            .gradient()
            .scaled(0.5);
        let gap = f.add_scaled(&expected, -1.0).linf();
        assert!(gap <= 10.0 * eps * eps, "linearization gap {gap}");
    }

    #[test]
    fn helicity_potential_form_degeneracies() {
        let g = grid();
        let base = ClebschFields::new(
            ScalarField::constant(g, 1.0),
            ScalarField::from_fn(g, |x, _, _| 0.2 * x.sin()),
            ScalarField::zeros(g),
            ScalarField::zeros(g),
            ScalarField::from_fn(g, |_, y, _| 0.3 * y.cos()),
            ScalarField::from_fn(g, |_, y, _| 0.3 * y.cos()),
        )
        .unwrap();
        // alpha_2 = 0 kills the integrand.
        assert_abs_diff_eq!(helicity_clebsch(&base).unwrap(), 0.0, epsilon = 1e-14);

        // Equal betas give a degenerate surface element.
        let c = ClebschFields::new(
            base.varrho.clone(),
            base.alpha1.clone(),
            ScalarField::from_fn(g, |_, _, z| 0.1 * z.sin()),
            base.phi.clone(),
            base.beta1.clone(),
            base.beta1.clone(),
        )
        .unwrap();
        assert_abs_diff_eq!(helicity_clebsch(&c).unwrap(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn helicity_matches_velocity_form() {
        let g = grid();
        let c = ClebschFields::new(
            ScalarField::from_fn(g, |x, y, _| 1.0 + 0.04 * (x + y).sin()),
            ScalarField::from_fn(g, |x, _, z| 0.2 * (x - z).sin()),
            ScalarField::from_fn(g, |_, y, z| 0.15 * (y + 2.0 * z).cos()),
            ScalarField::from_fn(g, |x, _, _| 0.1 * x.sin()),
            ScalarField::from_fn(g, |x, y, _| 0.3 * (x + y).sin()),
            ScalarField::from_fn(g, |_, y, z| 0.25 * (y - z).sin()),
        )
        .unwrap();
        let potential_form = helicity_clebsch(&c).unwrap();
        let v = clebsch_velocity(&c).unwrap();
        let direct = fluid_helicity(&v);
        assert_abs_diff_eq!(potential_form, direct, epsilon = 1e-8);
    }
}
