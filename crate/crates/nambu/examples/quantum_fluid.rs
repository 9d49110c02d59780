//! Wave functions as quantum fluids: the density/phase split, the momentum
//! correspondence with the canonical potentials, two-route quantum energies,
//! split-step Schroedinger evolution, and the hbar^2 classical limit.
//!
//! Run with `cargo run --release --example quantum_fluid`.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nambu::field::{
    clebsch_velocity, random_band_limited_scalar, BarotropicEos, Grid3, ScalarField,
};
use nambu::madelung::{
    ccr_residual, classical_energy, clebsch_from_madelung, momentum_density, nls_step,
    quantum_hamiltonian, quantum_pressure, spin_densities, SpinorField,
};

fn spinor_from_profiles(
    grid: Grid3,
    profiles: &[(ScalarField, ScalarField)],
    hbar: f64,
) -> SpinorField {
    let n = grid.n();
    let comps = profiles
        .iter()
        .map(|(rho, action)| {
            let mut comp = ndarray::Array3::<Complex64>::zeros((n, n, n));
            ndarray::Zip::from(&mut comp)
                .and(rho.data())
                .and(action.data())
                .for_each(|z, &r, &s| *z = Complex64::from_polar(r.sqrt(), s / hbar));
            comp
        })
        .collect();
    SpinorField::new(grid, comps, hbar).unwrap()
}

fn main() {
    let grid = Grid3::new(16).unwrap();
    let hbar = 1.0;
    let eos = BarotropicEos::GrossPitaevskii { g: 0.4 };

    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let mut unit = || {
        let f = random_band_limited_scalar(grid, 2, &mut rng);
        f.scaled(1.0 / f.linf())
    };
    let profiles: Vec<(ScalarField, ScalarField)> = (0..3)
        .map(|_| {
            (
                ScalarField::constant(grid, 1.0).add_scaled(&unit(), 0.05),
                unit().scaled(0.05),
            )
        })
        .collect();
    let psi = spinor_from_profiles(grid, &profiles, hbar);

    // The central correspondence: the quantum momentum equals the velocity
    // of the canonical potentials obtained by linear recombination of the
    // Madelung parameters.
    let v = momentum_density(&psi).unwrap();
    let m = psi.decompose().unwrap();
    let c = clebsch_from_madelung(&m, 3).unwrap();
    let v2 = clebsch_velocity(&c).unwrap();
    println!(
        "momentum vs canonical-potential velocity (3 components): {:.2e}",
        v.add_scaled(&v2, -1.0).linf()
    );

    // Two routes to the same energy.
    let e = quantum_hamiltonian(&psi, &eos).unwrap();
    println!(
        "energy, operator route {:.8} vs fluid route {:.8} (gap {:.2e})",
        e.operator_form,
        e.madelung_form,
        (e.operator_form - e.madelung_form).abs()
    );

    // Spin densities: eight Gell-Mann components for the 3-spinor.
    let spins = spin_densities(&psi).unwrap();
    println!("spin densities: {} fields, S_8 mean {:+.4}", spins.len(), spins[7].mean());

    // hbar^2 scaling of the quantum correction on co-phased data.
    let co_phased: Vec<(ScalarField, ScalarField)> = {
        let shared_phase = unit().scaled(0.05);
        (0..2)
            .map(|_| {
                (
                    ScalarField::constant(grid, 1.0).add_scaled(&unit(), 0.05),
                    shared_phase.clone(),
                )
            })
            .collect()
    };
    println!("\nquantum correction (H_q - H_classical) / hbar^2 on co-phased data:");
    for hb in [1.0, 0.5, 0.25] {
        let psi = spinor_from_profiles(grid, &co_phased, hb);
        let e = quantum_hamiltonian(&psi, &eos).unwrap();
        let cl = classical_energy(&psi, &eos).unwrap();
        println!("  hbar = {hb:<5} ratio = {:.10}", (e.operator_form - cl) / (hb * hb));
    }

    // Quantum pressure of a one-dimensional density profile.
    let rho = ScalarField::from_fn(grid, |x, _, _| (1.0 + 0.3 * x.cos()).powi(2));
    let qp = quantum_pressure(&rho, hbar).unwrap();
    println!("\nquantum pressure amplitude for rho = (1 + 0.3 cos x)^2: {:.4}", qp.linf());

    // Split-step evolution conserves the norm exactly.
    let psi2 = spinor_from_profiles(grid, &co_phased, hbar);
    let n0 = psi2.norm();
    let mut state = psi2;
    for _ in 0..100 {
        state = nls_step(&state, 1e-3, &eos).unwrap();
    }
    println!(
        "\nsplit-step: norm drift over 100 steps {:.2e}, energy drift {:.2e}",
        (state.norm() - n0).abs() / n0,
        {
            let e1 = quantum_hamiltonian(&state, &eos).unwrap().operator_form;
            let psi0 = spinor_from_profiles(grid, &co_phased, hbar);
            let e0 = quantum_hamiltonian(&psi0, &eos).unwrap().operator_form;
            (e1 - e0).abs() / e0.abs()
        }
    );

    // Discrete canonical commutation relations on a coarse grid.
    let coarse = Grid3::new(8).unwrap();
    let mut unit8 = || {
        let f = random_band_limited_scalar(coarse, 2, &mut rng);
        f.scaled(1.0 / f.linf())
    };
    let profiles8: Vec<(ScalarField, ScalarField)> = (0..2)
        .map(|_| {
            (
                ScalarField::constant(coarse, 1.0).add_scaled(&unit8(), 0.05),
                unit8().scaled(0.05),
            )
        })
        .collect();
    let psi8 = spinor_from_profiles(coarse, &profiles8, hbar);
    let diag = ccr_residual(&psi8, 0, 0, [2, 3, 4], [2, 3, 4]).unwrap();
    let off = ccr_residual(&psi8, 0, 1, [2, 3, 4], [2, 3, 4]).unwrap();
    println!(
        "\ncommutation check: same pair/point residual {:.2e}, distinct components {:.2e}",
        diag.norm(),
        off.norm()
    );
}
