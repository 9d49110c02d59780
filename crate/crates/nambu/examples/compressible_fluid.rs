//! Compressible barotropic fluid: the direct equations of motion against the
//! Poisson-operator form, and conservation of mass, energy, and helicity.
//!
//! Run with `cargo run --release --example compressible_fluid`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nambu::field::{
    energy_gradient, fluid_energy, fluid_helicity, fluid_poisson_apply, fluid_rhs, fluid_step_rk4,
    random_band_limited_scalar, total_mass, BarotropicEos, FluidState, Grid3, ScalarField,
    VectorField3,
};

fn main() {
    let grid = Grid3::new(16).unwrap();
    let eos = BarotropicEos::Isothermal { c: 1.0 };

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let unit = |rng: &mut ChaCha8Rng| {
        let f = random_band_limited_scalar(grid, 2, rng);
        f.scaled(1.0 / f.linf())
    };
    let u = FluidState::new(
        ScalarField::constant(grid, 1.0).add_scaled(&unit(&mut rng), 0.02),
        VectorField3 {
            components: std::array::from_fn(|_| unit(&mut rng).scaled(0.02)),
        },
    )
    .unwrap();

    // Hamiltonian structure: applying the Poisson operator to the energy
    // gradient reproduces the direct right-hand side.
    let (f_rho, f_v) = energy_gradient(&u, &eos);
    let (rd_direct, vd_direct) = fluid_rhs(&u, &eos).unwrap();
    let (rd_poisson, vd_poisson) = fluid_poisson_apply(&u, (&f_rho, &f_v)).unwrap();
    println!(
        "direct vs Poisson-operator right-hand side: density gap {:.2e}, velocity gap {:.2e}",
        rd_direct.add_scaled(&rd_poisson, -1.0).linf(),
        vd_direct.add_scaled(&vd_poisson, -1.0).linf()
    );

    // Conservation along a run: mass is exact (the mean mode of a
    // divergence vanishes), energy is conserved to integrator accuracy,
    // helicity is the vortical Casimir.
    let dt = 0.01;
    let steps = 100;
    let m0 = total_mass(&u);
    let e0 = fluid_energy(&u, &eos);
    let h0 = fluid_helicity(&u.v);
    println!("\nN = 16, dt = {dt}: initial mass {m0:.6}, energy {e0:.6}, helicity {h0:.3e}");
    println!(
        "{:>6} {:>18} {:>18} {:>18}",
        "step", "mass drift", "energy drift", "helicity shift"
    );
    let mut state = u;
    for step in 1..=steps {
        state = fluid_step_rk4(&state, &eos, dt).unwrap();
        if step % 20 == 0 {
            println!(
                "{step:>6} {:>18.3e} {:>18.3e} {:>18.3e}",
                (total_mass(&state) - m0).abs() / m0,
                (fluid_energy(&state, &eos) - e0).abs() / e0.abs(),
                (fluid_helicity(&state.v) - h0).abs()
            );
        }
    }
}
