//! Ideal vorticity dynamics on the periodic box: the curl inverse on the
//! divergence-free subspace, a Beltrami steady state, and helicity/energy
//! conservation along a random-field run.
//!
//! Run with `cargo run --release --example vortex`.

use nambu::field::{
    beltrami, helicity, inv_curl, kinetic_energy, random_vorticity, vortex_rhs, vortex_step_rk4,
    Grid3,
};

fn main() {
    let grid = Grid3::new(16).unwrap();

    // Operator identities.
    let omega = random_vorticity(grid, 2, 0.5, 99);
    let identity = inv_curl(&omega)
        .curl()
        .add_scaled(omega.field(), -1.0)
        .linf();
    println!("curl o inv_curl deviation on a random field: {identity:.2e}");

    let b = beltrami(grid);
    println!(
        "beltrami eigenfield: |rhs| = {:.2e} (steady), helicity = {:.6} (= 4 pi^3 = {:.6})",
        vortex_rhs(&b).linf(),
        helicity(&b),
        4.0 * std::f64::consts::PI.powi(3)
    );

    // Conservation along a run.
    let dt = 0.02;
    let steps = 100;
    let mut omega = random_vorticity(grid, 2, 0.2, 7);
    let cfl = inv_curl(&omega).max_norm() * dt / grid.spacing();
    println!("\nrandom low-mode initial vorticity, N = 16, dt = {dt}, CFL = {cfl:.3}");

    let h0 = helicity(&omega);
    let e0 = kinetic_energy(&omega);
    println!("{:>6} {:>22} {:>22}", "step", "energy drift", "helicity drift");
    for step in 1..=steps {
        omega = vortex_step_rk4(&omega, dt).unwrap();
        if step % 20 == 0 {
            println!(
                "{step:>6} {:>22.3e} {:>22.3e}",
                (kinetic_energy(&omega) - e0).abs() / e0,
                (helicity(&omega) - h0).abs() / h0.abs()
            );
        }
    }
}
