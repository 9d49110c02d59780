//! Canonicalization of the rotation bracket two ways: the angular-momentum
//! reduction from 6 canonical dimensions and the spin (Cayley-Klein)
//! reduction from 4, with their gauge angles, the flattening local chart,
//! and the three-realization rigid-body comparison.
//!
//! Run with `cargo run --example reductions`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nambu::algebra3::Observable;
use nambu::clebsch::{
    angular_momentum_lift, angular_momentum_map, cayley_klein_map, gauge_angle_su2,
    reduction_residual_sp6, so3_local_poisson, spin_lift, spin_reduction_residual, su2_casimir,
    CanonicalState, SpinState,
};
use nambu::integrate::compare_realizations;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    // Reduction identities on random polynomial observables.
    let mut worst6 = 0.0f64;
    let mut worst4 = 0.0f64;
    for _ in 0..100 {
        let g = Observable::random_polynomial3(&mut rng, 3);
        let h = Observable::random_polynomial3(&mut rng, 3);
        let s = CanonicalState::new(
            (0..3).map(|_| rng.random_range(-1.0..1.0)).collect(),
            (0..3).map(|_| rng.random_range(-1.0..1.0)).collect(),
        )
        .unwrap();
        let z = SpinState(std::array::from_fn(|_| rng.random_range(-1.0..1.0)));
        worst6 = worst6.max(reduction_residual_sp6(&g, &h, &s).unwrap());
        worst4 = worst4.max(spin_reduction_residual(&g, &h, &z));
    }
    println!("reduction residuals over 100 random observables/points");
    println!("  angular momentum (R^6 -> so3*): {worst6:.2e}");
    println!("  spin map         (R^4 -> so3*): {worst4:.2e}");

    // The two lifts invert the reductions.
    let xi = [0.6, -0.2, 0.3];
    let lifted = angular_momentum_lift(xi, 1.0).unwrap();
    println!(
        "\nlift of xi = {xi:?}: q x p = {:?}",
        angular_momentum_map(&lifted).unwrap()
    );
    let z = spin_lift(xi).unwrap();
    println!("spin lift reproduces xi: {:?}", cayley_klein_map(&z));
    println!(
        "spin casimir C = 2|xi|: {:.6} vs {:.6}",
        su2_casimir(&z),
        2.0 * (xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]).sqrt()
    );
    println!(
        "gauge angle of the spin lift: {:+.6} rad",
        gauge_angle_su2(&z).unwrap()
    );

    // Local chart that flattens the bracket: the Casimir spans the kernel
    // row, (phi, xi_1) the canonical block.
    let chart = so3_local_poisson(xi).unwrap();
    println!("\nlocal chart at xi: (C, phi, xi_1) = {:?}", chart.coords);
    println!("constant Poisson matrix in the chart:");
    for row in chart.j_prime {
        println!("  {row:?}");
    }

    // One rigid body, three phase spaces: reduced, 6-dimensional canonical,
    // 4-dimensional spin.
    println!("\nthree-realization rigid-body comparison (I = (1,2,3), xi0 = (1,0.1,0.1))");
    println!("{:>10} {:>8} {:>16}", "dt", "steps", "max discrepancy");
    for (dt, steps) in [(4e-3, 250), (2e-3, 500), (1e-3, 1000)] {
        let d = compare_realizations([1.0, 0.1, 0.1], [1.0, 2.0, 3.0], dt, steps).unwrap();
        println!("{dt:>10.0e} {steps:>8} {d:>16.3e}");
    }
    let coarse = compare_realizations([1.0, 0.1, 0.1], [1.0, 2.0, 3.0], 4e-3, 250).unwrap();
    let fine = compare_realizations([1.0, 0.1, 0.1], [1.0, 2.0, 3.0], 2e-3, 500).unwrap();
    println!(
        "observed convergence order: {:.2} (the integrator's fourth order)",
        (coarse / fine).log2()
    );
}
