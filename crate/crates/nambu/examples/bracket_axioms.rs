//! Survey of the 3-dimensional bracket zoo: the full catalog of Lie
//! algebras, their Poisson matrices and Casimirs, matrix deformations of the
//! rotation bracket, and the derivation (fundamental) identity of the triple
//! bracket.
//!
//! Run with `cargo run --example bracket_axioms`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nambu::algebra3::{
    deform, fundamental_identity_residual, nambu_bracket, triple_bracket, BianchiType,
    LieAlgebra3, Observable, PoissonSystem,
};

fn main() {
    println!("catalog of 3-dimensional Lie algebras");
    println!("{:<14} {:>14} {:>14}", "algebra", "jacobi", "antisymmetry");
    for t in BianchiType::ALL {
        let alg = LieAlgebra3::bianchi(t);
        let sys = PoissonSystem::lie_poisson(&alg);
        println!(
            "{:<14} {:>14.2e} {:>14.2e}",
            alg.label(),
            alg.jacobi_residual(),
            sys.antisymmetry_residual(50, 7)
        );
    }

    // The rotation algebra is the mother bracket: every deformation by a
    // symmetric matrix is again a Lie algebra, and the second Hamiltonian of
    // the triple bracket selects which one.
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let mut m = [[0.0; 3]; 3];
        for r in 0..3 {
            for c in r..3 {
                let v = rng.random_range(-2.0..2.0);
                m[r][c] = v;
                m[c][r] = v;
            }
        }
        worst = worst.max(deform(&m).jacobi_residual());
    }
    println!("\nmax Jacobi residual over 200 random symmetric deformations: {worst:.2e}");

    // Mixing a symmetric part with a rotation whose axis it does not
    // annihilate leaves the Jacobi identity broken: no Lie algebra, no
    // admissible second Hamiltonian.
    let broken = [[1.0, 0.0, 0.0], [0.0, 1.0, -1.0], [0.0, 1.0, 1.0]];
    println!(
        "a generic non-symmetric deformation breaks Jacobi: residual {:.2e}",
        deform(&broken).jacobi_residual()
    );

    // With the norm Casimir in the last slot, the triple bracket IS the
    // rotation Lie-Poisson bracket.
    let so3 = PoissonSystem::so3();
    let casimir = Observable::half_norm_squared();
    let g = Observable::coordinate(0);
    let h = Observable::coordinate(1);
    let xi = [0.3, -0.4, 0.9];
    println!(
        "\n{{xi_1, xi_2, |xi|^2/2}} = {:+.6} and {{xi_1, xi_2}}_so3 = {:+.6} (both equal xi_3 = {:+.6})",
        triple_bracket(&g, &h, &casimir, &xi),
        so3.bracket(&g, &h, &xi).unwrap(),
        xi[2]
    );

    // Casimir membership as a numeric residual.
    println!(
        "casimir residual of |xi|^2/2 under so3: {:.2e}",
        so3.casimir_residual(&casimir, 100, 11)
    );
    println!(
        "casimir residual of r under heisenberg: {:.2e}",
        PoissonSystem::heisenberg().casimir_residual(&Observable::coordinate(0), 100, 11)
    );
    println!(
        "xi_1 is NOT a casimir of so3: residual {:.2e}",
        so3.casimir_residual(&Observable::coordinate(0), 100, 11)
    );

    // The derivation identity that makes the triple bracket a generator of
    // dynamics, checked on random quadratic observables.
    let mut worst_fi = 0.0f64;
    for _ in 0..20 {
        let obs: Vec<Observable> = (0..5)
            .map(|_| Observable::random_polynomial3(&mut rng, 2))
            .collect();
        let xi: Vec<f64> = (0..3).map(|_| rng.random_range(-1.0..1.0)).collect();
        worst_fi = worst_fi.max(fundamental_identity_residual(
            &obs[0], &obs[1], &obs[2], &obs[3], &obs[4], &xi,
        ));
    }
    println!("\nfundamental identity residual over 20 random quintuples: {worst_fi:.2e}");

    // Total antisymmetry of the raw determinant bracket.
    let a = [0.2, 0.7, -0.1];
    let b = [1.0, 0.0, 0.4];
    let c = [-0.3, 0.5, 0.8];
    println!(
        "triple product antisymmetry: {:+.6} = -({:+.6})",
        nambu_bracket(a, b, c),
        nambu_bracket(b, a, c)
    );
}
