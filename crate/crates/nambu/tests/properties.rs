//! Property tests for the structural invariants that hold for all inputs.

use proptest::prelude::*;

use nambu::algebra3::{nambu_bracket, LieAlgebra3};
use nambu::clebsch::{canonical_bracket, cayley_klein_map, su2_casimir, SpinState};
use nambu::vec3::{norm, Vec3};

fn vec3_strategy() -> impl Strategy<Value = Vec3> {
    [-10.0..10.0f64, -10.0..10.0, -10.0..10.0]
}

proptest! {
    #[test]
    fn triple_bracket_is_totally_antisymmetric(
        a in vec3_strategy(),
        b in vec3_strategy(),
        c in vec3_strategy(),
    ) {
        let v = nambu_bracket(a, b, c);
        let scale = v.abs().max(1.0);
        prop_assert!((nambu_bracket(b, a, c) + v).abs() / scale <= 1e-12);
        prop_assert!((nambu_bracket(a, c, b) + v).abs() / scale <= 1e-12);
        prop_assert!((nambu_bracket(c, b, a) + v).abs() / scale <= 1e-12);
        prop_assert!((nambu_bracket(b, c, a) - v).abs() / scale <= 1e-12);
    }

    #[test]
    fn lie_bracket_is_antisymmetric_for_every_catalog_algebra(
        x in vec3_strategy(),
        y in vec3_strategy(),
        which in 0usize..9,
    ) {
        let alg = LieAlgebra3::bianchi(nambu::algebra3::BianchiType::ALL[which]);
        let fwd = alg.bracket(x, y);
        let bwd = alg.bracket(y, x);
        let scale = norm(fwd).max(1.0);
        for i in 0..3 {
            prop_assert!((fwd[i] + bwd[i]).abs() / scale <= 1e-12);
        }
    }

    #[test]
    fn spin_casimir_is_twice_the_reduced_norm(z in prop::array::uniform4(-10.0..10.0f64)) {
        let state = SpinState(z);
        let xi = cayley_klein_map(&state);
        let c = su2_casimir(&state);
        prop_assert!((c - 2.0 * norm(xi)).abs() <= 1e-12 * c.max(1.0));
    }

    #[test]
    fn canonical_bracket_is_antisymmetric(
        g in prop::collection::vec(-5.0..5.0f64, 6),
        h in prop::collection::vec(-5.0..5.0f64, 6),
    ) {
        let fwd = canonical_bracket(&g, &h).unwrap();
        let bwd = canonical_bracket(&h, &g).unwrap();
        prop_assert!((fwd + bwd).abs() <= 1e-12 * fwd.abs().max(1.0));
    }

    #[test]
    fn structure_constant_files_round_trip(entries in prop::collection::vec(-3.0..3.0f64, 9)) {
        // Build an antisymmetric-in-(j,k) tensor from 9 free entries.
        let mut c = [[[0.0; 3]; 3]; 3];
        let mut it = entries.iter();
        for l in 0..3 {
            for j in 0..3 {
                for k in (j + 1)..3 {
                    let v = *it.next().unwrap();
                    c[l][j][k] = v;
                    c[l][k][j] = -v;
                }
            }
        }
        let alg = LieAlgebra3::from_structure_constants(c, "prop").unwrap();
        let mut text = String::from("label = prop\nc =");
        for l in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    text.push_str(&format!(" {:e}", alg.structure_constants()[l][j][k]));
                }
            }
        }
        let parsed = LieAlgebra3::from_key_value_str(&text).unwrap();
        prop_assert_eq!(parsed.structure_constants(), alg.structure_constants());
    }
}
