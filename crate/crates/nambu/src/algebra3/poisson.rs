//! Poisson systems: a phase-space dimension, a Poisson-matrix evaluator, and
//! registered Casimirs.

use std::sync::Arc;

use ndarray::Array2;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::lie::{nambu_bracket, LieAlgebra3};
use super::observable::Observable;
use crate::error::{Error, Result};
use crate::vec3::Vec3;

type MatrixFn = Arc<dyn Fn(&[f64]) -> Array2<f64> + Send + Sync>;

/// A (generally noncanonical) Poisson structure on R^dim.
#[derive(Clone)]
pub struct PoissonSystem {
    dim: usize,
    label: String,
    matrix: MatrixFn,
    casimirs: Vec<(String, Observable)>,
}

impl std::fmt::Debug for PoissonSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PoissonSystem")
            .field("dim", &self.dim)
            .field("label", &self.label)
            .field("casimirs", &self.casimirs.len())
            .finish()
    }
}

impl PoissonSystem {
    /// Lie-Poisson structure of a 3-dimensional algebra:
    /// `{G, H} = <grad G, J(xi) grad H>` with `J_{jk} = c[l][j][k] xi_l`.
    pub fn lie_poisson(alg: &LieAlgebra3) -> Self {
        let alg = alg.clone();
        let label = alg.label().to_string();
        Self {
            dim: 3,
            label,
            matrix: Arc::new(move |xi: &[f64]| {
                let m = alg.lie_poisson_matrix([xi[0], xi[1], xi[2]]);
                Array2::from_shape_fn((3, 3), |(r, c)| m[r][c])
            }),
            casimirs: Vec::new(),
        }
    }

    /// Rotation-algebra system with its Casimir `|xi|^2 / 2` registered.
    pub fn so3() -> Self {
        Self::lie_poisson(&LieAlgebra3::so3())
            .with_casimir("half_norm_squared", Observable::half_norm_squared())
    }

    /// Heisenberg system in coordinates (r, q, p) with the Casimir r.
    pub fn heisenberg() -> Self {
        Self::lie_poisson(&LieAlgebra3::heisenberg()).with_casimir("r", Observable::coordinate(0))
    }

    /// Canonical structure on R^{2n} with coordinates (q_1..q_n, p_1..p_n):
    /// the constant block matrix [[0, I], [-I, 0]].
    pub fn canonical(pairs: usize) -> Self {
        let dim = 2 * pairs;
        Self {
            dim,
            label: format!("canonical-{dim}"),
            matrix: Arc::new(move |_xi: &[f64]| {
                let mut j = Array2::zeros((dim, dim));
                for i in 0..pairs {
                    j[[i, pairs + i]] = 1.0;
                    j[[pairs + i, i]] = -1.0;
                }
                j
            }),
            casimirs: Vec::new(),
        }
    }

    pub fn with_casimir(mut self, name: &str, c: Observable) -> Self {
        self.casimirs.push((name.to_string(), c));
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn casimirs(&self) -> &[(String, Observable)] {
        &self.casimirs
    }

    pub fn matrix(&self, xi: &[f64]) -> Array2<f64> {
        (self.matrix)(xi)
    }

    /// `{G, H}(xi) = <grad G, J(xi) grad H>`.
    pub fn bracket(&self, g: &Observable, h: &Observable, xi: &[f64]) -> Result<f64> {
        if xi.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: xi.len(),
            });
        }
        let gg = g.gradient(xi);
        let gh = h.gradient(xi);
        let j = self.matrix(xi);
        let mut s = 0.0;
        for r in 0..self.dim {
            for c in 0..self.dim {
                s += gg[r] * j[[r, c]] * gh[c];
            }
        }
        Ok(s)
    }

    /// Hamiltonian vector field `J(xi) grad H(xi)`.
    pub fn vector_field(&self, h: &Observable, xi: &[f64]) -> Result<Vec<f64>> {
        if xi.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: xi.len(),
            });
        }
        let gh = h.gradient(xi);
        let j = self.matrix(xi);
        Ok((0..self.dim)
            .map(|r| (0..self.dim).map(|c| j[[r, c]] * gh[c]).sum())
            .collect())
    }

    /// Deterministic sample points with components uniform in [-1, 1].
    fn sample_points(&self, samples: usize, seed: u64) -> Vec<Vec<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples)
            .map(|_| (0..self.dim).map(|_| rng.random_range(-1.0..1.0)).collect())
            .collect()
    }

    /// Max over sampled points of `|J(xi) grad C(xi)| / (1 + |xi|^2)`;
    /// zero (to roundoff) exactly when C is a Casimir.
    pub fn casimir_residual(&self, c: &Observable, samples: usize, seed: u64) -> f64 {
        let mut worst = 0.0f64;
        for xi in self.sample_points(samples.max(1), seed) {
            let v = self.vector_field(c, &xi).expect("dimension fixed by sampler");
            let norm2: f64 = xi.iter().map(|x| x * x).sum();
            let vnorm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            worst = worst.max(vnorm / (1.0 + norm2));
        }
        worst
    }

    /// Max over sampled points of `max_jk |J + J^T|_jk`.
    pub fn antisymmetry_residual(&self, samples: usize, seed: u64) -> f64 {
        let mut worst = 0.0f64;
        for xi in self.sample_points(samples.max(1), seed) {
            let j = self.matrix(&xi);
            for r in 0..self.dim {
                for c in 0..self.dim {
                    worst = worst.max((j[[r, c]] + j[[c, r]]).abs());
                }
            }
        }
        worst
    }
}

/// Free-function form of [`PoissonSystem::bracket`].
pub fn poisson_bracket(
    sys: &PoissonSystem,
    g: &Observable,
    h: &Observable,
    xi: &[f64],
) -> Result<f64> {
    sys.bracket(g, h, xi)
}

/// Free-function form of [`PoissonSystem::casimir_residual`].
pub fn casimir_check(sys: &PoissonSystem, c: &Observable, samples: usize, seed: u64) -> f64 {
    sys.casimir_residual(c, samples, seed)
}

/// Free-function form of [`PoissonSystem::antisymmetry_residual`].
pub fn antisymmetry_residual(sys: &PoissonSystem, samples: usize, seed: u64) -> f64 {
    sys.antisymmetry_residual(samples, seed)
}

fn grad3(o: &Observable, xi: &[f64]) -> Vec3 {
    let g = o.gradient(xi);
    [g[0], g[1], g[2]]
}

/// The R^3 triple-product bracket of three observables at a point.
pub fn triple_bracket(a: &Observable, b: &Observable, c: &Observable, xi: &[f64]) -> f64 {
    nambu_bracket(grad3(a, xi), grad3(b, xi), grad3(c, xi))
}

/// Residual `|LHS - RHS|` of the derivation identity for the R^3
/// triple-product bracket,
///
/// `{{A,B,C},H1,H2} = {{A,H1,H2},B,C} + {A,{B,H1,H2},C} + {A,B,{C,H1,H2}}`,
///
/// evaluated at `xi`. Nested brackets are new scalar functions whose
/// gradients fall back to finite differences, so the residual floor is the
/// finite-difference error, not machine epsilon.
pub fn fundamental_identity_residual(
    a: &Observable,
    b: &Observable,
    c: &Observable,
    h1: &Observable,
    h2: &Observable,
    xi: &[f64],
) -> f64 {
    let nested = |x: &Observable, y: &Observable, z: &Observable| -> Observable {
        let (x, y, z) = (x.clone(), y.clone(), z.clone());
        Observable::new(move |xi: &[f64]| triple_bracket(&x, &y, &z, xi))
    };

    let abc = nested(a, b, c);
    let lhs = triple_bracket(&abc, h1, h2, xi);

    let a_h = nested(a, h1, h2);
    let b_h = nested(b, h1, h2);
    let c_h = nested(c, h1, h2);
    let rhs = triple_bracket(&a_h, b, c, xi)
        + triple_bracket(a, &b_h, c, xi)
        + triple_bracket(a, b, &c_h, xi);

    (lhs - rhs).abs()
}
