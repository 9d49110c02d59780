//! The vorticity equation on the divergence-free subspace, its Hamiltonian,
//! and its Casimir.

use ndarray::Array3;
use num_complex::Complex64;

use super::fields::{ScalarField, VectorField3, VorticityField};
use super::grid::Grid3;
use crate::error::Result;

/// Invert the curl on mean-free divergence-free fields:
/// `v_hat(k) = i k x w_hat(k) / |k|^2`, zero at `k = 0`.
///
/// The result is again mean-free and divergence-free, and
/// `curl(inv_curl(w)) = w` on resolved modes.
pub fn inv_curl(omega: &VorticityField) -> VectorField3 {
    inv_curl_unchecked(omega.field())
}

pub(super) fn inv_curl_unchecked(omega: &VectorField3) -> VectorField3 {
    let grid = omega.grid();
    let specs: Vec<Array3<Complex64>> = omega
        .components
        .iter()
        .map(|c| c.to_spectral())
        .collect();
    let n = grid.n();
    let mut out = [
        Array3::<Complex64>::zeros((n, n, n)),
        Array3::<Complex64>::zeros((n, n, n)),
        Array3::<Complex64>::zeros((n, n, n)),
    ];
    for ix in 0..n {
        let kx = grid.wavenumber(ix) as f64;
        for iy in 0..n {
            let ky = grid.wavenumber(iy) as f64;
            for iz in 0..n {
                let kz = grid.wavenumber(iz) as f64;
                let k2 = kx * kx + ky * ky + kz * kz;
                if k2 == 0.0 {
                    continue;
                }
                let w = [
                    specs[0][[ix, iy, iz]],
                    specs[1][[ix, iy, iz]],
                    specs[2][[ix, iy, iz]],
                ];
                let i_over_k2 = Complex64::new(0.0, 1.0 / k2);
                out[0][[ix, iy, iz]] = i_over_k2 * (ky * w[2] - kz * w[1]);
                out[1][[ix, iy, iz]] = i_over_k2 * (kz * w[0] - kx * w[2]);
                out[2][[ix, iy, iz]] = i_over_k2 * (kx * w[1] - ky * w[0]);
            }
        }
    }
    VectorField3 {
        components: std::array::from_fn(|i| ScalarField::from_spectral(grid, &out[i])),
    }
}

/// Right-hand side of the vorticity equation,
/// `dw/dt = curl((inv_curl w) x w)`, with the quadratic term dealiased by
/// the two-thirds rule. The output is mean-free and divergence-free.
pub fn vortex_rhs(omega: &VorticityField) -> VectorField3 {
    vortex_rhs_unchecked(omega.field())
}

fn vortex_rhs_unchecked(omega: &VectorField3) -> VectorField3 {
    let v = inv_curl_unchecked(omega);
    v.cross(omega).curl().dealiased()
}

/// Casimir of the vorticity bracket: `(1/2) <inv_curl w, w>`, the linkage
/// of vortex lines.
pub fn helicity(omega: &VorticityField) -> f64 {
    0.5 * inv_curl(omega).inner(omega.field())
}

/// Hamiltonian of the vorticity equation: `(1/2) int |inv_curl w|^2`.
pub fn kinetic_energy(omega: &VorticityField) -> f64 {
    let v = inv_curl(omega);
    0.5 * v.inner(&v)
}

/// One rk4 step of the vorticity equation.
pub fn vortex_step_rk4(omega: &VorticityField, dt: f64) -> Result<VorticityField> {
    if dt <= 0.0 {
        return Err(crate::error::Error::NonPositive {
            name: "dt",
            value: dt,
        });
    }
    let w = omega.field();
    let k1 = vortex_rhs_unchecked(w);
    let k2 = vortex_rhs_unchecked(&w.add_scaled(&k1, dt / 2.0));
    let k3 = vortex_rhs_unchecked(&w.add_scaled(&k2, dt / 2.0));
    let k4 = vortex_rhs_unchecked(&w.add_scaled(&k3, dt));
    let next = w
        .add_scaled(&k1, dt / 6.0)
        .add_scaled(&k2, dt / 3.0)
        .add_scaled(&k3, dt / 3.0)
        .add_scaled(&k4, dt / 6.0);
    VorticityField::new(next)
}

/// Beltrami eigenfield `(0, sin x, cos x)`: curl w = w, so the induced
/// velocity is parallel to the vorticity and the flow is steady.
pub fn beltrami(grid: Grid3) -> VorticityField {
    let v = VectorField3::from_fns(grid, |x, _, _| [0.0, x.sin(), x.cos()]);
    VorticityField::new(v).expect("beltrami field is admissible")
}

/// Random band-limited scalar: a seeded sum of cosines with integer modes up
/// to `max_mode` in each direction.
pub fn random_band_limited_scalar<R: rand::Rng>(
    grid: Grid3,
    max_mode: i64,
    rng: &mut R,
) -> ScalarField {
    let n = grid.n();
    let mut data = Array3::<f64>::zeros((n, n, n));
    for kx in -max_mode..=max_mode {
        for ky in -max_mode..=max_mode {
            for kz in -max_mode..=max_mode {
                if (kx, ky, kz) == (0, 0, 0) {
                    continue;
                }
                let amp: f64 = rng.random_range(-1.0..1.0);
                let phase: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                for ix in 0..n {
                    for iy in 0..n {
                        for iz in 0..n {
                            let arg = kx as f64 * grid.coord(ix)
                                + ky as f64 * grid.coord(iy)
                                + kz as f64 * grid.coord(iz)
                                + phase;
                            data[[ix, iy, iz]] += amp * arg.cos();
                        }
                    }
                }
            }
        }
    }
    ScalarField::from_data(grid, data).expect("shape fixed by construction")
}

/// Random band-limited vorticity: the curl of a random vector potential
/// with modes up to `max_mode`, rescaled to the requested amplitude.
pub fn random_vorticity(grid: Grid3, max_mode: i64, amplitude: f64, seed: u64) -> VorticityField {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let potential = VectorField3 {
        components: std::array::from_fn(|_| random_band_limited_scalar(grid, max_mode, &mut rng)),
    };
    let omega = potential.curl();
    let scale = amplitude / omega.linf().max(1e-300);
    VorticityField::new(omega.scaled(scale)).expect("curl field is admissible")
}
