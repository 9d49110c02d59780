//! Test-only brute-force spectral toolkit: direct DFT sums and explicit
//! convolutions, independent of the FFT pipeline, for oracle comparisons at
//! small N.

use std::collections::HashMap;

use num_complex::Complex64;

use super::fields::{ScalarField, VectorField3, VorticityField};
use super::grid::Grid3;

pub type Coeffs = HashMap<(i64, i64, i64), Complex64>;

/// Direct O(N^6) DFT: coefficient of integer mode k is
/// `(1/N^3) sum_x f(x) exp(-i k.x)` over the window `{-N/2+1..N/2}^3`.
pub fn naive_coeffs(field: &ScalarField) -> Coeffs {
    let grid = field.grid();
    let n = grid.n();
    let half = n as i64 / 2;
    let mut out = Coeffs::new();
    for kx in -half + 1..=half {
        for ky in -half + 1..=half {
            for kz in -half + 1..=half {
                let mut acc = Complex64::new(0.0, 0.0);
                for ix in 0..n {
                    for iy in 0..n {
                        for iz in 0..n {
                            let arg = kx as f64 * grid.coord(ix)
                                + ky as f64 * grid.coord(iy)
                                + kz as f64 * grid.coord(iz);
                            acc += field.data()[[ix, iy, iz]]
                                * Complex64::new(0.0, -arg).exp();
                        }
                    }
                }
                let c = acc / (n * n * n) as f64;
                if c.norm() > 1e-14 {
                    out.insert((kx, ky, kz), c);
                }
            }
        }
    }
    out
}

/// Evaluate a coefficient table back on the grid (real part).
pub fn naive_eval(coeffs: &Coeffs, grid: Grid3) -> ScalarField {
    ScalarField::from_fn(grid, |x, y, z| {
        coeffs
            .iter()
            .map(|((kx, ky, kz), c)| {
                let arg = *kx as f64 * x + *ky as f64 * y + *kz as f64 * z;
                (c * Complex64::new(0.0, arg).exp()).re
            })
            .sum()
    })
}

/// Exact linear convolution of two coefficient tables; no wrap-around, so
/// the result is alias-free by construction.
pub fn convolve(a: &Coeffs, b: &Coeffs) -> Coeffs {
    let mut out = Coeffs::new();
    for ((ax, ay, az), ca) in a {
        for ((bx, by, bz), cb) in b {
            *out.entry((ax + bx, ay + by, az + bz))
                .or_insert(Complex64::new(0.0, 0.0)) += ca * cb;
        }
    }
    out
}

/// Keep only modes inside the two-thirds band of `grid`.
pub fn mask(coeffs: &Coeffs, grid: Grid3) -> Coeffs {
    coeffs
        .iter()
        .filter(|((kx, ky, kz), _)| grid.keeps_mode(*kx, *ky, *kz))
        .map(|(k, c)| (*k, *c))
        .collect()
}

pub fn derivative(coeffs: &Coeffs, axis: usize) -> Coeffs {
    coeffs
        .iter()
        .map(|(&k, &c)| {
            let kv = [k.0, k.1, k.2][axis] as f64;
            (k, c * Complex64::new(0.0, kv))
        })
        .collect()
}

fn curl_coeffs(v: &[Coeffs; 3]) -> [Coeffs; 3] {
    let d = |comp: usize, axis: usize| derivative(&v[comp], axis);
    let sub = |mut a: Coeffs, b: Coeffs| -> Coeffs {
        for (k, c) in b {
            *a.entry(k).or_insert(Complex64::new(0.0, 0.0)) -= c;
        }
        a
    };
    [
        sub(d(2, 1), d(1, 2)),
        sub(d(0, 2), d(2, 0)),
        sub(d(1, 0), d(0, 1)),
    ]
}

fn inv_curl_coeffs(w: &[Coeffs; 3]) -> [Coeffs; 3] {
    let mut out = [Coeffs::new(), Coeffs::new(), Coeffs::new()];
    let mut keys: std::collections::BTreeSet<(i64, i64, i64)> = Default::default();
    for comp in w {
        keys.extend(comp.keys());
    }
    for k in keys {
        let k2 = (k.0 * k.0 + k.1 * k.1 + k.2 * k.2) as f64;
        if k2 == 0.0 {
            continue;
        }
        let zero = Complex64::new(0.0, 0.0);
        let wv = [
            *w[0].get(&k).unwrap_or(&zero),
            *w[1].get(&k).unwrap_or(&zero),
            *w[2].get(&k).unwrap_or(&zero),
        ];
        let f = Complex64::new(0.0, 1.0 / k2);
        out[0].insert(k, f * (k.1 as f64 * wv[2] - k.2 as f64 * wv[1]));
        out[1].insert(k, f * (k.2 as f64 * wv[0] - k.0 as f64 * wv[2]));
        out[2].insert(k, f * (k.0 as f64 * wv[1] - k.1 as f64 * wv[0]));
    }
    out
}

/// Vorticity-equation right-hand side through direct convolutions.
pub fn vortex_rhs_oracle(omega: &VorticityField) -> VectorField3 {
    let grid = omega.grid();
    let w: [Coeffs; 3] = std::array::from_fn(|i| naive_coeffs(omega.field().component(i)));
    let v = inv_curl_coeffs(&w);
    // (v x w) by convolution.
    let sub = |mut a: Coeffs, b: Coeffs| -> Coeffs {
        for (k, c) in b {
            *a.entry(k).or_insert(Complex64::new(0.0, 0.0)) -= c;
        }
        a
    };
    let cross = [
        sub(convolve(&v[1], &w[2]), convolve(&v[2], &w[1])),
        sub(convolve(&v[2], &w[0]), convolve(&v[0], &w[2])),
        sub(convolve(&v[0], &w[1]), convolve(&v[1], &w[0])),
    ];
    let curled = curl_coeffs(&cross);
    VectorField3 {
        components: std::array::from_fn(|i| naive_eval(&mask(&curled[i], grid), grid)),
    }
}

/// Compressible right-hand side through direct convolutions, for the
/// polynomial (Gross-Pitaevskii) enthalpy `h = g rho`.
pub fn fluid_rhs_oracle(
    rho: &ScalarField,
    v: &VectorField3,
    g_coupling: f64,
) -> (ScalarField, VectorField3) {
    let grid = rho.grid();
    let rc = naive_coeffs(rho);
    let vc: [Coeffs; 3] = std::array::from_fn(|i| naive_coeffs(v.component(i)));

    // mass: -div(v rho)
    let mut mass = Coeffs::new();
    for axis in 0..3 {
        for (k, c) in derivative(&convolve(&vc[axis], &rc), axis) {
            *mass.entry(k).or_insert(Complex64::new(0.0, 0.0)) -= c;
        }
    }

    // momentum: -(v.grad) v - g grad rho
    let mut mom: [Coeffs; 3] = std::array::from_fn(|_| Coeffs::new());
    for (i, mom_i) in mom.iter_mut().enumerate() {
        for (axis, vc_axis) in vc.iter().enumerate() {
            let dv = derivative(&vc[i], axis);
            for (k, c) in convolve(vc_axis, &dv) {
                *mom_i.entry(k).or_insert(Complex64::new(0.0, 0.0)) -= c;
            }
        }
        for (k, c) in derivative(&rc, i) {
            *mom_i.entry(k).or_insert(Complex64::new(0.0, 0.0)) -= g_coupling * c;
        }
    }

    (
        naive_eval(&mask(&mass, grid), grid),
        VectorField3 {
            components: std::array::from_fn(|i| naive_eval(&mask(&mom[i], grid), grid)),
        },
    )
}
