//! Complex 3D FFTs and wavenumber-space operators.

use ndarray::{Array3, Axis};
use num_complex::Complex64;
use rustfft::FftPlanner;

use super::grid::Grid3;

/// In-place complex FFT along all three axes; the inverse carries the
/// 1/N^3 normalization.
pub fn fft3_inplace(a: &mut Array3<Complex64>, inverse: bool) {
    let mut planner = FftPlanner::new();
    for axis in 0..3 {
        let n = a.shape()[axis];
        let fft = if inverse {
            planner.plan_fft_inverse(n)
        } else {
            planner.plan_fft_forward(n)
        };
        let mut buf = vec![Complex64::new(0.0, 0.0); n];
        for mut lane in a.lanes_mut(Axis(axis)) {
            for (b, v) in buf.iter_mut().zip(lane.iter()) {
                *b = *v;
            }
            fft.process(&mut buf);
            for (v, b) in lane.iter_mut().zip(buf.iter()) {
                *v = *b;
            }
        }
    }
    if inverse {
        let scale = 1.0 / a.len() as f64;
        a.mapv_inplace(|v| v * scale);
    }
}

pub fn forward(real: &Array3<f64>) -> Array3<Complex64> {
    let mut spec = real.mapv(|v| Complex64::new(v, 0.0));
    fft3_inplace(&mut spec, false);
    spec
}

/// Inverse transform of a conjugate-symmetric spectrum; the imaginary part
/// is discarded (it is roundoff for real fields).
pub fn backward(spec: &Array3<Complex64>) -> Array3<f64> {
    let mut work = spec.clone();
    fft3_inplace(&mut work, true);
    work.mapv(|v| v.re)
}

pub fn forward_complex(field: &Array3<Complex64>) -> Array3<Complex64> {
    let mut spec = field.clone();
    fft3_inplace(&mut spec, false);
    spec
}

pub fn backward_complex(spec: &Array3<Complex64>) -> Array3<Complex64> {
    let mut work = spec.clone();
    fft3_inplace(&mut work, true);
    work
}

/// Apply `f(k, value)` over the spectrum, with `k` the integer wavenumber
/// triple of each bin.
pub fn map_modes<F>(spec: &mut Array3<Complex64>, grid: Grid3, mut f: F)
where
    F: FnMut([i64; 3], Complex64) -> Complex64,
{
    let n = grid.n();
    for ix in 0..n {
        let kx = grid.wavenumber(ix);
        for iy in 0..n {
            let ky = grid.wavenumber(iy);
            for iz in 0..n {
                let kz = grid.wavenumber(iz);
                let v = spec[[ix, iy, iz]];
                spec[[ix, iy, iz]] = f([kx, ky, kz], v);
            }
        }
    }
}

/// Zero every mode outside the two-thirds band.
pub fn dealias_inplace(spec: &mut Array3<Complex64>, grid: Grid3) {
    map_modes(spec, grid, |k, v| {
        if grid.keeps_mode(k[0], k[1], k[2]) {
            v
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
}

/// Spectral partial derivative along `axis`.
pub fn derivative(spec: &Array3<Complex64>, grid: Grid3, axis: usize) -> Array3<Complex64> {
    let mut out = spec.clone();
    map_modes(&mut out, grid, |k, v| {
        Complex64::new(0.0, k[axis] as f64) * v
    });
    out
}

/// Spectral Laplacian: multiplication by `-|k|^2`.
pub fn laplacian(spec: &Array3<Complex64>, grid: Grid3) -> Array3<Complex64> {
    let mut out = spec.clone();
    map_modes(&mut out, grid, |k, v| {
        let k2 = (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]) as f64;
        v * (-k2)
    });
    out
}
