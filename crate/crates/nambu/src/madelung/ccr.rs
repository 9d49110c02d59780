//! Discrete canonical commutation check: on the grid, each point's
//! `(rho_j, S_j)` is a canonical pair of weight 1/cell-volume, and the wave
//! function inherits `{psi_a(x), psi_b*(y)} = (1/(i hbar)) delta_ab
//! delta_xy / cell`.

use num_complex::Complex64;

use crate::error::Result;
use crate::field::Grid3;

use super::spinor::SpinorField;

fn madelung_wave(rho: f64, action: f64, hbar: f64) -> Complex64 {
    Complex64::from_polar(rho.max(0.0).sqrt(), action / hbar)
}

/// Fourth-order five-point finite-difference partials of `psi` with respect
/// to its two real degrees of freedom at one grid point. The higher-order
/// stencil keeps the residual floor well below the 1/cell-volume weight of
/// the discrete delta.
fn wave_partials(rho: f64, action: f64, hbar: f64) -> (Complex64, Complex64) {
    let eps = f64::EPSILON.powf(0.2);
    let stencil = |f: &dyn Fn(f64) -> Complex64, x0: f64, h: f64| -> Complex64 {
        (f(x0 - 2.0 * h) - f(x0 - h) * 8.0 + f(x0 + h) * 8.0 - f(x0 + 2.0 * h)) / (12.0 * h)
    };
    let h_rho = eps * rho.abs().max(1.0);
    let h_action = eps * action.abs().max(hbar);
    let d_rho = stencil(&|r| madelung_wave(r, action, hbar), rho, h_rho);
    let d_action = stencil(&|s| madelung_wave(rho, s, hbar), action, h_action);
    (d_rho, d_action)
}

/// Residual of the chain-rule bracket `{psi_a(x), psi_b*(y)}` against
/// `(1/(i hbar)) delta_ab delta_xy / cell`.
///
/// The bracket is assembled from finite-difference partials through the
/// discrete pairs `{rho_j(x), S_k(y)} = delta_jk delta_xy / cell`; the
/// locality and component deltas short-circuit every off-diagonal
/// combination exactly.
pub fn ccr_residual(
    psi: &SpinorField,
    a: usize,
    b: usize,
    x: [usize; 3],
    y: [usize; 3],
) -> Result<Complex64> {
    let data = psi.decompose()?;
    let grid: Grid3 = psi.grid();
    let cell = grid.cell_volume();
    let hbar = psi.hbar();

    // {psi_a(x), psi_b*(y)} = dpsi_a/drho_a(x) dpsi_b*/dS_b(y) {rho_a(x), S_b(y)}
    //                       + dpsi_a/dS_a(x) dpsi_b*/drho_b(y) {S_a(x), rho_b(y)}
    let bracket = if a == b && x == y {
        let rho = data.rho[a].data()[x];
        let action = data.action[a].data()[x];
        let (d_rho, d_action) = wave_partials(rho, action, hbar);
        (d_rho * d_action.conj() - d_action * d_rho.conj()) / cell
    } else {
        Complex64::new(0.0, 0.0)
    };

    let expected = if a == b && x == y {
        Complex64::new(0.0, -1.0 / (hbar * cell))
    } else {
        Complex64::new(0.0, 0.0)
    };
    Ok(bracket - expected)
}
