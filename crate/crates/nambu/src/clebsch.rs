//! Canonicalization maps between canonical phase spaces and the noncanonical
//! rotation-algebra system: the angular-momentum reduction from R^6, the
//! spin (Cayley-Klein) reduction from R^4, gauge angles conjugate to the
//! Casimirs, and numeric reduction-equivalence residuals.

use num_complex::Complex64;

use crate::algebra3::Observable;
use crate::error::{Error, Result};
use crate::vec3::{self, cross, dot, Mat3, Vec3};

/// Conjugate coordinate pairs (q, p) of a canonical phase space.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalState {
    pub q: Vec<f64>,
    pub p: Vec<f64>,
}

impl CanonicalState {
    pub fn new(q: Vec<f64>, p: Vec<f64>) -> Result<Self> {
        if q.len() != p.len() {
            return Err(Error::DimensionMismatch {
                expected: q.len(),
                got: p.len(),
            });
        }
        if q.iter().chain(p.iter()).any(|v| !v.is_finite()) {
            return Err(Error::Config("canonical state has non-finite entries".into()));
        }
        Ok(Self { q, p })
    }

    pub fn pairs(&self) -> usize {
        self.q.len()
    }

    /// Flat layout (q_1..q_n, p_1..p_n) used by the canonical bracket.
    pub fn flat(&self) -> Vec<f64> {
        let mut z = self.q.clone();
        z.extend_from_slice(&self.p);
        z
    }

    pub fn from_flat(z: &[f64]) -> Result<Self> {
        if z.len() % 2 != 0 {
            return Err(Error::DimensionMismatch {
                expected: z.len() + 1,
                got: z.len(),
            });
        }
        let n = z.len() / 2;
        Self::new(z[..n].to_vec(), z[n..].to_vec())
    }

    fn q3(&self) -> Vec3 {
        [self.q[0], self.q[1], self.q[2]]
    }

    fn p3(&self) -> Vec3 {
        [self.p[0], self.p[1], self.p[2]]
    }
}

/// Point of the 4-dimensional spin phase space, stored as
/// `(q_1, q_2, p_1, p_2)` for the complex pair `z_j = q_j + i p_j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinState(pub [f64; 4]);

impl SpinState {
    pub fn z1(&self) -> Complex64 {
        Complex64::new(self.0[0], self.0[2])
    }

    pub fn z2(&self) -> Complex64 {
        Complex64::new(self.0[1], self.0[3])
    }
}

/// Canonical bracket contraction of two gradients in the flat layout
/// (q_1..q_n, p_1..p_n): `sum_j dG/dq_j dH/dp_j - dG/dp_j dH/dq_j`.
pub fn canonical_bracket(grad_g: &[f64], grad_h: &[f64]) -> Result<f64> {
    if grad_g.len() != grad_h.len() {
        return Err(Error::DimensionMismatch {
            expected: grad_g.len(),
            got: grad_h.len(),
        });
    }
    if grad_g.len() % 2 != 0 {
        return Err(Error::DimensionMismatch {
            expected: grad_g.len() + 1,
            got: grad_g.len(),
        });
    }
    let n = grad_g.len() / 2;
    let mut s = 0.0;
    for j in 0..n {
        s += grad_g[j] * grad_h[n + j] - grad_g[n + j] * grad_h[j];
    }
    Ok(s)
}

/// The momentum map of the angular-momentum reduction: `xi = q x p`.
pub fn angular_momentum_map(s: &CanonicalState) -> Result<Vec3> {
    if s.pairs() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: s.pairs(),
        });
    }
    Ok(cross(s.q3(), s.p3()))
}

/// Pull a gradient on the reduced space back to (q, p) space:
/// `d_q F = p x d_xi F`, `d_p F = -q x d_xi F`, stacked as a 6-vector.
pub fn pullback_gradient_qp(grad_xi: Vec3, s: &CanonicalState) -> Result<[f64; 6]> {
    if s.pairs() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: s.pairs(),
        });
    }
    let gq = cross(s.p3(), grad_xi);
    let gp = vec3::scale(cross(s.q3(), grad_xi), -1.0);
    Ok([gq[0], gq[1], gq[2], gp[0], gp[1], gp[2]])
}

fn grad3(o: &Observable, xi: Vec3) -> Vec3 {
    let g = o.gradient(&xi);
    [g[0], g[1], g[2]]
}

fn so3_bracket(g: &Observable, h: &Observable, xi: Vec3) -> f64 {
    dot(cross(grad3(g, xi), grad3(h, xi)), xi)
}

/// `|{G(xi(z)), H(xi(z))}_c - {G, H}_so3|` at `xi = q x p`: the reduction
/// identity holds exactly, so only roundoff remains for polynomial
/// observables.
pub fn reduction_residual_sp6(g: &Observable, h: &Observable, s: &CanonicalState) -> Result<f64> {
    let xi = angular_momentum_map(s)?;
    let lift_g = pullback_gradient_qp(grad3(g, xi), s)?;
    let lift_h = pullback_gradient_qp(grad3(h, xi), s)?;
    let canonical = canonical_bracket(&lift_g, &lift_h)?;
    Ok((canonical - so3_bracket(g, h, xi)).abs())
}

/// Quadratic spin map C^2 -> R^3 via Pauli-matrix sandwiches,
/// `xi_j = z* sigma_j z / 4`.
pub fn cayley_klein_map(z: &SpinState) -> Vec3 {
    let [q1, q2, p1, p2] = z.0;
    [
        0.5 * (q1 * q2 + p1 * p2),
        0.5 * (q1 * p2 - q2 * p1),
        0.25 * (q1 * q1 + p1 * p1 - q2 * q2 - p2 * p2),
    ]
}

/// Jacobian of [`cayley_klein_map`] with respect to (q_1, q_2, p_1, p_2);
/// row `j` is the gradient of `xi_j`.
fn cayley_klein_jacobian(z: &SpinState) -> [[f64; 4]; 3] {
    let [q1, q2, p1, p2] = z.0;
    [
        [0.5 * q2, 0.5 * q1, 0.5 * p2, 0.5 * p1],
        [0.5 * p2, -0.5 * p1, -0.5 * q2, 0.5 * q1],
        [0.5 * q1, -0.5 * q2, 0.5 * p1, -0.5 * p2],
    ]
}

/// Pull a gradient on R^3 back through the spin map to (q_1, q_2, p_1, p_2).
pub fn cayley_klein_pullback(grad_xi: Vec3, z: &SpinState) -> [f64; 4] {
    let jac = cayley_klein_jacobian(z);
    let mut out = [0.0; 4];
    for (row, jac_row) in jac.iter().enumerate() {
        for (col, o) in out.iter_mut().enumerate() {
            *o += jac_row[col] * grad_xi[row];
        }
    }
    out
}

/// The spin Casimir `C = (|z_1|^2 + |z_2|^2) / 2 = 2 |xi|`.
pub fn su2_casimir(z: &SpinState) -> f64 {
    let [q1, q2, p1, p2] = z.0;
    0.5 * (q1 * q1 + p1 * p1 + q2 * q2 + p2 * p2)
}

/// Gauge angle of the spin parameterization: the principal-branch half-sum
/// of the two phases, `theta = (Arg z_1 + Arg z_2) / 2`.
///
/// Conjugate to the Casimir in the sense `{C, theta}_4 = 1`: the flow of C
/// rotates both components by the same phase, so the spin map is invariant.
pub fn gauge_angle_su2(z: &SpinState) -> Result<f64> {
    for (component, v) in [z.z1(), z.z2()].into_iter().enumerate() {
        if v.norm() == 0.0 {
            return Err(Error::ZeroSpinComponent { component });
        }
    }
    Ok(0.5 * (z.z1().arg() + z.z2().arg()))
}

/// `|{G(xi(Z)), H(xi(Z))}_4 - {G, H}_so3|` at the spin image of Z.
pub fn spin_reduction_residual(g: &Observable, h: &Observable, z: &SpinState) -> f64 {
    let xi = cayley_klein_map(z);
    let lg = cayley_klein_pullback(grad3(g, xi), z);
    let lh = cayley_klein_pullback(grad3(h, xi), z);
    // Flat canonical layout for (q1, q2, p1, p2) is already (q.., p..).
    let canonical = canonical_bracket(&lg, &lh).expect("fixed length 4");
    (canonical - so3_bracket(g, h, xi)).abs()
}

/// Local coordinates flattening the rotation bracket near a point with
/// `xi_2^2 + xi_3^2 > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalChart {
    /// Constant Poisson matrix in the chart coordinates.
    pub j_prime: Mat3,
    /// Chart coordinates `(C, phi, xi_1)`.
    pub coords: [f64; 3],
}

/// Transform to coordinates `(C, phi, xi_1)` in which the rotation-algebra
/// Poisson matrix is constant with its kernel row explicit:
/// the Casimir row vanishes and `(phi, xi_1)` is a canonical pair.
///
/// `phi` is oriented so that `{phi, xi_1} = +1`; it vanishes on the positive
/// `xi_3` axis.
pub fn so3_local_poisson(xi: Vec3) -> Result<LocalChart> {
    let d = xi[1] * xi[1] + xi[2] * xi[2];
    if d == 0.0 {
        return Err(Error::ChartSingularity);
    }
    let c = 0.5 * dot(xi, xi);
    let phi = (-xi[1]).atan2(xi[2]);
    Ok(LocalChart {
        j_prime: [[0.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, -1.0, 0.0]],
        coords: [c, phi, xi[0]],
    })
}

/// Chart coordinate functions of [`so3_local_poisson`] as observables on R^3,
/// in the order (C, phi, xi_1).
pub fn so3_chart_observables() -> [Observable; 3] {
    [
        Observable::half_norm_squared(),
        Observable::new(|xi: &[f64]| (-xi[1]).atan2(xi[2])),
        Observable::coordinate(0),
    ]
}

/// Gauge angle of the angular-momentum parameterization, built in the chart
/// `j = argmax |q_j|`; conjugate to the Casimir `|xi|^2 / 2` in the sense
/// `{theta, C}_6 = 1`.
pub fn gauge_angle_angular(s: &CanonicalState) -> Result<f64> {
    let xi = angular_momentum_map(s)?;
    let r = vec3::norm(xi);
    if r == 0.0 {
        return Err(Error::InfeasibleLift {
            reason: "q x p = 0, no rotation axis".into(),
        });
    }
    let q = s.q3();
    let j = (0..3)
        .max_by(|&a, &b| q[a].abs().partial_cmp(&q[b].abs()).unwrap())
        .unwrap();
    let axis = vec3::scale(xi, 1.0 / r);
    let rotated = cross(axis, q);
    Ok((-rotated[j]).atan2(q[j]) / r)
}

/// A canonical 6-dimensional lift of `xi`: returns (q, p) with `q x p = xi`.
///
/// `scale` rescales q by `s` and p by `1/s`; the reduction is lift
/// independent, so any positive scale is valid.
pub fn angular_momentum_lift(xi: Vec3, scale: f64) -> Result<CanonicalState> {
    let r = vec3::norm(xi);
    if r == 0.0 {
        return Err(Error::InfeasibleLift {
            reason: "cannot lift the zero angular momentum".into(),
        });
    }
    if scale <= 0.0 {
        return Err(Error::NonPositive {
            name: "lift scale",
            value: scale,
        });
    }
    let axis = vec3::scale(xi, 1.0 / r);
    // Coordinate axis least aligned with xi, projected to the normal plane.
    let k = (0..3)
        .min_by(|&a, &b| axis[a].abs().partial_cmp(&axis[b].abs()).unwrap())
        .unwrap();
    let mut e = [0.0; 3];
    e[k] = 1.0;
    let e = vec3::sub(e, vec3::scale(axis, axis[k]));
    let e = vec3::scale(e, 1.0 / vec3::norm(e));
    let q = vec3::scale(e, scale);
    let p = vec3::scale(cross(axis, e), r / scale);
    CanonicalState::new(q.to_vec(), p.to_vec())
}

/// A 4-dimensional spin lift of `xi`: returns Z with the spin map image `xi`.
pub fn spin_lift(xi: Vec3) -> Result<SpinState> {
    let r = vec3::norm(xi);
    if r == 0.0 {
        return Err(Error::InfeasibleLift {
            reason: "cannot lift the zero spin vector".into(),
        });
    }
    let (z1, z2) = if xi[2] >= -0.5 * r {
        let z1 = Complex64::new((2.0 * (r + xi[2])).sqrt(), 0.0);
        let z2 = 2.0 * Complex64::new(xi[0], xi[1]) / z1;
        (z1, z2)
    } else {
        let z2 = Complex64::new((2.0 * (r - xi[2])).sqrt(), 0.0);
        let z1 = 2.0 * Complex64::new(xi[0], -xi[1]) / z2;
        (z1, z2)
    };
    Ok(SpinState([z1.re, z2.re, z1.im, z2.im]))
}
