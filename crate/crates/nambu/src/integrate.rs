//! Time integration for finite-dimensional Poisson systems with conservation
//! diagnostics and cross-realization trajectory comparison.

use ndarray::Array1;
use serde::Serialize;

use crate::algebra3::{Observable, PoissonSystem};
use crate::clebsch::{
    angular_momentum_lift, angular_momentum_map, cayley_klein_map, cayley_klein_pullback,
    spin_lift, CanonicalState, SpinState,
};
use crate::error::{Error, Result};
use crate::output::{csv_row, fmt_f64};
use crate::vec3::{self, cross, Vec3};

/// Integration scheme selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Rk4,
    Midpoint,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rk4" => Ok(Method::Rk4),
            "midpoint" => Ok(Method::Midpoint),
            other => Err(Error::Config(format!(
                "unknown method \"{other}\" (expected rk4 or midpoint)"
            ))),
        }
    }
}

/// One classical fourth-order step.
pub fn step_rk4<F>(rhs: F, x: &Array1<f64>, dt: f64) -> Result<Array1<f64>>
where
    F: Fn(&Array1<f64>) -> Array1<f64>,
{
    if dt <= 0.0 {
        return Err(Error::NonPositive {
            name: "dt",
            value: dt,
        });
    }
    let k1 = rhs(x);
    let k2 = rhs(&(x + &(&k1 * (dt / 2.0))));
    let k3 = rhs(&(x + &(&k2 * (dt / 2.0))));
    let k4 = rhs(&(x + &(&k3 * dt)));
    Ok(x + &((k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0)))
}

/// One implicit-midpoint step of Hamilton's equation
/// `xi_dot = J(xi) grad H(xi)`, solved by fixed-point iteration on
/// `xi_next = xi + dt * J(m) grad H(m)` with `m = (xi + xi_next)/2`.
///
/// Quadratic invariants of the flow (such as `|xi|^2/2` for the rotation
/// bracket and the rigid-body energy) are conserved to solver tolerance.
pub fn step_implicit_midpoint(
    sys: &PoissonSystem,
    h: &Observable,
    xi: &[f64],
    dt: f64,
    tol: f64,
    max_iter: usize,
) -> Result<Vec<f64>> {
    if dt <= 0.0 {
        return Err(Error::NonPositive {
            name: "dt",
            value: dt,
        });
    }
    if tol <= 0.0 {
        return Err(Error::NonPositive {
            name: "tol",
            value: tol,
        });
    }
    let field = |point: &[f64]| -> Result<Vec<f64>> { sys.vector_field(h, point) };

    // Explicit Euler predictor.
    let f0 = field(xi)?;
    let mut next: Vec<f64> = xi.iter().zip(&f0).map(|(x, f)| x + dt * f).collect();
    let mut residual = f64::INFINITY;
    for _ in 0..max_iter {
        let mid: Vec<f64> = xi.iter().zip(&next).map(|(a, b)| 0.5 * (a + b)).collect();
        let fm = field(&mid)?;
        let proposal: Vec<f64> = xi.iter().zip(&fm).map(|(x, f)| x + dt * f).collect();
        residual = proposal
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt();
        next = proposal;
        if residual <= tol {
            return Ok(next);
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        residual,
    })
}

/// Discrete trajectory with named per-step invariant series.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<Array1<f64>>,
    pub state_names: Vec<String>,
    pub invariants: Vec<(String, Vec<f64>)>,
}

/// Run metadata mirrored next to the CSV so a run is reproducible.
#[derive(Debug, Clone, Serialize)]
pub struct RunMetadata {
    pub method: Method,
    pub dt: f64,
    pub nsteps: usize,
    pub seed: Option<u64>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Maximum relative drift of a named invariant from its initial value.
    pub fn relative_drift(&self, name: &str) -> Option<f64> {
        self.invariants
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, series)| max_relative_drift(series))
    }

    /// CSV with header `time,<state names>,<invariant names>`, full precision.
    pub fn to_csv(&self) -> String {
        let mut header = vec!["time".to_string()];
        header.extend(self.state_names.iter().cloned());
        header.extend(self.invariants.iter().map(|(n, _)| n.clone()));
        let mut out = header.join(",");
        out.push('\n');
        for (i, t) in self.times.iter().enumerate() {
            let mut row = vec![*t];
            row.extend(self.states[i].iter().copied());
            row.extend(self.invariants.iter().map(|(_, s)| s[i]));
            out.push_str(&csv_row(&row));
            out.push('\n');
        }
        out
    }

    /// JSON mirror of the run: metadata plus the full series.
    pub fn to_json(&self, meta: &RunMetadata) -> Result<String> {
        #[derive(Serialize)]
        struct Mirror<'a> {
            metadata: &'a RunMetadata,
            state_names: &'a [String],
            times: &'a [f64],
            states: Vec<&'a [f64]>,
            invariants: Vec<InvariantSeries<'a>>,
        }
        #[derive(Serialize)]
        struct InvariantSeries<'a> {
            name: &'a str,
            values: &'a [f64],
        }
        let mirror = Mirror {
            metadata: meta,
            state_names: &self.state_names,
            times: &self.times,
            states: self.states.iter().map(|s| s.as_slice().unwrap()).collect(),
            invariants: self
                .invariants
                .iter()
                .map(|(n, v)| InvariantSeries {
                    name: n,
                    values: v,
                })
                .collect(),
        };
        Ok(serde_json::to_string_pretty(&mirror)?)
    }
}

/// Max over the series of `|v - v_0| / max(|v_0|, floor)`.
pub fn max_relative_drift(series: &[f64]) -> f64 {
    let v0 = series.first().copied().unwrap_or(0.0);
    let scale = v0.abs().max(1e-300);
    series
        .iter()
        .map(|v| (v - v0).abs() / scale)
        .fold(0.0, f64::max)
}

/// Integrate Hamilton's equation on a Poisson system, recording the
/// Hamiltonian and every registered Casimir along the way.
pub fn simulate(
    sys: &PoissonSystem,
    h: &Observable,
    x0: &[f64],
    dt: f64,
    nsteps: usize,
    method: Method,
) -> Result<Trajectory> {
    if nsteps < 1 {
        return Err(Error::NonPositive {
            name: "nsteps",
            value: nsteps as f64,
        });
    }
    if x0.len() != sys.dim() {
        return Err(Error::DimensionMismatch {
            expected: sys.dim(),
            got: x0.len(),
        });
    }

    let mut invariant_obs: Vec<(String, Observable)> = vec![("H".to_string(), h.clone())];
    for (name, c) in sys.casimirs() {
        invariant_obs.push((name.clone(), c.clone()));
    }

    let mut times = Vec::with_capacity(nsteps + 1);
    let mut states = Vec::with_capacity(nsteps + 1);
    let mut series: Vec<Vec<f64>> = vec![Vec::with_capacity(nsteps + 1); invariant_obs.len()];

    let mut x = x0.to_vec();
    for step in 0..=nsteps {
        times.push(step as f64 * dt);
        states.push(Array1::from(x.clone()));
        for (slot, (_, obs)) in series.iter_mut().zip(&invariant_obs) {
            slot.push(obs.eval(&x));
        }
        if step == nsteps {
            break;
        }
        x = match method {
            Method::Midpoint => step_implicit_midpoint(sys, h, &x, dt, 1e-13, 50)?,
            Method::Rk4 => {
                let arr = Array1::from(x.clone());
                let next = step_rk4(
                    |y: &Array1<f64>| {
                        Array1::from(
                            sys.vector_field(h, y.as_slice().unwrap())
                                .expect("dimension checked"),
                        )
                    },
                    &arr,
                    dt,
                )?;
                next.to_vec()
            }
        };
    }

    Ok(Trajectory {
        times,
        states,
        state_names: (1..=sys.dim()).map(|i| format!("x{i}")).collect(),
        invariants: invariant_obs
            .into_iter()
            .map(|(n, _)| n)
            .zip(series)
            .collect(),
    })
}

fn rigid_body_gradient(xi: Vec3, moments: Vec3) -> Vec3 {
    [xi[0] / moments[0], xi[1] / moments[1], xi[2] / moments[2]]
}

/// Run the rigid body three ways -- directly on the reduced space, through
/// the 6-dimensional angular-momentum lift, and through the 4-dimensional
/// spin lift -- and return the maximum pairwise distance of the reduced
/// trajectories over all steps.
///
/// The reduction identities make the continuum trajectories identical; the
/// reported discrepancy is pure integrator error, O(dt^4 * nsteps) for rk4.
pub fn compare_realizations(xi0: Vec3, moments: Vec3, dt: f64, nsteps: usize) -> Result<f64> {
    for &m in &moments {
        if m <= 0.0 {
            return Err(Error::NonPositive {
                name: "moment of inertia",
                value: m,
            });
        }
    }
    if vec3::norm(xi0) == 0.0 {
        return Err(Error::InfeasibleLift {
            reason: "zero initial angular momentum has no spin lift".into(),
        });
    }

    // (a) reduced space: xi_dot = grad H1 x xi.
    let mut xi_a = Array1::from(xi0.to_vec());
    let rhs_a = |x: &Array1<f64>| {
        let xi = [x[0], x[1], x[2]];
        Array1::from(cross(rigid_body_gradient(xi, moments), xi).to_vec())
    };

    // (b) angular-momentum lift: q_dot = -q x w, p_dot = -p x w at w
    // evaluated on xi = q x p.
    let lift = angular_momentum_lift(xi0, 1.0)?;
    let mut z_b = Array1::from(lift.flat());
    let rhs_b = |z: &Array1<f64>| {
        let q = [z[0], z[1], z[2]];
        let p = [z[3], z[4], z[5]];
        let w = rigid_body_gradient(cross(q, p), moments);
        let qd = vec3::scale(cross(q, w), -1.0);
        let pd = vec3::scale(cross(p, w), -1.0);
        Array1::from(vec![qd[0], qd[1], qd[2], pd[0], pd[1], pd[2]])
    };

    // (c) spin lift: Z_dot = J_c * (pullback of grad H1).
    let spin = spin_lift(xi0)?;
    let mut z_c = Array1::from(spin.0.to_vec());
    let rhs_c = |z: &Array1<f64>| {
        let state = SpinState([z[0], z[1], z[2], z[3]]);
        let xi = cayley_klein_map(&state);
        let g = cayley_klein_pullback(rigid_body_gradient(xi, moments), &state);
        // Canonical layout (q1, q2, p1, p2): dq = +grad_p, dp = -grad_q.
        Array1::from(vec![g[2], g[3], -g[0], -g[1]])
    };

    let reduced_b = |z: &Array1<f64>| -> Result<Vec3> {
        let s = CanonicalState::from_flat(z.as_slice().unwrap())?;
        angular_momentum_map(&s)
    };
    let reduced_c =
        |z: &Array1<f64>| -> Vec3 { cayley_klein_map(&SpinState([z[0], z[1], z[2], z[3]])) };

    let mut worst = 0.0f64;
    for _ in 0..nsteps {
        xi_a = step_rk4(rhs_a, &xi_a, dt)?;
        z_b = step_rk4(rhs_b, &z_b, dt)?;
        z_c = step_rk4(rhs_c, &z_c, dt)?;

        let a = [xi_a[0], xi_a[1], xi_a[2]];
        let b = reduced_b(&z_b)?;
        let c = reduced_c(&z_c);
        worst = worst
            .max(vec3::norm(vec3::sub(a, b)))
            .max(vec3::norm(vec3::sub(a, c)))
            .max(vec3::norm(vec3::sub(b, c)));
    }
    Ok(worst)
}

/// One-line deterministic run summary: `key=value` pairs at full precision.
pub fn summary_line(experiment: &str, quantities: &[(&str, f64)]) -> String {
    let mut parts = vec![experiment.to_string()];
    for (k, v) in quantities {
        parts.push(format!("{k}={}", fmt_f64(*v)));
    }
    parts.join(" ")
}
