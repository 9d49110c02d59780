//! Scalar observables on a finite-dimensional phase space, with analytic or
//! finite-difference gradients.

use std::sync::Arc;

use rand::Rng;

type ValueFn = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;
type GradientFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

/// A smooth function of the phase-space point together with its gradient.
///
/// Built-in polynomial observables carry analytic gradients; everything else
/// falls back to central finite differences with step
/// `cbrt(machine epsilon) * max(1, |xi_j|)` per component.
#[derive(Clone)]
pub struct Observable {
    value: ValueFn,
    gradient: Option<GradientFn>,
}

impl std::fmt::Debug for Observable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Observable")
            .field("analytic_gradient", &self.gradient.is_some())
            .finish()
    }
}

impl Observable {
    /// Wrap a value function; the gradient is taken by finite differences.
    pub fn new<F>(value: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self {
            value: Arc::new(value),
            gradient: None,
        }
    }

    /// Wrap a value function with its analytic gradient.
    pub fn with_gradient<F, G>(value: F, gradient: G) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
        G: Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    {
        Self {
            value: Arc::new(value),
            gradient: Some(Arc::new(gradient)),
        }
    }

    /// The coordinate function `xi -> xi_j`.
    pub fn coordinate(j: usize) -> Self {
        Self::with_gradient(
            move |xi: &[f64]| xi[j],
            move |xi: &[f64]| {
                let mut g = vec![0.0; xi.len()];
                g[j] = 1.0;
                g
            },
        )
    }

    pub fn constant(c: f64) -> Self {
        Self::with_gradient(move |_: &[f64]| c, |xi: &[f64]| vec![0.0; xi.len()])
    }

    /// `xi -> |xi|^2 / 2`, the rotation-algebra Casimir in any dimension.
    pub fn half_norm_squared() -> Self {
        Self::with_gradient(
            |xi: &[f64]| 0.5 * xi.iter().map(|x| x * x).sum::<f64>(),
            |xi: &[f64]| xi.to_vec(),
        )
    }

    /// Rigid-body kinetic energy `sum xi_j^2 / (2 I_j)`.
    pub fn kinetic_energy(moments: [f64; 3]) -> Self {
        Self::with_gradient(
            move |xi: &[f64]| {
                0.5 * (xi[0] * xi[0] / moments[0]
                    + xi[1] * xi[1] / moments[1]
                    + xi[2] * xi[2] / moments[2])
            },
            move |xi: &[f64]| {
                vec![
                    xi[0] / moments[0],
                    xi[1] / moments[1],
                    xi[2] / moments[2],
                ]
            },
        )
    }

    /// Polynomial on R^3 given as monomials `(coefficient, [p_x, p_y, p_z])`,
    /// with analytic gradient.
    pub fn polynomial3(monomials: Vec<(f64, [u8; 3])>) -> Self {
        let terms = Arc::new(monomials);
        let terms_v = Arc::clone(&terms);
        let terms_g = terms;
        Self::with_gradient(
            move |xi: &[f64]| {
                terms_v
                    .iter()
                    .map(|(c, p)| {
                        c * xi[0].powi(p[0] as i32)
                            * xi[1].powi(p[1] as i32)
                            * xi[2].powi(p[2] as i32)
                    })
                    .sum()
            },
            move |xi: &[f64]| {
                let mut g = vec![0.0; 3];
                for (c, p) in terms_g.iter() {
                    for (i, gi) in g.iter_mut().enumerate() {
                        if p[i] == 0 {
                            continue;
                        }
                        let mut term = c * p[i] as f64;
                        for (k, &pk) in p.iter().enumerate() {
                            let pow = if k == i { pk - 1 } else { pk };
                            term *= xi[k].powi(pow as i32);
                        }
                        *gi += term;
                    }
                }
                g
            },
        )
    }

    /// Random polynomial on R^3 of total degree <= `degree`, coefficients
    /// uniform in [-1, 1].
    pub fn random_polynomial3<R: Rng>(rng: &mut R, degree: u8) -> Self {
        let mut monomials = Vec::new();
        for px in 0..=degree {
            for py in 0..=degree - px {
                for pz in 0..=degree - px - py {
                    monomials.push((rng.random_range(-1.0..1.0), [px, py, pz]));
                }
            }
        }
        Self::polynomial3(monomials)
    }

    pub fn eval(&self, xi: &[f64]) -> f64 {
        (self.value)(xi)
    }

    pub fn has_analytic_gradient(&self) -> bool {
        self.gradient.is_some()
    }

    pub fn gradient(&self, xi: &[f64]) -> Vec<f64> {
        match &self.gradient {
            Some(g) => g(xi),
            None => finite_difference_gradient(&*self.value, xi),
        }
    }
}

/// Central finite-difference gradient with per-component step
/// `cbrt(eps) * max(1, |xi_j|)`.
pub fn finite_difference_gradient<F>(f: F, xi: &[f64]) -> Vec<f64>
where
    F: Fn(&[f64]) -> f64,
{
    let h0 = f64::EPSILON.cbrt();
    let mut grad = vec![0.0; xi.len()];
    let mut work = xi.to_vec();
    for j in 0..xi.len() {
        let h = h0 * xi[j].abs().max(1.0);
        work[j] = xi[j] + h;
        let fp = f(&work);
        work[j] = xi[j] - h;
        let fm = f(&work);
        work[j] = xi[j];
        grad[j] = (fp - fm) / (2.0 * h);
    }
    grad
}
