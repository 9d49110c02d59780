//! Spinor fields, the density/phase (Madelung) decomposition, and the linear
//! maps onto canonical fluid potentials.

use ndarray::Array3;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{ClebschFields, Grid3, ScalarField, VectorField3, RHO_FLOOR};
use crate::field::spectral;

/// An n-component complex field (n in {1, 2, 3}) with its quantum of action.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorField {
    psi: Vec<Array3<Complex64>>,
    hbar: f64,
    grid: Grid3,
}

impl SpinorField {
    pub fn new(grid: Grid3, psi: Vec<Array3<Complex64>>, hbar: f64) -> Result<Self> {
        if psi.is_empty() || psi.len() > 3 {
            return Err(Error::Config(format!(
                "spinor needs 1..=3 components, got {}",
                psi.len()
            )));
        }
        if hbar <= 0.0 {
            return Err(Error::NonPositive {
                name: "hbar",
                value: hbar,
            });
        }
        let n = grid.n();
        for comp in &psi {
            if comp.dim() != (n, n, n) {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: comp.dim().0,
                });
            }
        }
        Ok(Self { psi, hbar, grid })
    }

    /// Sample components from closures of the grid coordinates.
    pub fn from_fns<F>(grid: Grid3, components: usize, hbar: f64, f: F) -> Result<Self>
    where
        F: Fn(usize, f64, f64, f64) -> Complex64,
    {
        let n = grid.n();
        let psi = (0..components)
            .map(|j| {
                Array3::from_shape_fn((n, n, n), |(ix, iy, iz)| {
                    f(j, grid.coord(ix), grid.coord(iy), grid.coord(iz))
                })
            })
            .collect();
        Self::new(grid, psi, hbar)
    }

    pub fn grid(&self) -> Grid3 {
        self.grid
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn components(&self) -> usize {
        self.psi.len()
    }

    pub fn component(&self, j: usize) -> &Array3<Complex64> {
        &self.psi[j]
    }

    pub(crate) fn components_mut(&mut self) -> &mut Vec<Array3<Complex64>> {
        &mut self.psi
    }

    /// Total density `rho = sum_j |psi_j|^2`.
    pub fn total_density(&self) -> ScalarField {
        let n = self.grid.n();
        let mut data = Array3::<f64>::zeros((n, n, n));
        for comp in &self.psi {
            data += &comp.mapv(|z| z.norm_sqr());
        }
        ScalarField::from_data(self.grid, data).expect("shape fixed")
    }

    /// Total norm `int rho`.
    pub fn norm(&self) -> f64 {
        self.total_density().integral()
    }

    /// Split each component into density and principal-branch action,
    /// `psi_j = sqrt(rho_j) exp(i S_j / hbar)`.
    ///
    /// Fails where any component magnitude reaches the node floor: the phase
    /// is undefined there and no regularization is attempted.
    pub fn decompose(&self) -> Result<MadelungData> {
        let mut rho = Vec::with_capacity(self.psi.len());
        let mut action = Vec::with_capacity(self.psi.len());
        for (j, comp) in self.psi.iter().enumerate() {
            let min_abs = comp.iter().fold(f64::INFINITY, |m, z| m.min(z.norm()));
            if min_abs.is_nan() || min_abs * min_abs <= RHO_FLOOR {
                return Err(Error::NodeDetected {
                    component: j,
                    min_abs,
                });
            }
            rho.push(
                ScalarField::from_data(self.grid, comp.mapv(|z| z.norm_sqr()))
                    .expect("shape fixed"),
            );
            action.push(
                ScalarField::from_data(self.grid, comp.mapv(|z| self.hbar * z.arg()))
                    .expect("shape fixed"),
            );
        }
        Ok(MadelungData {
            rho,
            action,
            hbar: self.hbar,
            grid: self.grid,
        })
    }
}

/// Per-component densities and principal-branch actions.
#[derive(Debug, Clone, PartialEq)]
pub struct MadelungData {
    pub rho: Vec<ScalarField>,
    pub action: Vec<ScalarField>,
    hbar: f64,
    grid: Grid3,
}

impl MadelungData {
    pub fn new(rho: Vec<ScalarField>, action: Vec<ScalarField>, hbar: f64) -> Result<Self> {
        if rho.len() != action.len() || rho.is_empty() || rho.len() > 3 {
            return Err(Error::Config(
                "madelung data needs matching rho/action lists of length 1..=3".into(),
            ));
        }
        if hbar <= 0.0 {
            return Err(Error::NonPositive {
                name: "hbar",
                value: hbar,
            });
        }
        let grid = rho[0].grid();
        Ok(Self {
            rho,
            action,
            hbar,
            grid,
        })
    }

    pub fn components(&self) -> usize {
        self.rho.len()
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Rebuild the wave function; inverse of [`SpinorField::decompose`] for
    /// actions inside the principal branch.
    pub fn compose(&self) -> Result<SpinorField> {
        let psi = self
            .rho
            .iter()
            .zip(&self.action)
            .map(|(r, s)| {
                let n = self.grid.n();
                Array3::from_shape_fn((n, n, n), |idx| {
                    let amp = r.data()[idx].max(0.0).sqrt();
                    let phase = s.data()[idx] / self.hbar;
                    Complex64::from_polar(amp, phase)
                })
            })
            .collect();
        SpinorField::new(self.grid, psi, self.hbar)
    }
}

/// Linear recombination of Madelung parameters into canonical fluid
/// potentials.
///
/// n = 1: `(rho, phi) = (rho_1, S_1)`, no vortical pair.
/// n = 2: `rho = rho_1 + rho_2`, `alpha = rho_1 - rho_2`,
///        `phi = (S_1 + S_2)/2`, `beta = (S_1 - S_2)/2`.
/// n = 3: `rho = rho_1 + rho_2 + rho_3`, `alpha_1 = rho_1 - rho_3`,
///        `alpha_2 = rho_1/2 - rho_2 + rho_3/2`,
///        `phi = (S_1 + S_2 + S_3)/3`, `beta_1 = (S_1 - S_3)/2`,
///        `beta_2 = (S_1 - 2 S_2 + S_3)/3`.
pub fn clebsch_from_madelung(m: &MadelungData, components: usize) -> Result<ClebschFields> {
    if components != m.components() {
        return Err(Error::DimensionMismatch {
            expected: components,
            got: m.components(),
        });
    }
    let grid = m.grid;
    let zero = || ScalarField::zeros(grid);
    match components {
        1 => ClebschFields::new(
            m.rho[0].clone(),
            zero(),
            zero(),
            m.action[0].clone(),
            zero(),
            zero(),
        ),
        2 => ClebschFields::new(
            m.rho[0].add_scaled(&m.rho[1], 1.0),
            m.rho[0].add_scaled(&m.rho[1], -1.0),
            zero(),
            m.action[0].add_scaled(&m.action[1], 1.0).scaled(0.5),
            m.action[0].add_scaled(&m.action[1], -1.0).scaled(0.5),
            zero(),
        ),
        3 => {
            let rho = m.rho[0]
                .add_scaled(&m.rho[1], 1.0)
                .add_scaled(&m.rho[2], 1.0);
            let alpha1 = m.rho[0].add_scaled(&m.rho[2], -1.0);
            let alpha2 = m.rho[0]
                .scaled(0.5)
                .add_scaled(&m.rho[1], -1.0)
                .add_scaled(&m.rho[2], 0.5);
            let phi = m.action[0]
                .add_scaled(&m.action[1], 1.0)
                .add_scaled(&m.action[2], 1.0)
                .scaled(1.0 / 3.0);
            let beta1 = m.action[0].add_scaled(&m.action[2], -1.0).scaled(0.5);
            let beta2 = m.action[0]
                .add_scaled(&m.action[1], -2.0)
                .add_scaled(&m.action[2], 1.0)
                .scaled(1.0 / 3.0);
            ClebschFields::new(rho, alpha1, alpha2, phi, beta1, beta2)
        }
        other => Err(Error::Config(format!(
            "clebsch map defined for 1..=3 components, got {other}"
        ))),
    }
}

pub(crate) fn complex_gradient(
    comp: &Array3<Complex64>,
    grid: Grid3,
) -> [Array3<Complex64>; 3] {
    let spec = spectral::forward_complex(comp);
    std::array::from_fn(|axis| {
        spectral::backward_complex(&spectral::derivative(&spec, grid, axis))
    })
}

pub(crate) fn complex_laplacian(comp: &Array3<Complex64>, grid: Grid3) -> Array3<Complex64> {
    let spec = spectral::forward_complex(comp);
    spectral::backward_complex(&spectral::laplacian(&spec, grid))
}

/// Momentum per unit mass, `v = Re[Psi* . (-i hbar grad Psi)] / rho`,
/// dealiased like every other quadratic product.
///
/// Through the Madelung split this equals the canonical-potential velocity
/// of [`clebsch_from_madelung`]; the shared two-thirds mask keeps the two
/// routes comparable at spectral accuracy.
pub fn momentum_density(psi: &SpinorField) -> Result<VectorField3> {
    let rho = psi.total_density();
    crate::field::ensure_above_floor(rho.min())?;
    let grid = psi.grid();
    let n = grid.n();
    let mut num = [
        Array3::<f64>::zeros((n, n, n)),
        Array3::<f64>::zeros((n, n, n)),
        Array3::<f64>::zeros((n, n, n)),
    ];
    let minus_i_hbar = Complex64::new(0.0, -psi.hbar());
    for j in 0..psi.components() {
        let grads = complex_gradient(psi.component(j), grid);
        for (axis, grad) in grads.iter().enumerate() {
            let conj = psi.component(j).mapv(|z| z.conj());
            num[axis] += &(&conj * grad).mapv(|z| (minus_i_hbar * z).re);
        }
    }
    let components = std::array::from_fn(|axis| {
        ScalarField::from_data(grid, num[axis].clone())
            .expect("shape fixed")
            .pointwise_div(&rho)
    });
    Ok(VectorField3 { components }.dealiased())
}

/// Normalized spin densities `S_l = Psi* lambda_l Psi / rho`.
///
/// n = 1 has no internal space and returns the empty list; n = 2 returns the
/// three Pauli sandwiches; n = 3 returns the eight Gell-Mann sandwiches in
/// the standard order.
pub fn spin_densities(psi: &SpinorField) -> Result<Vec<ScalarField>> {
    let rho = psi.total_density();
    crate::field::ensure_above_floor(rho.min())?;
    let grid = psi.grid();
    let field = |data: Array3<f64>| -> ScalarField {
        ScalarField::from_data(grid, data)
            .expect("shape fixed")
            .pointwise_div(&rho)
    };
    // Off-diagonal sandwich with components (a, b):
    //   Re part: psi_a* psi_b + psi_b* psi_a = 2 Re(psi_a* psi_b)
    //   Im part: -i psi_a* psi_b + i psi_b* psi_a = 2 Im(psi_a* psi_b)
    let pair_re = |a: usize, b: usize| {
        let data = (&psi.component(a).mapv(|z| z.conj()) * psi.component(b))
            .mapv(|z| 2.0 * z.re);
        field(data)
    };
    let pair_im = |a: usize, b: usize| {
        let data = (&psi.component(a).mapv(|z| z.conj()) * psi.component(b))
            .mapv(|z| 2.0 * z.im);
        field(data)
    };
    let density = |j: usize| psi.component(j).mapv(|z| z.norm_sqr());

    match psi.components() {
        1 => Ok(Vec::new()),
        2 => {
            let s3 = field(&density(0) - &density(1));
            Ok(vec![pair_re(0, 1), pair_im(0, 1), s3])
        }
        3 => {
            let s3 = field(&density(0) - &density(1));
            let s8 = field(
                (&(&density(0) + &density(1)) - &(density(2) * 2.0))
                    .mapv(|v| v / 3.0f64.sqrt()),
            );
            Ok(vec![
                pair_re(0, 1),
                pair_im(0, 1),
                s3,
                pair_re(0, 2),
                pair_im(0, 2),
                pair_re(1, 2),
                pair_im(1, 2),
                s8,
            ])
        }
        _ => unreachable!("component count validated at construction"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::clebsch_velocity;
    use approx::assert_abs_diff_eq;

    fn grid() -> Grid3 {
        Grid3::new(16).unwrap()
    }

    fn smooth_spinor(components: usize, hbar: f64) -> SpinorField {
        SpinorField::from_fns(grid(), components, hbar, |j, x, y, z| {
            let amp = (1.0 + 0.06 * ((j + 1) as f64) * x.sin() + 0.04 * (y + z).cos()).sqrt();
            let phase = 0.05 * ((x + (j as f64) * y).sin() + 0.5 * z.cos()) / hbar;
            Complex64::from_polar(amp, phase)
        })
        .unwrap()
    }

    #[test]
    fn constant_field_decomposition() {
        let psi = SpinorField::from_fns(grid(), 1, 1.0, |_, _, _, _| Complex64::new(2.0, 0.0))
            .unwrap();
        let m = psi.decompose().unwrap();
        assert_abs_diff_eq!(m.rho[0].mean(), 4.0, epsilon = 1e-14);
        assert_eq!(m.action[0].linf(), 0.0);
    }

    #[test]
    fn plane_wave_action_is_principal_branch() {
        let psi = SpinorField::from_fns(grid(), 1, 1.0, |_, x, _, _| {
            Complex64::from_polar(1.0, x)
        })
        .unwrap();
        let m = psi.decompose().unwrap();
        // arg() folds x into (-pi, pi].
        let expected = ScalarField::from_fn(grid(), |x, _, _| {
            let mut s = x;
            if s > std::f64::consts::PI {
                s -= std::f64::consts::TAU;
            }
            s
        });
        assert!(m.action[0].add_scaled(&expected, -1.0).linf() <= 1e-12);
    }

    #[test]
    fn compose_decompose_roundtrip() {
        for components in 1..=3 {
            let psi = smooth_spinor(components, 0.7);
            let back = psi.decompose().unwrap().compose().unwrap();
            for j in 0..components {
                let diff = (psi.component(j) - back.component(j))
                    .iter()
                    .fold(0.0f64, |m, z| m.max(z.norm()));
                assert!(diff <= 1e-12, "component {j} roundtrip {diff}");
            }
        }
    }

    #[test]
    fn decompose_compose_roundtrip() {
        // Starting from density/action data inside the principal branch.
        let g = grid();
        let m = MadelungData::new(
            vec![
                ScalarField::from_fn(g, |x, _, _| 1.0 + 0.2 * x.sin()),
                ScalarField::from_fn(g, |_, y, _| 0.8 + 0.1 * y.cos()),
            ],
            vec![
                ScalarField::from_fn(g, |x, y, _| 0.3 * (x + y).sin()),
                ScalarField::from_fn(g, |_, _, z| 0.2 * z.cos()),
            ],
            0.5,
        )
        .unwrap();
        let back = m.compose().unwrap().decompose().unwrap();
        for j in 0..2 {
            assert!(back.rho[j].add_scaled(&m.rho[j], -1.0).linf() <= 1e-12);
            assert!(back.action[j].add_scaled(&m.action[j], -1.0).linf() <= 1e-12);
        }
    }

    #[test]
    fn node_is_rejected() {
        let psi = SpinorField::from_fns(grid(), 1, 1.0, |_, x, _, _| {
            Complex64::new(x.sin(), 0.0)
        })
        .unwrap();
        assert!(matches!(
            psi.decompose(),
            Err(Error::NodeDetected { component: 0, .. })
        ));
    }

    #[test]
    fn clebsch_map_hand_values_two_components() {
        let g = grid();
        let m = MadelungData::new(
            vec![ScalarField::constant(g, 2.0), ScalarField::constant(g, 1.0)],
            vec![ScalarField::constant(g, 1.0), ScalarField::constant(g, 0.0)],
            1.0,
        )
        .unwrap();
        let c = clebsch_from_madelung(&m, 2).unwrap();
        assert_abs_diff_eq!(c.varrho.mean(), 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(c.alpha1.mean(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(c.phi.mean(), 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(c.beta1.mean(), 0.5, epsilon = 1e-14);
        assert_eq!(c.alpha2.linf(), 0.0);
        assert!(clebsch_from_madelung(&m, 3).is_err());
    }

    #[test]
    fn clebsch_map_hand_values_three_components() {
        let g = grid();
        let m = MadelungData::new(
            vec![
                ScalarField::constant(g, 3.0),
                ScalarField::constant(g, 2.0),
                ScalarField::constant(g, 1.0),
            ],
            vec![
                ScalarField::constant(g, 3.0),
                ScalarField::constant(g, 2.0),
                ScalarField::constant(g, 1.0),
            ],
            1.0,
        )
        .unwrap();
        let c = clebsch_from_madelung(&m, 3).unwrap();
        assert_abs_diff_eq!(c.varrho.mean(), 6.0, epsilon = 1e-14);
        assert_abs_diff_eq!(c.alpha1.mean(), 2.0, epsilon = 1e-14);
        // alpha_2 = rho_1/2 - rho_2 + rho_3/2 = 1.5 - 2 + 0.5 = 0.
        assert_abs_diff_eq!(c.alpha2.mean(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(c.phi.mean(), 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(c.beta1.mean(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(c.beta2.mean(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn symmetric_input_kills_internal_potentials() {
        let g = grid();
        let rho = ScalarField::from_fn(g, |x, _, _| 1.0 + 0.1 * x.sin());
        let s = ScalarField::from_fn(g, |_, y, _| 0.2 * y.cos());
        let m = MadelungData::new(
            vec![rho.clone(), rho.clone(), rho],
            vec![s.clone(), s.clone(), s.clone()],
            1.0,
        )
        .unwrap();
        let c = clebsch_from_madelung(&m, 3).unwrap();
        assert!(c.alpha1.linf() <= 1e-15);
        assert!(c.alpha2.linf() <= 1e-15);
        assert!(c.beta1.linf() <= 1e-15);
        assert!(c.beta2.linf() <= 1e-15);
        assert!(c.phi.add_scaled(&s, -1.0).linf() <= 1e-15);
    }

    #[test]
    fn momentum_of_uniform_phase_vanishes() {
        let psi = SpinorField::from_fns(grid(), 2, 1.0, |j, x, _, _| {
            Complex64::new(1.0 + 0.1 * (j as f64) + 0.05 * x.sin(), 0.0)
        })
        .unwrap();
        let v = momentum_density(&psi).unwrap();
        assert!(v.linf() <= 1e-12);
    }

    #[test]
    fn momentum_of_plane_wave() {
        for hbar in [1.0, 0.5] {
            let psi = SpinorField::from_fns(grid(), 1, hbar, |_, x, _, _| {
                Complex64::from_polar(1.0, 2.0 * x)
            })
            .unwrap();
            let v = momentum_density(&psi).unwrap();
            let expected = VectorField3::from_fns(grid(), |_, _, _| [2.0 * hbar, 0.0, 0.0]);
            assert!(v.add_scaled(&expected, -1.0).linf() <= 1e-11);
        }
    }

    #[test]
    fn momentum_matches_clebsch_velocity() {
        for components in 1..=3usize {
            let psi = smooth_spinor(components, 1.0);
            let v_direct = momentum_density(&psi).unwrap();
            let m = psi.decompose().unwrap();
            let c = clebsch_from_madelung(&m, components).unwrap();
            let v_clebsch = clebsch_velocity(&c).unwrap();
            let gap = v_direct.add_scaled(&v_clebsch, -1.0).linf();
            assert!(gap <= 1e-10, "n = {components}: velocity gap {gap}");
        }
    }

    #[test]
    fn pauli_spin_hand_values() {
        let g = grid();
        let psi = SpinorField::from_fns(g, 2, 1.0, |j, _, _, _| {
            if j == 0 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .unwrap();
        let s = spin_densities(&psi).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s[0].linf() <= 1e-15);
        assert!(s[1].linf() <= 1e-15);
        assert_abs_diff_eq!(s[2].mean(), 1.0, epsilon = 1e-15);

        let psi = SpinorField::from_fns(g, 2, 1.0, |_, _, _, _| {
            Complex64::new(1.0 / 2.0f64.sqrt(), 0.0)
        })
        .unwrap();
        let s = spin_densities(&psi).unwrap();
        assert_abs_diff_eq!(s[0].mean(), 1.0, epsilon = 1e-14);
        assert!(s[1].linf() <= 1e-15);
        assert!(s[2].linf() <= 1e-15);
    }

    #[test]
    fn gell_mann_spin_hand_values() {
        let psi = SpinorField::from_fns(grid(), 3, 1.0, |j, _, _, _| {
            if j == 2 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .unwrap();
        let s = spin_densities(&psi).unwrap();
        assert_eq!(s.len(), 8);
        for (l, field) in s.iter().enumerate().take(7) {
            assert!(field.linf() <= 1e-15, "lambda_{} should vanish", l + 1);
        }
        assert_abs_diff_eq!(s[7].mean(), -2.0 / 3.0f64.sqrt(), epsilon = 1e-14);
    }

    #[test]
    fn two_component_spin_is_unit_vector() {
        let psi = smooth_spinor(2, 0.8);
        let s = spin_densities(&psi).unwrap();
        let norm2 = s[0]
            .pointwise_mul(&s[0])
            .add_scaled(&s[1].pointwise_mul(&s[1]), 1.0)
            .add_scaled(&s[2].pointwise_mul(&s[2]), 1.0);
        let deviation = norm2.add_scaled(&ScalarField::constant(grid(), 1.0), -1.0);
        assert!(deviation.linf() <= 1e-12);
    }
}
