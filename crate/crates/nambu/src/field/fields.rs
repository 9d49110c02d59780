//! Real scalar and vector fields on the periodic grid.

use ndarray::Array3;
use num_complex::Complex64;

use super::grid::Grid3;
use super::spectral;
use crate::error::{Error, Result};

/// Real scalar field sampled on the N^3 grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    grid: Grid3,
    data: Array3<f64>,
}

impl ScalarField {
    pub fn zeros(grid: Grid3) -> Self {
        let n = grid.n();
        Self {
            grid,
            data: Array3::zeros((n, n, n)),
        }
    }

    pub fn constant(grid: Grid3, value: f64) -> Self {
        let n = grid.n();
        Self {
            grid,
            data: Array3::from_elem((n, n, n), value),
        }
    }

    /// Sample `f(x, y, z)` at the grid nodes.
    pub fn from_fn<F>(grid: Grid3, f: F) -> Self
    where
        F: Fn(f64, f64, f64) -> f64,
    {
        let n = grid.n();
        Self {
            grid,
            data: Array3::from_shape_fn((n, n, n), |(i, j, k)| {
                f(grid.coord(i), grid.coord(j), grid.coord(k))
            }),
        }
    }

    pub fn from_data(grid: Grid3, data: Array3<f64>) -> Result<Self> {
        let n = grid.n();
        if data.dim() != (n, n, n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: data.dim().0,
            });
        }
        Ok(Self { grid, data })
    }

    pub fn grid(&self) -> Grid3 {
        self.grid
    }

    pub fn data(&self) -> &Array3<f64> {
        &self.data
    }

    pub fn to_spectral(&self) -> Array3<Complex64> {
        spectral::forward(&self.data)
    }

    pub fn from_spectral(grid: Grid3, spec: &Array3<Complex64>) -> Self {
        Self {
            grid,
            data: spectral::backward(spec),
        }
    }

    pub fn mean(&self) -> f64 {
        self.data.sum() / self.data.len() as f64
    }

    /// Trapezoid-free spectral quadrature: `mean * (2pi)^3`, exact for
    /// resolved trigonometric polynomials.
    pub fn integral(&self) -> f64 {
        self.mean() * self.grid.volume()
    }

    pub fn inner(&self, other: &ScalarField) -> f64 {
        self.check_same_grid(other);
        let s: f64 = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a * b)
            .sum();
        s * self.grid.cell_volume()
    }

    pub fn linf(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    pub fn min(&self) -> f64 {
        self.data.iter().fold(f64::INFINITY, |m, &v| m.min(v))
    }

    pub fn map<F: Fn(f64) -> f64>(&self, f: F) -> ScalarField {
        ScalarField {
            grid: self.grid,
            data: self.data.mapv(&f),
        }
    }

    pub fn pointwise_mul(&self, other: &ScalarField) -> ScalarField {
        self.check_same_grid(other);
        ScalarField {
            grid: self.grid,
            data: &self.data * &other.data,
        }
    }

    pub fn pointwise_div(&self, other: &ScalarField) -> ScalarField {
        self.check_same_grid(other);
        ScalarField {
            grid: self.grid,
            data: &self.data / &other.data,
        }
    }

    pub fn add_scaled(&self, other: &ScalarField, s: f64) -> ScalarField {
        self.check_same_grid(other);
        ScalarField {
            grid: self.grid,
            data: &self.data + &(&other.data * s),
        }
    }

    pub fn scaled(&self, s: f64) -> ScalarField {
        ScalarField {
            grid: self.grid,
            data: &self.data * s,
        }
    }

    /// Spectral gradient.
    pub fn gradient(&self) -> VectorField3 {
        let spec = self.to_spectral();
        let comps = std::array::from_fn(|axis| {
            ScalarField::from_spectral(self.grid, &spectral::derivative(&spec, self.grid, axis))
        });
        VectorField3 { components: comps }
    }

    pub fn laplacian(&self) -> ScalarField {
        let spec = self.to_spectral();
        ScalarField::from_spectral(self.grid, &spectral::laplacian(&spec, self.grid))
    }

    /// Remove modes outside the two-thirds band.
    pub fn dealiased(&self) -> ScalarField {
        let mut spec = self.to_spectral();
        spectral::dealias_inplace(&mut spec, self.grid);
        ScalarField::from_spectral(self.grid, &spec)
    }

    fn check_same_grid(&self, other: &ScalarField) {
        assert_eq!(self.grid, other.grid, "fields live on different grids");
    }
}

/// Real 3-vector field; component i is a [`ScalarField`].
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField3 {
    pub components: [ScalarField; 3],
}

impl VectorField3 {
    pub fn zeros(grid: Grid3) -> Self {
        Self {
            components: std::array::from_fn(|_| ScalarField::zeros(grid)),
        }
    }

    pub fn from_fns<F>(grid: Grid3, f: F) -> Self
    where
        F: Fn(f64, f64, f64) -> [f64; 3],
    {
        let sample = |axis: usize| ScalarField::from_fn(grid, |x, y, z| f(x, y, z)[axis]);
        Self {
            components: [sample(0), sample(1), sample(2)],
        }
    }

    pub fn grid(&self) -> Grid3 {
        self.components[0].grid()
    }

    pub fn component(&self, i: usize) -> &ScalarField {
        &self.components[i]
    }

    /// Spectral divergence.
    pub fn divergence(&self) -> ScalarField {
        let grid = self.grid();
        let mut total = Array3::<Complex64>::zeros(self.components[0].data().dim());
        for (axis, comp) in self.components.iter().enumerate() {
            total += &spectral::derivative(&comp.to_spectral(), grid, axis);
        }
        ScalarField::from_spectral(grid, &total)
    }

    /// Spectral curl: multiplication by `i k x` mode by mode.
    pub fn curl(&self) -> VectorField3 {
        let grid = self.grid();
        let specs: Vec<Array3<Complex64>> =
            self.components.iter().map(|c| c.to_spectral()).collect();
        let d = |comp: usize, axis: usize| spectral::derivative(&specs[comp], grid, axis);
        let cx = &d(2, 1) - &d(1, 2);
        let cy = &d(0, 2) - &d(2, 0);
        let cz = &d(1, 0) - &d(0, 1);
        VectorField3 {
            components: [
                ScalarField::from_spectral(grid, &cx),
                ScalarField::from_spectral(grid, &cy),
                ScalarField::from_spectral(grid, &cz),
            ],
        }
    }

    pub fn dot(&self, other: &VectorField3) -> ScalarField {
        let mut out = self.components[0].pointwise_mul(&other.components[0]);
        for i in 1..3 {
            out = out.add_scaled(&self.components[i].pointwise_mul(&other.components[i]), 1.0);
        }
        out
    }

    pub fn cross(&self, other: &VectorField3) -> VectorField3 {
        let a = &self.components;
        let b = &other.components;
        let comp = |i: usize, j: usize, k: usize, l: usize| {
            a[i].pointwise_mul(&b[j]).add_scaled(&a[k].pointwise_mul(&b[l]), -1.0)
        };
        VectorField3 {
            components: [comp(1, 2, 2, 1), comp(2, 0, 0, 2), comp(0, 1, 1, 0)],
        }
    }

    pub fn scaled(&self, s: f64) -> VectorField3 {
        VectorField3 {
            components: std::array::from_fn(|i| self.components[i].scaled(s)),
        }
    }

    pub fn add_scaled(&self, other: &VectorField3, s: f64) -> VectorField3 {
        VectorField3 {
            components: std::array::from_fn(|i| {
                self.components[i].add_scaled(&other.components[i], s)
            }),
        }
    }

    /// Multiply every component by the same scalar field.
    pub fn scaled_by_field(&self, s: &ScalarField) -> VectorField3 {
        VectorField3 {
            components: std::array::from_fn(|i| self.components[i].pointwise_mul(s)),
        }
    }

    pub fn dealiased(&self) -> VectorField3 {
        VectorField3 {
            components: std::array::from_fn(|i| self.components[i].dealiased()),
        }
    }

    /// Pointwise maximum Euclidean norm, e.g. for CFL estimates.
    pub fn max_norm(&self) -> f64 {
        let mut worst = 0.0f64;
        let [x, y, z] = &self.components;
        for ((a, b), c) in x.data().iter().zip(y.data().iter()).zip(z.data().iter()) {
            worst = worst.max((a * a + b * b + c * c).sqrt());
        }
        worst
    }

    pub fn linf(&self) -> f64 {
        self.components.iter().map(|c| c.linf()).fold(0.0, f64::max)
    }

    pub fn inner(&self, other: &VectorField3) -> f64 {
        (0..3)
            .map(|i| self.components[i].inner(&other.components[i]))
            .sum()
    }

    pub fn means(&self) -> [f64; 3] {
        std::array::from_fn(|i| self.components[i].mean())
    }
}

/// Divergence-free, mean-free vector field: the vorticity phase space.
///
/// Inputs that violate either condition are rejected rather than projected,
/// so modeling errors surface at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct VorticityField {
    field: VectorField3,
}

impl VorticityField {
    pub const DIV_TOL: f64 = 1e-10;
    pub const MEAN_TOL: f64 = 1e-10;

    pub fn new(field: VectorField3) -> Result<Self> {
        // NaN data must fail validation, hence the explicit checks.
        let mean = field
            .means()
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs()));
        if mean.is_nan() || mean > Self::MEAN_TOL {
            return Err(Error::NonzeroMean { mean });
        }
        let div = field.divergence().linf();
        if div.is_nan() || div > Self::DIV_TOL * field.linf().max(1.0) {
            return Err(Error::NotDivergenceFree { residual: div });
        }
        Ok(Self { field })
    }

    pub fn field(&self) -> &VectorField3 {
        &self.field
    }

    pub fn grid(&self) -> Grid3 {
        self.field.grid()
    }
}
