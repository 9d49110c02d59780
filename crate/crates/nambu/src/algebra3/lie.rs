//! Structure constants of 3-dimensional Lie algebras and the brackets built
//! from them.

use crate::error::{Error, Result};
use crate::vec3::{self, cross, epsilon, Mat3, Vec3};

/// A 3-dimensional real Lie algebra given by its structure constants,
/// `[e_j, e_k] = c[l][j][k] e_l`.
///
/// Antisymmetry in (j, k) is enforced at construction; the Jacobi identity is
/// not, because deformed brackets are allowed to fail it and are screened by
/// [`jacobi_residual`].
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra3 {
    c: [[[f64; 3]; 3]; 3],
    label: String,
}

/// The nine isomorphism classes of 3-dimensional real Lie algebras.
///
/// Types II and IX are the Heisenberg and rotation algebras; the rest are
/// shipped as a standard catalog and validated numerically through the
/// Jacobi residual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BianchiType {
    I,
    II,
    III,
    IV,
    V,
    VI0,
    VII0,
    VIII,
    IX,
}

impl BianchiType {
    pub const ALL: [BianchiType; 9] = [
        BianchiType::I,
        BianchiType::II,
        BianchiType::III,
        BianchiType::IV,
        BianchiType::V,
        BianchiType::VI0,
        BianchiType::VII0,
        BianchiType::VIII,
        BianchiType::IX,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            BianchiType::I => "bianchi-I",
            BianchiType::II => "bianchi-II",
            BianchiType::III => "bianchi-III",
            BianchiType::IV => "bianchi-IV",
            BianchiType::V => "bianchi-V",
            BianchiType::VI0 => "bianchi-VI0",
            BianchiType::VII0 => "bianchi-VII0",
            BianchiType::VIII => "bianchi-VIII",
            BianchiType::IX => "bianchi-IX",
        }
    }

    /// Principal-diagonal part and the class-B vector of the standard
    /// classification: `c[l][j][k] = eps_{jkm} n[m] delta_{ml} + delta_{lk} a_j - delta_{lj} a_k`
    /// with `a = (a, 0, 0)`.
    fn parameters(&self) -> ([f64; 3], f64) {
        match self {
            BianchiType::I => ([0.0, 0.0, 0.0], 0.0),
            BianchiType::II => ([1.0, 0.0, 0.0], 0.0),
            BianchiType::III => ([0.0, 1.0, -1.0], 1.0),
            BianchiType::IV => ([0.0, 0.0, 1.0], 1.0),
            BianchiType::V => ([0.0, 0.0, 0.0], 1.0),
            BianchiType::VI0 => ([1.0, -1.0, 0.0], 0.0),
            BianchiType::VII0 => ([1.0, 1.0, 0.0], 0.0),
            BianchiType::VIII => ([1.0, 1.0, -1.0], 0.0),
            BianchiType::IX => ([1.0, 1.0, 1.0], 0.0),
        }
    }
}

impl LieAlgebra3 {
    /// Build from raw structure constants, checking antisymmetry in the two
    /// lower indices.
    pub fn from_structure_constants(c: [[[f64; 3]; 3]; 3], label: &str) -> Result<Self> {
        for l in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    if (c[l][j][k] + c[l][k][j]).abs() > 1e-12 {
                        return Err(Error::Config(format!(
                            "structure constants not antisymmetric at c[{l}][{j}][{k}]"
                        )));
                    }
                }
            }
        }
        Ok(Self {
            c,
            label: label.to_string(),
        })
    }

    /// The rotation algebra: `[e_1,e_2]=e_3`, `[e_2,e_3]=e_1`, `[e_3,e_1]=e_2`.
    pub fn so3() -> Self {
        Self::bianchi(BianchiType::IX)
    }

    /// The Heisenberg algebra: `[e_2,e_3]=e_1`, other basis brackets zero.
    pub fn heisenberg() -> Self {
        Self::bianchi(BianchiType::II)
    }

    /// Canonical representative of a Bianchi class.
    pub fn bianchi(t: BianchiType) -> Self {
        let (n, a) = t.parameters();
        let mut c = [[[0.0; 3]; 3]; 3];
        for l in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let mut v = 0.0;
                    for m in 0..3 {
                        if m == l {
                            v += epsilon(j, k, m) * n[m];
                        }
                    }
                    if l == k && j == 0 {
                        v += a;
                    }
                    if l == j && k == 0 {
                        v -= a;
                    }
                    c[l][j][k] = v;
                }
            }
        }
        Self {
            c,
            label: t.label().to_string(),
        }
    }

    /// Parse a plain-text key-value algebra spec with keys `label` and `c`
    /// (27 numbers in row-major `[l][j][k]` order). Lines starting with `#`
    /// are comments.
    pub fn from_key_value_str(text: &str) -> Result<Self> {
        let mut label: Option<String> = None;
        let mut coeffs: Option<Vec<f64>> = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Config(format!("line {}: expected key = value", lineno + 1))
            })?;
            match key.trim() {
                "label" => label = Some(value.trim().to_string()),
                "c" => {
                    let parsed: std::result::Result<Vec<f64>, _> =
                        value.split_whitespace().map(str::parse).collect();
                    coeffs = Some(parsed.map_err(|e| {
                        Error::Config(format!("line {}: bad number: {e}", lineno + 1))
                    })?);
                }
                other => {
                    return Err(Error::Config(format!("unknown key \"{other}\"")));
                }
            }
        }
        let label = label.ok_or_else(|| Error::Config("missing required key \"label\"".into()))?;
        let coeffs = coeffs.ok_or_else(|| Error::Config("missing required key \"c\"".into()))?;
        if coeffs.len() != 27 {
            return Err(Error::Config(format!(
                "key \"c\" must hold 27 numbers, got {}",
                coeffs.len()
            )));
        }
        let mut c = [[[0.0; 3]; 3]; 3];
        for l in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    c[l][j][k] = coeffs[9 * l + 3 * j + k];
                }
            }
        }
        Self::from_structure_constants(c, &label)
    }

    pub fn from_key_value_file(path: &std::path::Path) -> Result<Self> {
        Self::from_key_value_str(&std::fs::read_to_string(path)?)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn structure_constants(&self) -> &[[[f64; 3]; 3]; 3] {
        &self.c
    }

    /// `[x, y]` with components `z_l = c[l][j][k] x_j y_k`.
    pub fn bracket(&self, x: Vec3, y: Vec3) -> Vec3 {
        let mut z = [0.0; 3];
        for l in 0..3 {
            let mut s = 0.0;
            for j in 0..3 {
                for k in 0..3 {
                    s += self.c[l][j][k] * x[j] * y[k];
                }
            }
            z[l] = s;
        }
        z
    }

    /// Lie-Poisson matrix `J_{jk}(xi) = c[l][j][k] xi_l`, linear in `xi`.
    ///
    /// For the rotation algebra this gives `J dH = dH x xi`, which forces the
    /// bottom row `(xi_2, -xi_1, 0)`; antisymmetry holds for every algebra.
    pub fn lie_poisson_matrix(&self, xi: Vec3) -> Mat3 {
        let mut j = [[0.0; 3]; 3];
        for row in 0..3 {
            for col in 0..3 {
                let mut s = 0.0;
                for l in 0..3 {
                    s += self.c[l][row][col] * xi[l];
                }
                j[row][col] = s;
            }
        }
        j
    }

    /// Max-norm residual of the Jacobi identity over all basis triples;
    /// zero exactly when the structure constants define a Lie algebra.
    pub fn jacobi_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        let basis = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let term1 = self.bracket(self.bracket(basis[i], basis[j]), basis[k]);
                    let term2 = self.bracket(self.bracket(basis[j], basis[k]), basis[i]);
                    let term3 = self.bracket(self.bracket(basis[k], basis[i]), basis[j]);
                    let total = vec3::add(vec3::add(term1, term2), term3);
                    worst = worst.max(vec3::norm(total));
                }
            }
        }
        worst
    }
}

/// Free-function form of [`LieAlgebra3::bracket`].
pub fn lie_bracket(alg: &LieAlgebra3, x: Vec3, y: Vec3) -> Vec3 {
    alg.bracket(x, y)
}

/// Free-function form of [`LieAlgebra3::lie_poisson_matrix`].
pub fn lie_poisson_matrix(alg: &LieAlgebra3, xi: Vec3) -> Mat3 {
    alg.lie_poisson_matrix(xi)
}

/// Free-function form of [`LieAlgebra3::jacobi_residual`].
pub fn jacobi_residual(alg: &LieAlgebra3) -> f64 {
    alg.jacobi_residual()
}

/// Scalar triple product `grad_g . (grad_h1 x grad_h2)`: the R^3 bracket of
/// three observables through their gradients. Totally antisymmetric.
pub fn nambu_bracket(grad_g: Vec3, grad_h1: Vec3, grad_h2: Vec3) -> f64 {
    vec3::det3(grad_g, grad_h1, grad_h2)
}

/// Deform the rotation-algebra bracket by a matrix: `[x,y]_M = M^T (x x y)`,
/// i.e. `c_M[l][j][k] = M[m][l] eps_{mjk}`.
///
/// The result need not satisfy the Jacobi identity; screen it with
/// [`jacobi_residual`]. Symmetric `M` always passes.
pub fn deform(m: &Mat3) -> LieAlgebra3 {
    let mut c = [[[0.0; 3]; 3]; 3];
    for l in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let mut s = 0.0;
                for row in 0..3 {
                    s += m[row][l] * epsilon(row, j, k);
                }
                c[l][j][k] = s;
            }
        }
    }
    LieAlgebra3 {
        c,
        label: "deformed-so3".to_string(),
    }
}

/// Rigid-body equation of motion on R^3: `xi_dot = grad H1 x grad H2` with
/// kinetic energy `H1 = sum xi_j^2 / (2 I_j)` and `H2 = |xi|^2 / 2`.
pub fn euler_top_rhs(xi: Vec3, moments: Vec3) -> Result<Vec3> {
    for &i in &moments {
        if i <= 0.0 {
            return Err(Error::NonPositive {
                name: "moment of inertia",
                value: i,
            });
        }
    }
    let grad_h1 = [xi[0] / moments[0], xi[1] / moments[1], xi[2] / moments[2]];
    Ok(cross(grad_h1, xi))
}
