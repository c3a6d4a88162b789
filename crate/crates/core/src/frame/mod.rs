//! Riemannian geometry of a 3-dimensional frame with constant structure
//! constants and a constant metric.
//!
//! Frame vectors are indexed `0..3` in code (`e1, e2, e3` in rendered output).
//! Because every component is constant, all directional derivatives of
//! components vanish and the Levi-Civita connection reduces to the bracket
//! terms of the Koszul formula.

pub mod identities;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::scalar::{
    basis_vec, column, det3, dot, from_columns, identity_mat, inverse3, mat_mul, mat_vec,
    transpose, vec_axpy, vec_is_zero, zero_mat, zero_vec, Mat3, Rational, Vec3, DIM,
};

/// A constant-coefficient vector field in frame coordinates.
pub type VectorField = Vec3;

/// `c[i][j]` holds the frame coordinates of `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureConstants {
    c: [[Vec3; DIM]; DIM],
}

impl Default for StructureConstants {
    fn default() -> Self {
        Self::zero()
    }
}

impl StructureConstants {
    /// The abelian frame: every bracket vanishes.
    pub fn zero() -> Self {
        StructureConstants { c: std::array::from_fn(|_| std::array::from_fn(|_| zero_vec())) }
    }

    /// Builds from `(i, j, [e_i, e_j])` triples, filling `[e_j, e_i]` by
    /// antisymmetry. Unlisted brackets are zero.
    pub fn from_brackets(brackets: &[(usize, usize, Vec3)]) -> Self {
        let mut out = Self::zero();
        for (i, j, v) in brackets {
            out.set_bracket(*i, *j, v.clone());
        }
        out
    }

    /// Sets `[e_i, e_j] = v` and `[e_j, e_i] = -v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vec3) {
        self.c[j][i] = v.clone().map(|x| -x);
        self.c[i][j] = v;
    }

    /// Sets a single coefficient without touching its antisymmetric partner.
    pub fn set_raw(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        self.c[i][j][k] = value;
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[i][j][k]
    }

    pub fn bracket_of(&self, i: usize, j: usize) -> &Vec3 {
        &self.c[i][j]
    }

    /// `[X, Y]` for constant-coefficient fields.
    pub fn bracket(&self, x: &Vec3, y: &Vec3) -> Vec3 {
        let mut out = zero_vec();
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                vec_axpy(&mut out, &(&x[i] * &y[j]), &self.c[i][j]);
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().flatten().all(vec_is_zero)
    }
}

/// Reports every antisymmetry and Jacobi violation.
pub fn validate_frame(c: &StructureConstants) -> ValidationReport {
    let mut report = ValidationReport::default();
    for i in 0..DIM {
        for j in i..DIM {
            for k in 0..DIM {
                report.require_zero("antisymmetry", &[i, j, k], c.get(i, j, k) + c.get(j, i, k));
            }
        }
    }
    let e: [Vec3; DIM] = std::array::from_fn(basis_vec);
    for i in 0..DIM {
        for j in i + 1..DIM {
            for k in j + 1..DIM {
                let sum = [
                    c.bracket(&e[i], &c.bracket(&e[j], &e[k])),
                    c.bracket(&e[j], &c.bracket(&e[k], &e[i])),
                    c.bracket(&e[k], &c.bracket(&e[i], &e[j])),
                ];
                for l in 0..DIM {
                    let v = &sum[0][l] + &sum[1][l] + &sum[2][l];
                    report.require_zero("jacobi", &[i, j, k, l], v);
                }
            }
        }
    }
    report
}

/// A constant symmetric positive-definite frame metric with its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrameMetric {
    g: Mat3,
    #[serde(skip)]
    inv: Mat3,
}

impl Default for FrameMetric {
    fn default() -> Self {
        Self::identity()
    }
}

impl FrameMetric {
    pub fn identity() -> Self {
        FrameMetric { g: identity_mat(), inv: identity_mat() }
    }

    /// Requires symmetry and positive leading principal minors.
    pub fn new(g: Mat3) -> Result<Self> {
        for i in 0..DIM {
            for j in i + 1..DIM {
                if g[i][j] != g[j][i] {
                    return Err(Error::InvalidMetric(format!(
                        "g[{}][{}] = {} but g[{}][{}] = {}",
                        i + 1,
                        j + 1,
                        g[i][j],
                        j + 1,
                        i + 1,
                        g[j][i]
                    )));
                }
            }
        }
        let m1 = g[0][0].clone();
        let m2 = &g[0][0] * &g[1][1] - &g[0][1] * &g[1][0];
        let m3 = det3(&g);
        for (k, m) in [m1, m2, m3].iter().enumerate() {
            if !m.is_positive() {
                return Err(Error::InvalidMetric(format!(
                    "leading principal minor {} is {m}, not positive",
                    k + 1
                )));
            }
        }
        let inv = inverse3(&g).expect("positive-definite matrix is invertible");
        Ok(FrameMetric { g, inv })
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.g
    }

    pub fn inverse(&self) -> &Mat3 {
        &self.inv
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.g[i][j]
    }

    pub fn inner(&self, x: &Vec3, y: &Vec3) -> Rational {
        dot(x, &mat_vec(&self.g, y))
    }

    /// The covector `g(v, ·)`.
    pub fn lower(&self, v: &Vec3) -> Vec3 {
        mat_vec(&self.g, v)
    }

    /// The vector `w` with `g(w, ·) = covector`.
    pub fn raise(&self, covector: &Vec3) -> Vec3 {
        mat_vec(&self.inv, covector)
    }

    pub fn is_identity(&self) -> bool {
        self.g == identity_mat()
    }
}

/// Symmetric 2-tensor in frame components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Sym2Tensor(Mat3);

impl Sym2Tensor {
    pub fn new(m: Mat3) -> Result<Self> {
        for i in 0..DIM {
            for j in i + 1..DIM {
                if m[i][j] != m[j][i] {
                    return Err(Error::Shape(format!(
                        "2-tensor not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Sym2Tensor(m))
    }

    pub fn zero() -> Self {
        Sym2Tensor(zero_mat())
    }

    pub fn from_metric(g: &FrameMetric) -> Self {
        Sym2Tensor(g.matrix().clone())
    }

    /// Diagonal tensor, handy for synthetic inputs.
    pub fn diagonal(d: [Rational; DIM]) -> Self {
        let mut m = zero_mat();
        for (i, x) in d.into_iter().enumerate() {
            m[i][i] = x;
        }
        Sym2Tensor(m)
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.0[i][j]
    }

    pub fn eval(&self, x: &Vec3, y: &Vec3) -> Rational {
        dot(x, &mat_vec(&self.0, y))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Rational::is_zero)
    }

    /// `a·self + b·other`
    pub fn combine(&self, a: &Rational, other: &Sym2Tensor, b: &Rational) -> Sym2Tensor {
        Sym2Tensor(std::array::from_fn(|i| {
            std::array::from_fn(|j| a * &self.0[i][j] + b * &other.0[i][j])
        }))
    }

    pub fn scaled(&self, a: &Rational) -> Sym2Tensor {
        Sym2Tensor(self.0.clone().map(|row| row.map(|x| a * x)))
    }

    /// `η ⊗ η` for a covector `η`.
    pub fn square_of(eta: &Vec3) -> Sym2Tensor {
        Sym2Tensor(std::array::from_fn(|i| std::array::from_fn(|j| &eta[i] * &eta[j])))
    }

    /// Metric trace `g^{ij} T_ij`.
    pub fn trace_with(&self, g: &FrameMetric) -> Rational {
        let inv = g.inverse();
        (0..DIM)
            .flat_map(|i| (0..DIM).map(move |j| (i, j)))
            .map(|(i, j)| &inv[i][j] * &self.0[i][j])
            .sum()
    }
}

impl std::ops::Add for &Sym2Tensor {
    type Output = Sym2Tensor;
    fn add(self, rhs: &Sym2Tensor) -> Sym2Tensor {
        self.combine(&Rational::one(), rhs, &Rational::one())
    }
}

/// `gamma[i][j]` holds the frame coordinates of `∇_{e_i} e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Connection {
    gamma: [[Vec3; DIM]; DIM],
}

impl Connection {
    pub fn zero() -> Self {
        Connection { gamma: std::array::from_fn(|_| std::array::from_fn(|_| zero_vec())) }
    }

    pub fn from_table(gamma: [[Vec3; DIM]; DIM]) -> Self {
        Connection { gamma }
    }

    /// `∇_{e_i} e_j`
    pub fn get(&self, i: usize, j: usize) -> &Vec3 {
        &self.gamma[i][j]
    }

    /// `∇_X Y` for constant-coefficient fields.
    pub fn nabla(&self, x: &Vec3, y: &Vec3) -> Vec3 {
        let mut out = zero_vec();
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                vec_axpy(&mut out, &(&x[i] * &y[j]), &self.gamma[i][j]);
            }
        }
        out
    }

    /// Matrix of `Y ↦ ∇_{e_i} Y`.
    pub fn operator(&self, i: usize) -> Mat3 {
        from_columns(&self.gamma[i])
    }
}

/// Levi-Civita connection from the bracket terms of the Koszul formula:
/// `2g(∇_{e_i}e_j, e_k) = -g(e_i,[e_j,e_k]) + g(e_j,[e_k,e_i]) + g(e_k,[e_i,e_j])`.
pub fn koszul_connection(c: &StructureConstants, g: &FrameMetric) -> Result<Connection> {
    let report = validate_frame(c);
    if !report.is_valid() {
        return Err(Error::InvalidFrame(report));
    }
    // lowered[i][j][k] = g([e_i, e_j], e_k)
    let lowered: [[Vec3; DIM]; DIM] =
        std::array::from_fn(|i| std::array::from_fn(|j| g.lower(c.bracket_of(i, j))));
    let half = Rational::frac(1, 2);
    let gamma = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let koszul: Vec3 = std::array::from_fn(|k| {
                (-&lowered[j][k][i] + &lowered[k][i][j] + &lowered[i][j][k]) * &half
            });
            g.raise(&koszul)
        })
    });
    Ok(Connection { gamma })
}

/// A (1,3) tensor: `comps[i][j][k]` holds `T(e_i, e_j) e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tensor13 {
    comps: [[[Vec3; DIM]; DIM]; DIM],
}

/// Riemann curvature `R(X,Y)Z`.
pub type CurvatureTensor = Tensor13;

impl Tensor13 {
    pub fn zero() -> Self {
        Self::from_fn(|_, _, _| zero_vec())
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize, usize) -> Vec3) -> Self {
        Tensor13 {
            comps: std::array::from_fn(|i| {
                std::array::from_fn(|j| std::array::from_fn(|k| f(i, j, k)))
            }),
        }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Vec3 {
        &self.comps[i][j][k]
    }

    /// Coefficient of `e_l` in `T(e_i, e_j) e_k`.
    pub fn component(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        &self.comps[i][j][k][l]
    }

    /// `T(X, Y) Z`, trilinear in constant-coefficient fields.
    pub fn apply(&self, x: &Vec3, y: &Vec3, z: &Vec3) -> Vec3 {
        let mut out = zero_vec();
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                let xy = &x[i] * &y[j];
                if xy.is_zero() {
                    continue;
                }
                for k in 0..DIM {
                    vec_axpy(&mut out, &(&xy * &z[k]), &self.comps[i][j][k]);
                }
            }
        }
        out
    }

    /// The endomorphisms `A_i = T(first, e_i)` as matrices (column `k` is
    /// `A_i e_k`).
    pub fn slice_first(&self, first: &Vec3) -> [Mat3; DIM] {
        std::array::from_fn(|i| {
            let cols: [Vec3; DIM] =
                std::array::from_fn(|k| self.apply(first, &basis_vec(i), &basis_vec(k)));
            from_columns(&cols)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().flatten().flatten().all(vec_is_zero)
    }

    /// Every nonzero `(i, j, k) ↦ T(e_i, e_j) e_k`, in index order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, &Vec3)> {
        let mut out = Vec::new();
        for i in 0..DIM {
            for j in 0..DIM {
                for k in 0..DIM {
                    if !vec_is_zero(&self.comps[i][j][k]) {
                        out.push((i, j, k, &self.comps[i][j][k]));
                    }
                }
            }
        }
        out
    }
}

/// `R(X,Y)Z = ∇_X∇_Y Z - ∇_Y∇_X Z - ∇_{[X,Y]} Z`, evaluated by applying the
/// connection as an operator on constant-coefficient fields.
pub fn curvature_tensor(gamma: &Connection, c: &StructureConstants) -> CurvatureTensor {
    Tensor13::from_fn(|i, j, k| {
        let (x, y, z) = (basis_vec(i), basis_vec(j), basis_vec(k));
        let mut out = gamma.nabla(&x, &gamma.nabla(&y, &z));
        let yxz = gamma.nabla(&y, &gamma.nabla(&x, &z));
        let bracket_term = gamma.nabla(&c.bracket(&x, &y), &z);
        for l in 0..DIM {
            out[l] -= &yxz[l];
            out[l] -= &bracket_term[l];
        }
        out
    })
}

/// The same curvature by explicit index contraction of connection
/// coefficients; an independent route used to cross-check
/// [`curvature_tensor`].
pub fn curvature_by_components(gamma: &Connection, c: &StructureConstants) -> CurvatureTensor {
    Tensor13::from_fn(|i, j, k| {
        std::array::from_fn(|l| {
            let mut acc = Rational::zero();
            for m in 0..DIM {
                acc += gamma.get(j, k)[m].clone() * &gamma.get(i, m)[l];
                acc -= gamma.get(i, k)[m].clone() * &gamma.get(j, m)[l];
                acc -= c.get(i, j, m) * &gamma.get(m, k)[l];
            }
            acc
        })
    })
}

/// Ricci tensor `S`, Ricci operator `Q` (`g(QX, Y) = S(X, Y)`) and scalar
/// curvature `r = tr Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RicciData {
    pub s: Sym2Tensor,
    pub q: Mat3,
    pub r: Rational,
}

/// `S(Y, Z) = tr(X ↦ R(X, Y) Z)` as a raw matrix, before any symmetry check.
pub fn ricci_matrix(curvature: &CurvatureTensor) -> Mat3 {
    std::array::from_fn(|j| {
        std::array::from_fn(|k| (0..DIM).map(|i| curvature.component(i, j, k, i).clone()).sum())
    })
}

/// Ricci data. The trace over an orthonormal frame equals the plain trace of
/// `X ↦ R(X, Y) Z`, so no square roots of metric entries are needed.
pub fn ricci(curvature: &CurvatureTensor, g: &FrameMetric) -> RicciData {
    let s = ricci_matrix(curvature);
    let q = mat_mul(g.inverse(), &s);
    let r = crate::scalar::trace(&q);
    let s = Sym2Tensor::new(s).expect("Ricci tensor of a Levi-Civita connection is symmetric");
    RicciData { s, q, r }
}

/// `out[i][j][k] = (∇_{e_i} T)(e_j, e_k)`.
pub type Rank3Array = [[[Rational; DIM]; DIM]; DIM];

/// `(∇_{e_i}T)(e_j,e_k) = -T(∇_{e_i}e_j, e_k) - T(e_j, ∇_{e_i}e_k)`; the
/// component-derivative term vanishes for constant components.
pub fn cov_deriv_sym2(t: &Sym2Tensor, gamma: &Connection) -> Rank3Array {
    let e = basis_vec;
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            std::array::from_fn(|k| {
                let a = t.eval(gamma.get(i, j), &e(k));
                let b = t.eval(&e(j), gamma.get(i, k));
                -(a + b)
            })
        })
    })
}

/// `(L_V g)(e_i, e_j) = g(∇_{e_i}V, e_j) + g(∇_{e_j}V, e_i)`.
pub fn lie_derivative_metric(v: &VectorField, gamma: &Connection, g: &FrameMetric) -> Sym2Tensor {
    let grad: [Vec3; DIM] = std::array::from_fn(|i| gamma.nabla(&basis_vec(i), v));
    let m = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            g.inner(&grad[i], &basis_vec(j)) + g.inner(&grad[j], &basis_vec(i))
        })
    });
    Sym2Tensor(m)
}

/// Derived geometry of a valid frame, computed once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrameGeometry {
    constants: StructureConstants,
    metric: FrameMetric,
    connection: Connection,
    curvature: CurvatureTensor,
    ricci: RicciData,
}

impl FrameGeometry {
    /// Rejects frames failing antisymmetry or the Jacobi identity.
    pub fn new(constants: StructureConstants, metric: FrameMetric) -> Result<Self> {
        let connection = koszul_connection(&constants, &metric)?;
        let curvature = curvature_tensor(&connection, &constants);
        let ricci = ricci(&curvature, &metric);
        Ok(FrameGeometry { constants, metric, connection, curvature, ricci })
    }

    pub fn with_identity_metric(constants: StructureConstants) -> Result<Self> {
        Self::new(constants, FrameMetric::identity())
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn metric(&self) -> &FrameMetric {
        &self.metric
    }

    pub fn connection(&self) -> &Connection {
        &self.connection
    }

    pub fn curvature(&self) -> &CurvatureTensor {
        &self.curvature
    }

    pub fn ricci(&self) -> &RicciData {
        &self.ricci
    }

    pub fn ricci_tensor(&self) -> &Sym2Tensor {
        &self.ricci.s
    }

    pub fn ricci_operator(&self) -> &Mat3 {
        &self.ricci.q
    }

    pub fn scalar_curvature(&self) -> &Rational {
        &self.ricci.r
    }

    pub fn nabla_ricci(&self) -> Rank3Array {
        cov_deriv_sym2(&self.ricci.s, &self.connection)
    }

    pub fn lie_derivative(&self, v: &VectorField) -> Sym2Tensor {
        lie_derivative_metric(v, &self.connection, &self.metric)
    }

    pub fn apply_ricci_operator(&self, v: &Vec3) -> Vec3 {
        mat_vec(&self.ricci.q, v)
    }
}

/// Change to the frame `f_a = Σ_b m[b][a] e_b` (columns of `m` are the new
/// frame vectors in old coordinates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameChange {
    m: Mat3,
    inv: Mat3,
}

impl FrameChange {
    /// `None` when `m` is singular.
    pub fn new(m: Mat3) -> Option<Self> {
        let inv = inverse3(&m)?;
        Some(FrameChange { m, inv })
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    /// Old coordinates to new coordinates.
    pub fn vector(&self, v: &Vec3) -> Vec3 {
        mat_vec(&self.inv, v)
    }

    /// Covector components `ω(f_a)`.
    pub fn covector(&self, w: &Vec3) -> Vec3 {
        mat_vec(&transpose(&self.m), w)
    }

    /// Matrix of an endomorphism in the new frame.
    pub fn endomorphism(&self, a: &Mat3) -> Mat3 {
        mat_mul(&self.inv, &mat_mul(a, &self.m))
    }

    pub fn constants(&self, c: &StructureConstants) -> StructureConstants {
        let f: [Vec3; DIM] = std::array::from_fn(|a| column(&self.m, a));
        let mut out = StructureConstants::zero();
        for a in 0..DIM {
            for b in 0..DIM {
                out.c[a][b] = self.vector(&c.bracket(&f[a], &f[b]));
            }
        }
        out
    }

    pub fn metric(&self, g: &FrameMetric) -> Result<FrameMetric> {
        FrameMetric::new(mat_mul(&transpose(&self.m), &mat_mul(g.matrix(), &self.m)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{mat_from_ints, vec_from_ints};

    fn q(n: i64) -> Rational {
        Rational::int(n)
    }

    fn hyp() -> StructureConstants {
        StructureConstants::from_brackets(&[
            (0, 2, vec_from_ints([-2, 0, 0])),
            (1, 2, vec_from_ints([0, -2, 0])),
        ])
    }

    fn su2(a: i64) -> StructureConstants {
        StructureConstants::from_brackets(&[
            (0, 1, vec_from_ints([0, 0, 2 * a])),
            (1, 2, vec_from_ints([2 * a, 0, 0])),
            (2, 0, vec_from_ints([0, 2 * a, 0])),
        ])
    }

    #[test]
    fn hyp_frame_is_valid() {
        assert!(validate_frame(&hyp()).is_valid());
    }

    #[test]
    fn constructed_antisymmetry_violation() {
        let mut c = StructureConstants::zero();
        c.set_raw(0, 1, 2, q(1));
        c.set_raw(1, 0, 2, q(1));
        let report = validate_frame(&c);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].check, "antisymmetry");
        assert_eq!(report.violations[0].indices, vec![1, 2, 3]);
        assert_eq!(report.violations[0].value, q(2));
    }

    #[test]
    fn jacobi_violation_reported_componentwise() {
        // [e1,e2]=e1, [e1,e3]=e2, [e2,e3]=0. Hand expansion of the cyclic sum:
        // [e1,[e2,e3]] = 0, [e2,[e3,e1]] = [e2,-e2] = 0, [e3,[e1,e2]] = [e3,e1] = -e2.
        let c = StructureConstants::from_brackets(&[
            (0, 1, vec_from_ints([1, 0, 0])),
            (0, 2, vec_from_ints([0, 1, 0])),
        ]);
        let report = validate_frame(&c);
        assert_eq!(report.violations.len(), 1);
        let v = &report.violations[0];
        assert_eq!((v.check, v.indices.clone(), v.value.clone()), ("jacobi", vec![1, 2, 3, 2], q(-1)));
        assert!(matches!(
            FrameGeometry::with_identity_metric(c),
            Err(Error::InvalidFrame(_))
        ));
    }

    #[test]
    fn hyp_connection_table() {
        let gamma = koszul_connection(&hyp(), &FrameMetric::identity()).unwrap();
        let expected = [
            [[0, 0, 2], [0, 0, 0], [-2, 0, 0]],
            [[0, 0, 0], [0, 0, 2], [0, -2, 0]],
            [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(gamma.get(i, j), &vec_from_ints(expected[i][j]), "nabla_e{} e{}", i + 1, j + 1);
            }
        }
    }

    #[test]
    fn abelian_frame_is_flat() {
        let geom = FrameGeometry::with_identity_metric(StructureConstants::zero()).unwrap();
        assert_eq!(geom.connection(), &Connection::zero());
        assert!(geom.curvature().is_zero());
        assert!(geom.ricci_tensor().is_zero());
        assert!(geom.scalar_curvature().is_zero());
    }

    #[test]
    fn su2_connection_is_half_bracket() {
        let c = su2(1);
        let gamma = koszul_connection(&c, &FrameMetric::identity()).unwrap();
        let half = Rational::frac(1, 2);
        for i in 0..3 {
            for j in 0..3 {
                let expect = c.bracket_of(i, j).clone().map(|x| x * &half);
                assert_eq!(gamma.get(i, j), &expect);
            }
        }
        assert_eq!(gamma.get(0, 1), &vec_from_ints([0, 0, 1]));
        assert_eq!(gamma.get(0, 2), &vec_from_ints([0, -1, 0]));
    }

    #[test]
    fn hyp_curvature_and_ricci() {
        let geom = FrameGeometry::with_identity_metric(hyp()).unwrap();
        let r = geom.curvature();
        assert_eq!(r.get(0, 1, 1), &vec_from_ints([-4, 0, 0]));
        assert_eq!(r.get(0, 2, 2), &vec_from_ints([-4, 0, 0]));
        assert_eq!(r.get(2, 0, 0), &vec_from_ints([0, 0, -4]));
        assert_eq!(r.get(2, 1, 1), &vec_from_ints([0, 0, -4]));
        assert_eq!(r.get(1, 0, 0), &vec_from_ints([0, -4, 0]));
        assert_eq!(geom.ricci_tensor().get(2, 2), &q(-8));
        assert_eq!(geom.ricci_tensor(), &Sym2Tensor::from_metric(geom.metric()).scaled(&q(-8)));
        assert_eq!(geom.scalar_curvature(), &q(-24));
    }

    #[test]
    fn cov_deriv_examples() {
        let geom = FrameGeometry::with_identity_metric(hyp()).unwrap();
        let zero: Rank3Array = Default::default();
        assert_eq!(geom.nabla_ricci(), zero);
        let g = Sym2Tensor::from_metric(geom.metric());
        assert_eq!(cov_deriv_sym2(&g, geom.connection()), zero);
        let flat = Connection::zero();
        let t = Sym2Tensor::new(mat_from_ints([[1, 2, 3], [2, 5, 7], [3, 7, 9]])).unwrap();
        assert_eq!(cov_deriv_sym2(&t, &flat), zero);
    }

    #[test]
    fn lie_derivative_examples() {
        let xi = vec_from_ints([0, 0, 1]);
        let geom = FrameGeometry::with_identity_metric(hyp()).unwrap();
        assert_eq!(
            geom.lie_derivative(&xi),
            Sym2Tensor::diagonal([q(-4), q(-4), q(0)])
        );
        let geom = FrameGeometry::with_identity_metric(su2(1)).unwrap();
        assert!(geom.lie_derivative(&xi).is_zero());
        let geom = FrameGeometry::with_identity_metric(StructureConstants::zero()).unwrap();
        assert!(geom.lie_derivative(&vec_from_ints([3, -1, 2])).is_zero());
    }

    #[test]
    fn metric_rejects_bad_input() {
        assert!(FrameMetric::new(mat_from_ints([[1, 1, 0], [0, 1, 0], [0, 0, 1]])).is_err());
        assert!(FrameMetric::new(mat_from_ints([[1, 2, 0], [2, 1, 0], [0, 0, 1]])).is_err());
        assert!(FrameMetric::new(mat_from_ints([[2, 1, 0], [1, 2, 0], [0, 0, 1]])).is_ok());
    }

    #[test]
    fn frame_change_preserves_scalar_curvature() {
        let m = mat_from_ints([[1, 1, 0], [0, 1, 0], [1, 0, 2]]);
        let change = FrameChange::new(m).unwrap();
        let c = change.constants(&su2(1));
        let g = change.metric(&FrameMetric::identity()).unwrap();
        let geom = FrameGeometry::new(c, g).unwrap();
        assert_eq!(geom.scalar_curvature(), &q(6));
    }
}
