//! Almost contact metric structures `(φ, ξ, η, g)`, trans-Sasakian detection
//! and the identities that hold when `α`, `β` are constant.

use std::fmt;

use serde::Serialize;

use crate::frame::{FrameChange, FrameGeometry, FrameMetric, Sym2Tensor, VectorField};
use crate::report::{ConditionReport, ValidationReport};
use crate::scalar::{
    basis_vec, dot, identity_mat, mat_mul, mat_vec, rank3, solve_exact, transpose, vec_scale,
    vec_sub, LinearSystem, Mat3, Rational, Solution, Vec3, DIM,
};

/// `φ` as a matrix (column `j` is `φ e_j`), the Reeb field `ξ` and its dual
/// `η = g(·, ξ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlmostContactData {
    phi: Mat3,
    xi: VectorField,
    eta: Vec3,
}

impl AlmostContactData {
    /// `η` is always derived from `ξ` and the metric.
    pub fn new(phi: Mat3, xi: VectorField, g: &FrameMetric) -> Self {
        let eta = g.lower(&xi);
        AlmostContactData { phi, xi, eta }
    }

    /// `ξ = e_k` (0-based `k`).
    pub fn with_reeb_index(phi: Mat3, k: usize, g: &FrameMetric) -> Self {
        Self::new(phi, basis_vec(k), g)
    }

    pub fn phi(&self) -> &Mat3 {
        &self.phi
    }

    pub fn xi(&self) -> &VectorField {
        &self.xi
    }

    pub fn eta(&self) -> &Vec3 {
        &self.eta
    }

    pub fn apply_phi(&self, v: &Vec3) -> Vec3 {
        mat_vec(&self.phi, v)
    }

    pub fn eta_of(&self, v: &Vec3) -> Rational {
        dot(&self.eta, v)
    }

    /// The same structure expressed in a new frame.
    pub fn in_frame(&self, change: &FrameChange, new_metric: &FrameMetric) -> Self {
        Self::new(change.endomorphism(&self.phi), change.vector(&self.xi), new_metric)
    }
}

/// Checks every almost-contact axiom componentwise.
pub fn validate_almost_contact(acd: &AlmostContactData, g: &FrameMetric) -> ValidationReport {
    let mut report = ValidationReport::default();
    let (phi, xi, eta) = (&acd.phi, &acd.xi, &acd.eta);
    let id = identity_mat();
    let gm = g.matrix();

    // φ² = -I + η⊗ξ
    let phi2 = mat_mul(phi, phi);
    for i in 0..DIM {
        for j in 0..DIM {
            let v = &phi2[i][j] + &id[i][j] - &xi[i] * &eta[j];
            report.require_zero("phi_squared", &[i, j], v);
        }
    }
    report.require_zero("eta_of_xi", &[], dot(eta, xi) - Rational::one());
    let dual = g.lower(xi);
    for i in 0..DIM {
        report.require_zero("eta_metric_dual", &[i], &eta[i] - &dual[i]);
    }
    // g(φX, φY) = g(X, Y) - η(X)η(Y)
    let pgp = mat_mul(&transpose(phi), &mat_mul(gm, phi));
    // g(X, φY) + g(Y, φX) = 0
    let gp = mat_mul(gm, phi);
    for i in 0..DIM {
        for j in 0..DIM {
            let v = &pgp[i][j] - &gm[i][j] + &eta[i] * &eta[j];
            report.require_zero("phi_isometry", &[i, j], v);
        }
    }
    for i in 0..DIM {
        for j in i..DIM {
            report.require_zero("phi_skew", &[i, j], &gp[i][j] + &gp[j][i]);
        }
    }
    let phi_xi = mat_vec(phi, xi);
    let eta_phi = mat_vec(&transpose(phi), eta);
    for i in 0..DIM {
        report.require_zero("phi_xi", &[i], phi_xi[i].clone());
        report.require_zero("eta_phi", &[i], eta_phi[i].clone());
    }
    let rank = rank3(phi);
    if rank != DIM - 1 {
        report.push("phi_rank", &[], Rational::int(rank as i64));
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    Cosymplectic,
    AlphaSasakian,
    BetaKenmotsu,
    ProperTransSasakian,
    NotTransSasakian,
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StructureKind::Cosymplectic => "cosymplectic",
            StructureKind::AlphaSasakian => "alpha_sasakian",
            StructureKind::BetaKenmotsu => "beta_kenmotsu",
            StructureKind::ProperTransSasakian => "proper_trans_sasakian",
            StructureKind::NotTransSasakian => "not_trans_sasakian",
        };
        f.write_str(s)
    }
}

/// Constant type `(α, β)` of a trans-Sasakian structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransSasakianClass {
    pub alpha: Rational,
    pub beta: Rational,
    pub kind: StructureKind,
}

impl TransSasakianClass {
    pub fn new(alpha: Rational, beta: Rational) -> Self {
        let kind = match (alpha.is_zero(), beta.is_zero()) {
            (true, true) => StructureKind::Cosymplectic,
            (false, true) => StructureKind::AlphaSasakian,
            (true, false) => StructureKind::BetaKenmotsu,
            (false, false) => StructureKind::ProperTransSasakian,
        };
        TransSasakianClass { alpha, beta, kind }
    }

    /// `α² - β²`
    pub fn alpha2_minus_beta2(&self) -> Rational {
        self.alpha.square() - self.beta.square()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Detection {
    TransSasakian(TransSasakianClass),
    NotTransSasakian { reason: String },
}

impl Detection {
    pub fn class(&self) -> Option<&TransSasakianClass> {
        match self {
            Detection::TransSasakian(c) => Some(c),
            Detection::NotTransSasakian { .. } => None,
        }
    }

    pub fn kind(&self) -> StructureKind {
        match self {
            Detection::TransSasakian(c) => c.kind,
            Detection::NotTransSasakian { .. } => StructureKind::NotTransSasakian,
        }
    }
}

/// `(∇_X φ)Y` for constant-coefficient fields.
pub fn nabla_phi(geom: &FrameGeometry, acd: &AlmostContactData, x: &Vec3, y: &Vec3) -> Vec3 {
    let gamma = geom.connection();
    vec_sub(&gamma.nabla(x, &acd.apply_phi(y)), &acd.apply_phi(&gamma.nabla(x, y)))
}

/// `α[g(X,Y)ξ - η(Y)X] + β[g(φX,Y)ξ - η(Y)φX]`
fn trans_sasakian_rhs(
    g: &FrameMetric,
    acd: &AlmostContactData,
    alpha: &Rational,
    beta: &Rational,
    x: &Vec3,
    y: &Vec3,
) -> Vec3 {
    let eta_y = acd.eta_of(y);
    let phi_x = acd.apply_phi(x);
    let a_part = vec_sub(&vec_scale(&g.inner(x, y), &acd.xi), &vec_scale(&eta_y, x));
    let b_part = vec_sub(&vec_scale(&g.inner(&phi_x, y), &acd.xi), &vec_scale(&eta_y, &phi_x));
    std::array::from_fn(|l| alpha * &a_part[l] + beta * &b_part[l])
}

/// Solves `∇_{e_i}ξ = -αφ(e_i) + β(e_i - η(e_i)ξ)` for constants `(α, β)`,
/// then confirms the full `(∇_Xφ)Y` identity on every frame pair.
pub fn detect_alpha_beta(geom: &FrameGeometry, acd: &AlmostContactData) -> Detection {
    let validation = validate_almost_contact(acd, geom.metric());
    if !validation.is_valid() {
        return Detection::NotTransSasakian {
            reason: format!("almost contact structure invalid: {validation}"),
        };
    }
    let gamma = geom.connection();
    let mut system = LinearSystem::with_unknowns(2);
    for i in 0..DIM {
        let e = basis_vec(i);
        let nabla_xi = gamma.nabla(&e, &acd.xi);
        let phi_e = acd.apply_phi(&e);
        let horizontal = vec_sub(&e, &vec_scale(&acd.eta_of(&e), &acd.xi));
        for l in 0..DIM {
            system.push_row(vec![-&phi_e[l], horizontal[l].clone()], nabla_xi[l].clone());
        }
    }
    let (alpha, beta) = match solve_exact(&system) {
        Solution::Unique(x) => (x[0].clone(), x[1].clone()),
        Solution::Inconsistent => {
            return Detection::NotTransSasakian {
                reason: "∇ξ is not of the form -αφ + β(I - η⊗ξ)".into(),
            }
        }
        Solution::Underdetermined => {
            return Detection::NotTransSasakian {
                reason: "(α, β) not determined by ∇ξ".into(),
            }
        }
    };
    for a in 0..DIM {
        for b in 0..DIM {
            let (x, y) = (basis_vec(a), basis_vec(b));
            let lhs = nabla_phi(geom, acd, &x, &y);
            let rhs = trans_sasakian_rhs(geom.metric(), acd, &alpha, &beta, &x, &y);
            if lhs != rhs {
                return Detection::NotTransSasakian {
                    reason: format!(
                        "(∇φ) identity fails at (e{}, e{}) with α = {alpha}, β = {beta}",
                        a + 1,
                        b + 1
                    ),
                };
            }
        }
    }
    Detection::TransSasakian(TransSasakianClass::new(alpha, beta))
}

/// Curvature and Ricci identities of a trans-Sasakian 3-frame with constant
/// `(α, β)`, each checked on every frame component.
pub fn verify_canonical_identities(
    geom: &FrameGeometry,
    acd: &AlmostContactData,
    cls: &TransSasakianClass,
) -> Vec<ConditionReport> {
    let k = cls.alpha2_minus_beta2();
    let g = geom.metric();
    let r = geom.curvature();
    let s = geom.ricci_tensor();
    let xi = &acd.xi;
    let e = basis_vec;

    let mut r_xy_xi = ConditionReport::evaluate("R(X,Y)ξ = k[η(Y)X - η(X)Y]");
    let mut r_xi_xy = ConditionReport::evaluate("R(ξ,X)Y = k[g(X,Y)ξ - η(Y)X]");
    let mut r_xi_x_xi = ConditionReport::evaluate("R(ξ,X)ξ = k[η(X)ξ - X]");
    let mut s_form = ConditionReport::evaluate("S = (r/2 - k)g - (r/2 - 3k)η⊗η");
    let mut s_xi = ConditionReport::evaluate("S(X,ξ) = 2kη(X)");

    for i in 0..DIM {
        let x = e(i);
        let eta_x = acd.eta_of(&x);
        let lhs = r.apply(xi, &x, xi);
        for (l, v) in lhs.iter().enumerate() {
            let expected = &k * (&eta_x * &xi[l] - &x[l]);
            r_xi_x_xi.component(&[i, l], v - expected);
        }
        s_xi.component(&[i], s.eval(&x, xi) - Rational::int(2) * &k * &eta_x);
        for j in 0..DIM {
            let y = e(j);
            let eta_y = acd.eta_of(&y);
            let lhs = r.apply(&x, &y, xi);
            for l in 0..DIM {
                let expected = &k * (&eta_y * &x[l] - &eta_x * &y[l]);
                r_xy_xi.component(&[i, j, l], &lhs[l] - expected);
            }
            let lhs = r.apply(xi, &x, &y);
            let gxy = g.inner(&x, &y);
            for l in 0..DIM {
                let expected = &k * (&gxy * &xi[l] - &eta_y * &x[l]);
                r_xi_xy.component(&[i, j, l], &lhs[l] - expected);
            }
        }
    }
    let half_r = geom.scalar_curvature() * Rational::frac(1, 2);
    let a = &half_r - &k;
    let b = -(&half_r - Rational::int(3) * &k);
    let expected = Sym2Tensor::from_metric(g).combine(&a, &Sym2Tensor::square_of(&acd.eta), &b);
    for i in 0..DIM {
        for j in 0..DIM {
            s_form.component(&[i, j], s.get(i, j) - expected.get(i, j));
        }
    }
    vec![r_xy_xi.finish(), r_xi_xy.finish(), r_xi_x_xi.finish(), s_form.finish(), s_xi.finish()]
}

/// Coefficients of `S = a·g + b·η⊗η`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EtaEinsteinFit {
    pub a: Rational,
    pub b: Rational,
}

impl EtaEinsteinFit {
    pub fn is_einstein(&self) -> bool {
        self.b.is_zero()
    }
}

/// Exact fit of `S = a·g + b·η⊗η`; `None` unless the residual is zero.
pub fn fit_eta_einstein(s: &Sym2Tensor, g: &FrameMetric, eta: &Vec3) -> Option<EtaEinsteinFit> {
    let mut system = LinearSystem::with_unknowns(2);
    for i in 0..DIM {
        for j in i..DIM {
            system.push_row(
                vec![g.get(i, j).clone(), &eta[i] * &eta[j]],
                s.get(i, j).clone(),
            );
        }
    }
    match solve_exact(&system) {
        Solution::Unique(x) => Some(EtaEinsteinFit { a: x[0].clone(), b: x[1].clone() }),
        Solution::Inconsistent | Solution::Underdetermined => None,
    }
}
