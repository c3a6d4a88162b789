//! η-Einstein and η-Ricci soliton equations with constant-coefficient
//! potential fields.
//!
//! `(λ, μ)` are always obtained by an exact solve; the closed-form scalar
//! relations are evaluated afterwards as independent checks.

use std::fmt;

use serde::Serialize;

use crate::contact::{fit_eta_einstein, AlmostContactData, EtaEinsteinFit, TransSasakianClass};
use crate::frame::{FrameGeometry, Sym2Tensor, VectorField};
use crate::scalar::{solve_exact, vec_scale, LinearSystem, Rational, Solution, DIM};

/// Solved or supplied soliton data together with its residual tensor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolitonParams {
    pub lambda: Rational,
    pub mu: Rational,
    pub potential: VectorField,
    pub residual: Sym2Tensor,
}

impl SolitonParams {
    /// Evaluates the η-Einstein residual for the given data.
    pub fn new(
        geom: &FrameGeometry,
        acd: &AlmostContactData,
        lambda: Rational,
        mu: Rational,
        potential: VectorField,
    ) -> Self {
        let residual = eta_einstein_residual(geom, acd, &lambda, &mu, &potential);
        SolitonParams { lambda, mu, potential, residual }
    }

    /// The equation holds exactly.
    pub fn is_solution(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn class(&self) -> SolitonClass {
        classify(&self.lambda)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolitonClass {
    Shrinking,
    Steady,
    Expanding,
}

impl fmt::Display for SolitonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolitonClass::Shrinking => "shrinking",
            SolitonClass::Steady => "steady",
            SolitonClass::Expanding => "expanding",
        })
    }
}

impl SolitonClass {
    /// Class of a quantity whose sign matches `λ`.
    pub fn from_sign(x: &Rational) -> Self {
        if x.is_negative() {
            SolitonClass::Shrinking
        } else if x.is_zero() {
            SolitonClass::Steady
        } else {
            SolitonClass::Expanding
        }
    }
}

pub fn classify(lambda: &Rational) -> SolitonClass {
    SolitonClass::from_sign(lambda)
}

/// Potential `V = b·ξ` with constant `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollinearConfig {
    pub b: Rational,
}

impl CollinearConfig {
    pub fn potential(&self, acd: &AlmostContactData) -> VectorField {
        vec_scale(&self.b, acd.xi())
    }
}

/// `L_V g + 2S + c·g + 2μ η⊗η` with the metric coefficient `c` supplied.
fn residual_with_metric_coeff(
    geom: &FrameGeometry,
    acd: &AlmostContactData,
    metric_coeff: &Rational,
    mu: &Rational,
    v: &VectorField,
) -> Sym2Tensor {
    let two = Rational::int(2);
    let lie = geom.lie_derivative(v);
    let g = Sym2Tensor::from_metric(geom.metric());
    let eta2 = Sym2Tensor::square_of(acd.eta());
    let with_s = lie.combine(&Rational::one(), geom.ricci_tensor(), &two);
    let with_g = with_s.combine(&Rational::one(), &g, metric_coeff);
    with_g.combine(&Rational::one(), &eta2, &(&two * mu))
}

/// `L_V g + 2S + (2λ - r)g + 2μ η⊗η`
pub fn eta_einstein_residual(
    geom: &FrameGeometry,
    acd: &AlmostContactData,
    lambda: &Rational,
    mu: &Rational,
    v: &VectorField,
) -> Sym2Tensor {
    let coeff = Rational::int(2) * lambda - geom.scalar_curvature();
    residual_with_metric_coeff(geom, acd, &coeff, mu, v)
}

/// `L_V g + 2S + 2λ g + 2μ η⊗η`
pub fn eta_ricci_residual(
    geom: &FrameGeometry,
    acd: &AlmostContactData,
    lambda: &Rational,
    mu: &Rational,
    v: &VectorField,
) -> Sym2Tensor {
    let coeff = Rational::int(2) * lambda;
    residual_with_metric_coeff(geom, acd, &coeff, mu, v)
}

/// Solves the six independent components of the η-Einstein equation for
/// `(λ, μ)`. `None` when no constant pair satisfies it.
pub fn solve_eta_einstein(
    geom: &FrameGeometry,
    acd: &AlmostContactData,
    v: &VectorField,
) -> Option<SolitonParams> {
    let zero = Rational::zero();
    // residual(λ, μ) = base + 2λ g + 2μ η⊗η with base = residual(0, 0)
    let base = eta_einstein_residual(geom, acd, &zero, &zero, v);
    let two = Rational::int(2);
    let eta = acd.eta();
    let mut system = LinearSystem::with_unknowns(2);
    for i in 0..DIM {
        for j in i..DIM {
            system.push_row(
                vec![&two * geom.metric().get(i, j), &two * &eta[i] * &eta[j]],
                -base.get(i, j),
            );
        }
    }
    match solve_exact(&system) {
        Solution::Unique(x) => {
            let params = SolitonParams::new(geom, acd, x[0].clone(), x[1].clone(), v.clone());
            assert!(params.is_solution(), "exact solve left a nonzero residual");
            Some(params)
        }
        Solution::Inconsistent => None,
        Solution::Underdetermined => {
            unreachable!("g and η⊗η are independent for a positive-definite metric")
        }
    }
}

/// One exact scalar relation evaluated on an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScalarCheck {
    pub name: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

impl ScalarCheck {
    pub fn equality(name: impl Into<String>, lhs: Rational, rhs: Rational) -> Self {
        let holds = lhs == rhs;
        ScalarCheck { name: name.into(), lhs, rhs, holds }
    }
}

impl fmt::Display for ScalarCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds { "holds" } else { "fails" };
        write!(f, "{}: {} vs {} ({verdict})", self.name, self.lhs, self.rhs)
    }
}

/// Class predicted by comparing `α²` with `β(β+1)`.
pub fn predicted_class_from_alpha_beta(cls: &TransSasakianClass) -> SolitonClass {
    let lhs = cls.alpha.square();
    let rhs = &cls.beta * (&cls.beta + Rational::one());
    SolitonClass::from_sign(&(lhs - rhs))
}

/// Scalar-curvature and `λ` relations for a soliton along `ξ` on a
/// trans-Sasakian instance, plus the sign rule cross-checked against
/// [`classify`].
pub fn check_scalar_identities(
    geom: &FrameGeometry,
    cls: &TransSasakianClass,
    lambda: &Rational,
    mu: &Rational,
) -> Vec<ScalarCheck> {
    let r = geom.scalar_curvature().clone();
    let k = cls.alpha2_minus_beta2();
    let beta = &cls.beta;
    let two = Rational::int(2);
    let four = Rational::int(4);
    let six = Rational::int(6);
    let predicted = predicted_class_from_alpha_beta(cls);
    let actual = classify(lambda);
    vec![
        ScalarCheck::equality(
            "r = 4(α²-β²) + 2λ + 2μ",
            r.clone(),
            &four * &k + &two * lambda + &two * mu,
        ),
        ScalarCheck::equality("r = 6λ + 4β + 2μ", r, &six * lambda + &four * beta + &two * mu),
        ScalarCheck::equality("λ = (α²-β²) - β", lambda.clone(), &k - beta),
        ScalarCheck {
            name: format!("class by α² vs β(β+1) = {predicted}, by λ = {actual}"),
            lhs: cls.alpha.square(),
            rhs: beta * (beta + Rational::one()),
            holds: predicted == actual,
        },
    ]
}

/// Soliton with collinear potential `V = bξ` and the checks that go with it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollinearSolution {
    pub b: Rational,
    pub params: SolitonParams,
    /// Exact fit of the Ricci tensor, if it is η-Einstein at all.
    pub fit: Option<EtaEinsteinFit>,
    /// `S = (r/2 - λ - bβ)g + (bβ - μ)η⊗η`
    pub expected_fit: EtaEinsteinFit,
    pub ricci_form_holds: bool,
    /// `r = 2λ + 2μ + 4(α²-β²)`
    pub scalar_check: ScalarCheck,
}

pub fn collinear_solve(
    geom: &FrameGeometry,
    acd: &AlmostContactData,
    cls: &TransSasakianClass,
    cfg: &CollinearConfig,
) -> Option<CollinearSolution> {
    let params = solve_eta_einstein(geom, acd, &cfg.potential(acd))?;
    let r = geom.scalar_curvature();
    let b_beta = &cfg.b * &cls.beta;
    let expected_fit = EtaEinsteinFit {
        a: r * Rational::frac(1, 2) - &params.lambda - &b_beta,
        b: &b_beta - &params.mu,
    };
    let fit = fit_eta_einstein(geom.ricci_tensor(), geom.metric(), acd.eta());
    let ricci_form_holds = fit.as_ref() == Some(&expected_fit);
    let two = Rational::int(2);
    let scalar_check = ScalarCheck::equality(
        "r = 2λ + 2μ + 4(α²-β²)",
        r.clone(),
        &two * &params.lambda + &two * &params.mu + Rational::int(4) * cls.alpha2_minus_beta2(),
    );
    Some(CollinearSolution {
        b: cfg.b.clone(),
        params,
        fit,
        expected_fit,
        ricci_form_holds,
        scalar_check,
    })
}
