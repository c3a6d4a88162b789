//! Per-instance audit of the soliton theorem catalogue.
//!
//! Hypothesis and conclusion of every result are evaluated separately with
//! exact arithmetic. A conclusion that fails while its hypothesis holds is a
//! finding about this instance and is reported as such.

use std::fmt;
use std::str::FromStr;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::conditions::{
    bochner_xi_dot_s, bochner_xi_reduction, codazzi_check, cyclic_parallel_check,
    einstein_semisymmetry, r_xi_dot_s, s_wedge_dot_r, torse_forming_decompose, w2_xi_dot_s,
    TorseFormingDecomposition,
};
use crate::contact::{detect_alpha_beta, fit_eta_einstein, AlmostContactData, Detection, EtaEinsteinFit, TransSasakianClass};
use crate::error::Error;
use crate::frame::FrameGeometry;
use crate::reference::{discrepancy_notes, worked_example_comparison};
use crate::report::ConditionReport;
use crate::scalar::{vec_is_zero, vec_scale, vec_sub, Rational};
use crate::soliton::{
    check_scalar_identities, classify, collinear_solve, predicted_class_from_alpha_beta,
    solve_eta_einstein, CollinearConfig, SolitonClass, SolitonParams,
};

macro_rules! theorem_ids {
    ($($variant:ident => $name:literal),+ $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant),+
        }

        impl TheoremId {
            pub const ALL: [TheoremId; 17] = [$(TheoremId::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name),+
                }
            }
        }
    };
}

theorem_ids! {
    T3_1 => "T3.1",
    T3_2 => "T3.2",
    T4_1 => "T4.1",
    C4_2 => "C4.2",
    T4_3 => "T4.3",
    T4_5 => "T4.5",
    C4_6 => "C4.6",
    T4_7 => "T4.7",
    T5_1 => "T5.1",
    T5_3 => "T5.3",
    C5_4 => "C5.4",
    L6_2 => "L6.2",
    T6_3 => "T6.3",
    T7_1 => "T7.1",
    C7_2 => "C7.2",
    T8_1 => "T8.1",
    T9_1 => "T9.1",
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let wanted = s.trim();
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(wanted))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Inapplicable,
}

impl Verdict {
    pub fn is_applicable(self) -> bool {
        self != Verdict::Inapplicable
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inapplicable => "inapplicable",
        })
    }
}

/// `true`, `false` or `"inapplicable"`.
impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Verdict::Holds => serializer.serialize_bool(true),
            Verdict::Fails => serializer.serialize_bool(false),
            Verdict::Inapplicable => serializer.serialize_str("inapplicable"),
        }
    }
}

/// Named scalars in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness(Vec<(String, Rational)>);

impl Witness {
    pub fn push(&mut self, name: &str, value: Rational) {
        self.0.push((name.to_string(), value));
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn entries(&self) -> &[(String, Rational)] {
        &self.0
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub id: TheoremId,
    pub hypothesis_holds: bool,
    pub conclusion_holds: Verdict,
    pub witness: Witness,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub instance: String,
    pub reports: Vec<TheoremReport>,
}

/// Everything the individual audits share, computed once per instance.
pub struct AuditContext<'a> {
    geom: &'a FrameGeometry,
    acd: &'a AlmostContactData,
    detection: Detection,
    /// Soliton with potential `ξ`: the supplied one when its potential is `ξ`,
    /// otherwise an exact solve.
    xi_soliton: Option<SolitonParams>,
    xi_soliton_note: Option<String>,
    supplied: Option<SolitonParams>,
    fit: Option<EtaEinsteinFit>,
    reference_notes: Vec<String>,
}

impl<'a> AuditContext<'a> {
    pub fn new(
        geom: &'a FrameGeometry,
        acd: &'a AlmostContactData,
        supplied: Option<&SolitonParams>,
    ) -> Self {
        let detection = detect_alpha_beta(geom, acd);
        let (xi_soliton, xi_soliton_note) = match supplied {
            Some(s) if &s.potential == acd.xi() => (Some(s.clone()), None),
            Some(_) => (
                solve_eta_einstein(geom, acd, acd.xi()),
                Some("supplied potential is not ξ; soliton along ξ solved exactly".to_string()),
            ),
            None => (solve_eta_einstein(geom, acd, acd.xi()), None),
        };
        let fit = fit_eta_einstein(geom.ricci_tensor(), geom.metric(), acd.eta());
        let reference_notes = worked_example_comparison(geom, acd)
            .map(|rows| discrepancy_notes(&rows))
            .unwrap_or_default();
        AuditContext {
            geom,
            acd,
            detection,
            xi_soliton,
            xi_soliton_note,
            supplied: supplied.cloned(),
            fit,
            reference_notes,
        }
    }

    pub fn audit(&self, id: TheoremId) -> TheoremReport {
        let mut e = Eval::new(self);
        match id {
            TheoremId::T3_1 => self.t3_1(&mut e),
            TheoremId::T3_2 => self.t3_2(&mut e),
            TheoremId::T4_1 => self.t4_1(&mut e),
            TheoremId::C4_2 => self.c4_2(&mut e),
            TheoremId::T4_3 => self.t4_3(&mut e),
            TheoremId::T4_5 => self.t4_5(&mut e),
            TheoremId::C4_6 => self.c4_6(&mut e),
            TheoremId::T4_7 => self.t4_7(&mut e),
            TheoremId::T5_1 => self.t5_1(&mut e),
            TheoremId::T5_3 => self.t5_3(&mut e),
            TheoremId::C5_4 => self.c5_4(&mut e),
            TheoremId::L6_2 => self.l6_2(&mut e),
            TheoremId::T6_3 => self.t6_3(&mut e),
            TheoremId::T7_1 => self.t7_1(&mut e),
            TheoremId::C7_2 => self.c7_2(&mut e),
            TheoremId::T8_1 => self.t8_1(&mut e),
            TheoremId::T9_1 => self.t9_1(&mut e),
        }
        e.finish(id)
    }

    fn r(&self) -> &Rational {
        self.geom.scalar_curvature()
    }

    fn is_einstein(&self) -> bool {
        self.fit.as_ref().is_some_and(EtaEinsteinFit::is_einstein)
    }

    /// Trans-Sasakian structure only.
    fn trans_sasakian(&self, e: &mut Eval) -> Option<TransSasakianClass> {
        match &self.detection {
            Detection::TransSasakian(cls) => {
                e.witness.push("alpha", cls.alpha.clone());
                e.witness.push("beta", cls.beta.clone());
                if cls.alpha.is_zero() && cls.beta.is_zero() {
                    e.note("degenerate instance: α = β = 0");
                } else if cls.alpha2_minus_beta2().is_zero() {
                    e.note("degenerate instance: α² = β²");
                }
                Some(cls.clone())
            }
            Detection::NotTransSasakian { reason } => {
                e.require(false, || format!("not trans-Sasakian ({reason})"));
                None
            }
        }
    }

    /// Trans-Sasakian with an η-Einstein soliton along `ξ`.
    fn base(&self, e: &mut Eval) -> Option<(TransSasakianClass, SolitonParams)> {
        let cls = self.trans_sasakian(e);
        if let Some(note) = &self.xi_soliton_note {
            e.note(note);
        }
        let soliton = match &self.xi_soliton {
            Some(s) if s.is_solution() => {
                e.witness.push("lambda", s.lambda.clone());
                e.witness.push("mu", s.mu.clone());
                Some(s.clone())
            }
            Some(s) => {
                e.require(false, || {
                    format!("supplied (λ, μ) = ({}, {}) leaves a nonzero residual", s.lambda, s.mu)
                });
                None
            }
            None => {
                e.require(false, || "no η-Einstein soliton along ξ".to_string());
                None
            }
        };
        Some((cls?, soliton?))
    }

    fn nonzero_ricci(&self, e: &mut Eval) {
        e.require(!self.geom.ricci_tensor().is_zero(), || "Ricci tensor is zero".to_string());
    }

    fn mu_ne_beta(&self, e: &mut Eval, cls: &TransSasakianClass, s: &SolitonParams) {
        e.require(s.mu != cls.beta, || format!("μ = β = {}", cls.beta));
    }

    fn einstein_with_r(&self, e: &mut Eval, name: &str, predicted: Rational) {
        e.conclude(self.is_einstein(), || "Ricci tensor is not a multiple of g".to_string());
        self.r_equals(e, name, predicted);
    }

    fn r_equals(&self, e: &mut Eval, name: &str, predicted: Rational) {
        e.witness.push("predicted_r", predicted.clone());
        let r = self.r().clone();
        e.conclude(r == predicted, || format!("r = {r} but {name} = {predicted}"));
    }

    fn eta_einstein(&self, e: &mut Eval) {
        e.conclude(self.fit.is_some(), || "Ricci tensor is not η-Einstein".to_string());
    }

    fn class_rule(&self, e: &mut Eval, rule: &str, predicted: SolitonClass, s: &SolitonParams) {
        let actual = classify(&s.lambda);
        e.conclude(predicted == actual, || {
            format!("{rule} predicts {predicted} but λ = {} is {actual}", s.lambda)
        });
    }

    fn t3_1(&self, e: &mut Eval) {
        let Some((cls, s)) = self.base(e) else { return };
        let (two, four, six) = (Rational::int(2), Rational::int(4), Rational::int(6));
        self.eta_einstein(e);
        self.r_equals(e, "6λ + 4β + 2μ", &six * &s.lambda + &four * &cls.beta + &two * &s.mu);
        self.class_rule(e, "α² vs β(β+1)", predicted_class_from_alpha_beta(&cls), &s);
        for check in check_scalar_identities(self.geom, &cls, &s.lambda, &s.mu) {
            if !check.holds {
                e.note(&format!("side check {check}"));
            }
        }
        for note in &self.reference_notes {
            e.note(note);
        }
    }

    fn t3_2(&self, e: &mut Eval) {
        let cls = self.trans_sasakian(e);
        // potential b·ξ: the supplied one when collinear, otherwise b = 1
        let b = self.supplied.as_ref().and_then(|s| {
            let b = self.acd.eta_of(&s.potential);
            let along = vec_scale(&b, self.acd.xi());
            vec_is_zero(&vec_sub(&s.potential, &along)).then_some(b)
        });
        let b = b.unwrap_or_else(Rational::one);
        e.witness.push("b", b.clone());
        let Some(cls) = cls else { return };
        let solved = collinear_solve(self.geom, self.acd, &cls, &CollinearConfig { b: b.clone() });
        let Some(sol) = solved else {
            e.require(false, || format!("no η-Einstein soliton with V = {b}·ξ"));
            return;
        };
        if let Some(s) = &self.supplied {
            if s.potential == sol.params.potential && !s.is_solution() {
                e.note(&format!(
                    "supplied (λ, μ) = ({}, {}) is not a solution; exact solve used",
                    s.lambda, s.mu
                ));
            }
        }
        e.witness.push("lambda", sol.params.lambda.clone());
        e.witness.push("mu", sol.params.mu.clone());
        let expected = sol.expected_fit.clone();
        e.conclude(sol.ricci_form_holds, || {
            format!("S is not ({})g + ({})η⊗η", expected.a, expected.b)
        });
        e.witness.push("predicted_r", sol.scalar_check.rhs.clone());
        let check = sol.scalar_check.clone();
        e.conclude(check.holds, || format!("r = {} but 2λ + 2μ + 4(α²-β²) = {}", check.lhs, check.rhs));
    }

    fn codazzi_hypothesis(&self, e: &mut Eval) -> Option<(TransSasakianClass, SolitonParams)> {
        let base = self.base(e);
        e.require_condition(codazzi_check(self.geom));
        self.nonzero_ricci(e);
        base
    }

    fn cyclic_hypothesis(&self, e: &mut Eval) -> Option<(TransSasakianClass, SolitonParams)> {
        let base = self.base(e);
        e.require_condition(cyclic_parallel_check(self.geom));
        self.nonzero_ricci(e);
        base
    }

    fn t4_1(&self, e: &mut Eval) {
        let Some((cls, s)) = self.codazzi_hypothesis(e) else { return };
        self.mu_ne_beta(e, &cls, &s);
        if !e.hypothesis {
            return;
        }
        e.conclude(cls.alpha.is_zero(), || format!("α = {} is nonzero", cls.alpha));
    }

    fn c4_2(&self, e: &mut Eval) {
        let Some((cls, s)) = self.codazzi_hypothesis(e) else { return };
        self.mu_ne_beta(e, &cls, &s);
        if !e.hypothesis {
            return;
        }
        let predicted = -(&cls.beta * (&cls.beta + Rational::one()));
        e.witness.push("predicted_lambda", predicted.clone());
        self.class_rule(e, "β vs -1 and 0", SolitonClass::from_sign(&predicted), &s);
    }

    fn t4_3(&self, e: &mut Eval) {
        let Some((cls, s)) = self.codazzi_hypothesis(e) else { return };
        e.require(!cls.alpha.is_zero(), || "α = 0".to_string());
        if !e.hypothesis {
            return;
        }
        let six = Rational::int(6);
        self.einstein_with_r(e, "6λ + 6β", &six * &s.lambda + &six * &cls.beta);
    }

    fn t4_5(&self, e: &mut Eval) {
        let Some((cls, s)) = self.cyclic_hypothesis(e) else { return };
        self.mu_ne_beta(e, &cls, &s);
        if !e.hypothesis {
            return;
        }
        e.conclude(cls.beta.is_zero(), || format!("β = {} is nonzero", cls.beta));
    }

    fn c4_6(&self, e: &mut Eval) {
        let Some((cls, s)) = self.cyclic_hypothesis(e) else { return };
        self.mu_ne_beta(e, &cls, &s);
        if !e.hypothesis {
            return;
        }
        self.class_rule(e, "cyclic parallel Ricci tensor", SolitonClass::Expanding, &s);
    }

    fn t4_7(&self, e: &mut Eval) {
        let Some((cls, s)) = self.cyclic_hypothesis(e) else { return };
        e.require(!cls.beta.is_zero(), || "β = 0".to_string());
        if !e.hypothesis {
            return;
        }
        let six = Rational::int(6);
        self.einstein_with_r(e, "6λ + 6β", &six * &s.lambda + &six * &cls.beta);
    }

    fn t5_1(&self, e: &mut Eval) {
        let base = self.base(e);
        e.require_condition(r_xi_dot_s(self.geom, self.acd));
        let Some((cls, s)) = base else { return };
        if !e.hypothesis {
            return;
        }
        let six = Rational::int(6);
        self.einstein_with_r(e, "6λ + 6β", &six * &s.lambda + &six * &cls.beta);
    }

    fn t5_3(&self, e: &mut Eval) {
        let base = self.base(e);
        e.require_condition(w2_xi_dot_s(self.geom, self.acd));
        let Some((cls, s)) = base else { return };
        if !e.hypothesis {
            return;
        }
        let two = Rational::int(2);
        let predicted = &two * &s.lambda + &two * &cls.beta;
        e.witness.push("predicted_r", predicted.clone());
        let r = self.r().clone();
        e.conclude(self.is_einstein() || r == predicted, || {
            format!("not Einstein and r = {r} but 2λ + 2β = {predicted}")
        });
    }

    fn c5_4(&self, e: &mut Eval) {
        let base = self.base(e);
        e.require_condition(w2_xi_dot_s(self.geom, self.acd));
        let Some((cls, s)) = base else { return };
        self.mu_ne_beta(e, &cls, &s);
        if !e.hypothesis {
            return;
        }
        let predicted = SolitonClass::from_sign(&-(&s.mu + &cls.beta));
        self.class_rule(e, "μ vs -β", predicted, &s);
    }

    fn l6_2(&self, e: &mut Eval) {
        let cls = self.trans_sasakian(e);
        e.require_condition(einstein_semisymmetry(self.geom));
        let Some(cls) = cls else { return };
        if !e.hypothesis {
            return;
        }
        self.eta_einstein(e);
        let k = cls.alpha2_minus_beta2();
        let explicit = EtaEinsteinFit { a: Rational::int(-2) * &k, b: Rational::int(4) * &k };
        if self.fit.as_ref() != Some(&explicit) {
            e.note(&format!(
                "explicit form S = ({})g + ({})η⊗η does not hold on this instance",
                explicit.a, explicit.b
            ));
        }
    }

    fn t6_3(&self, e: &mut Eval) {
        let base = self.base(e);
        e.require_condition(einstein_semisymmetry(self.geom));
        let Some((cls, s)) = base else { return };
        if !e.hypothesis {
            return;
        }
        self.eta_einstein(e);
        self.r_equals(e, "2λ + μ + β", Rational::int(2) * &s.lambda + &s.mu + &cls.beta);
        let predicted = SolitonClass::from_sign(&(Rational::int(3) * &cls.beta - &s.mu));
        self.class_rule(e, "μ vs 3β", predicted, &s);
    }

    fn bochner_notes(&self, e: &mut Eval, cls: &TransSasakianClass, s: &SolitonParams) {
        e.note("C-Bochner term S(Y,Z) taken as S(Y,Z)X");
        let reduction = bochner_xi_reduction(self.geom, self.acd, &cls.alpha2_minus_beta2(), &s.lambda, &s.mu);
        if !reduction.holds {
            e.note(&format!("side check {reduction}"));
        }
    }

    fn t7_1(&self, e: &mut Eval) {
        let base = self.base(e);
        e.require_condition(bochner_xi_dot_s(self.geom, self.acd));
        let Some((cls, s)) = base else { return };
        if !e.hypothesis {
            return;
        }
        self.bochner_notes(e, &cls, &s);
        let predicted = Rational::int(10) * &s.lambda + Rational::int(2) * &s.mu
            + Rational::int(12) * &cls.beta
            - Rational::int(8);
        e.witness.push("predicted_r", predicted.clone());
        let r = self.r().clone();
        e.conclude(self.is_einstein() || r == predicted, || {
            format!("not Einstein and r = {r} but 10λ + 2μ + 12β - 8 = {predicted}")
        });
    }

    fn c7_2(&self, e: &mut Eval) {
        let base = self.base(e);
        e.require_condition(bochner_xi_dot_s(self.geom, self.acd));
        let Some((cls, s)) = base else { return };
        self.mu_ne_beta(e, &cls, &s);
        if !e.hypothesis {
            return;
        }
        self.bochner_notes(e, &cls, &s);
        let predicted_lambda = Rational::int(2) * (Rational::one() - &cls.beta);
        e.witness.push("predicted_lambda", predicted_lambda.clone());
        if predicted_lambda != s.lambda {
            e.note(&format!("λ = {} differs from 2(1-β) = {predicted_lambda}", s.lambda));
        }
        let predicted = SolitonClass::from_sign(&(Rational::one() - &cls.beta));
        self.class_rule(e, "β vs 1", predicted, &s);
    }

    fn t8_1(&self, e: &mut Eval) {
        let base = self.base(e);
        e.require_condition(s_wedge_dot_r(self.geom, self.acd));
        let Some((cls, s)) = base else { return };
        if !e.hypothesis {
            return;
        }
        e.note("ξ∧_S X acts on R as a derivation");
        let predicted = Rational::int(6) * &s.lambda + Rational::int(8) * &cls.beta;
        self.r_equals(e, "6λ + 8β", predicted);
    }

    fn t9_1(&self, e: &mut Eval) {
        let base = self.base(e);
        let decomposition = torse_forming_decompose(self.geom, self.acd.xi())
            .expect("ξ is a unit vector");
        e.require(decomposition.is_some(), || "ξ is not torse-forming".to_string());
        let (Some((cls, s)), Some(TorseFormingDecomposition { f, .. })) = (base, decomposition) else {
            return;
        };
        if !e.hypothesis {
            return;
        }
        let k = cls.alpha2_minus_beta2();
        let predicted_lambda = &f - &k;
        e.witness.push("f", f.clone());
        e.witness.push("alpha2_minus_beta2", k);
        e.witness.push("predicted_lambda", predicted_lambda.clone());
        e.note("unit ξ gives g(∇_X ξ, ξ) = 0; λ = f - (α²-β²) is evaluated as stated");
        self.eta_einstein(e);
        self.class_rule(e, "f vs α²-β²", SolitonClass::from_sign(&predicted_lambda), &s);
    }
}

/// Accumulates one report.
struct Eval {
    hypothesis: bool,
    conclusion: bool,
    witness: Witness,
    notes: Vec<String>,
}

impl Eval {
    fn new(ctx: &AuditContext) -> Self {
        let mut witness = Witness::default();
        witness.push("r", ctx.r().clone());
        Eval { hypothesis: true, conclusion: true, witness, notes: Vec::new() }
    }

    fn note(&mut self, text: &str) {
        if !self.notes.iter().any(|n| n == text) {
            self.notes.push(text.to_string());
        }
    }

    fn require(&mut self, ok: bool, why: impl FnOnce() -> String) {
        if !ok {
            self.hypothesis = false;
            self.note(&format!("hypothesis fails: {}", why()));
        }
    }

    fn require_condition(&mut self, report: ConditionReport) {
        let holds = report.holds;
        self.require(holds, || report.to_string());
    }

    fn conclude(&mut self, ok: bool, why: impl FnOnce() -> String) {
        assert!(self.hypothesis, "conclusion evaluated under a failed hypothesis");
        if !ok {
            self.conclusion = false;
            self.note(&format!("finding on this instance: {}", why()));
        }
    }

    fn finish(self, id: TheoremId) -> TheoremReport {
        let conclusion_holds = match (self.hypothesis, self.conclusion) {
            (false, _) => Verdict::Inapplicable,
            (true, true) => Verdict::Holds,
            (true, false) => Verdict::Fails,
        };
        TheoremReport {
            id,
            hypothesis_holds: self.hypothesis,
            conclusion_holds,
            witness: self.witness,
            notes: self.notes,
        }
    }
}

pub fn audit(
    id: TheoremId,
    geom: &FrameGeometry,
    acd: &AlmostContactData,
    soliton: Option<&SolitonParams>,
) -> TheoremReport {
    AuditContext::new(geom, acd, soliton).audit(id)
}

/// All 17 reports in catalogue order.
pub fn run_all(
    geom: &FrameGeometry,
    acd: &AlmostContactData,
    soliton: Option<&SolitonParams>,
) -> Vec<TheoremReport> {
    let ctx = AuditContext::new(geom, acd, soliton);
    TheoremId::ALL.iter().map(|&id| ctx.audit(id)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixture;

    fn q(n: i64) -> Rational {
        Rational::int(n)
    }

    fn report(f: Fixture, id: TheoremId) -> TheoremReport {
        let inst = f.instance();
        audit(id, &inst.geom, &inst.acd, None)
    }

    #[test]
    fn ids_parse_and_display() {
        for id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
        assert_eq!("t8.1".parse::<TheoremId>().unwrap(), TheoremId::T8_1);
        assert!(matches!("T2.9".parse::<TheoremId>(), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn t5_1_on_hyp_and_su2() {
        for f in [Fixture::Hyp, Fixture::Su2(q(1))] {
            let r = report(f, TheoremId::T5_1);
            assert!(r.hypothesis_holds);
            assert_eq!(r.conclusion_holds, Verdict::Holds);
            assert_eq!(r.witness.get("r"), r.witness.get("predicted_r"));
        }
    }

    #[test]
    fn c4_6_inapplicable_on_su2() {
        let r = report(Fixture::Su2(q(1)), TheoremId::C4_6);
        assert!(!r.hypothesis_holds);
        assert_eq!(r.conclusion_holds, Verdict::Inapplicable);
        assert!(r.notes.iter().any(|n| n.contains("μ = β = 0")));
    }

    #[test]
    fn t3_1_on_su2() {
        let r = report(Fixture::Su2(q(1)), TheoremId::T3_1);
        assert!(r.hypothesis_holds);
        assert_eq!(r.conclusion_holds, Verdict::Holds);
        assert_eq!(r.witness.get("predicted_r"), Some(&q(6)));
    }

    #[test]
    fn t3_1_on_hyp_carries_reference_notes() {
        let r = report(Fixture::Hyp, TheoremId::T3_1);
        assert_eq!(r.conclusion_holds, Verdict::Holds);
        assert!(r.notes.iter().any(|n| n == "reference value mu = 6 differs from computed -2"));
    }

    #[test]
    fn t8_1_finding_on_hyp() {
        let r = report(Fixture::Hyp, TheoremId::T8_1);
        assert!(r.hypothesis_holds);
        assert_eq!(r.conclusion_holds, Verdict::Fails);
        assert_eq!(r.witness.get("r"), Some(&q(-24)));
        assert_eq!(r.witness.get("predicted_r"), Some(&q(-28)));
    }

    #[test]
    fn t9_1_on_su2_not_torse_forming() {
        let r = report(Fixture::Su2(q(1)), TheoremId::T9_1);
        assert!(!r.hypothesis_holds);
        assert!(r.notes.iter().any(|n| n.contains("not torse-forming")));
    }

    #[test]
    fn abl_flags_degenerate_case() {
        let inst = Fixture::Abl.instance();
        for r in run_all(&inst.geom, &inst.acd, None) {
            assert!(r.notes.iter().any(|n| n.contains("α = β = 0")), "{:?}", r.id);
            if r.hypothesis_holds && r.id != TheoremId::L6_2 {
                assert_eq!(r.witness.get("lambda").cloned(), Some(q(0)), "{:?}", r.id);
            }
        }
    }

    #[test]
    fn inapplicable_iff_hypothesis_fails() {
        for f in crate::fixtures::fixture_library() {
            let inst = f.instance();
            let reports = run_all(&inst.geom, &inst.acd, None);
            assert_eq!(reports.len(), 17);
            for r in reports {
                assert_eq!(r.hypothesis_holds, r.conclusion_holds.is_applicable());
            }
        }
    }

    #[test]
    fn json_shape() {
        let r = report(Fixture::Hyp, TheoremId::T5_1);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(r#"{"id":"T5.1","hypothesis_holds":true,"conclusion_holds":true,"witness":{"r":"-24","#));
        let r = report(Fixture::Su2(q(1)), TheoremId::C4_6);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#""conclusion_holds":"inapplicable""#));
    }

    #[test]
    fn supplied_non_solution_fails_hypothesis() {
        let inst = Fixture::Hyp.instance();
        let bad = SolitonParams::new(&inst.geom, &inst.acd, q(-2), q(6), inst.acd.xi().clone());
        let r = audit(TheoremId::T3_1, &inst.geom, &inst.acd, Some(&bad));
        assert!(!r.hypothesis_holds);
        assert!(r.notes.iter().any(|n| n.contains("nonzero residual")));
    }
}
