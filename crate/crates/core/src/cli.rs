//! Command-line dispatch and rendering for `sasaki-audit`.
//!
//! Exit codes: 0 success, 1 mathematical violation or `no_solution`,
//! 2 input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::audit::{run_all, AuditContext, AuditSummary, TheoremId, TheoremReport, Verdict};
use crate::contact::{
    detect_alpha_beta, validate_almost_contact, verify_canonical_identities, AlmostContactData,
    Detection,
};
use crate::error::{Error, Result};
use crate::fixtures::{Fixture, Instance, SolitonSpec};
use crate::frame::identities::check_frame_identities;
use crate::frame::{validate_frame, FrameMetric, StructureConstants, Sym2Tensor, VectorField};
use crate::manifest::parse_manifest;
use crate::reference::{discrepancy_notes, worked_example_comparison, ReferenceValue};
use crate::report::{ConditionReport, ValidationReport};
use crate::scalar::{format_vector, parse_rational, Mat3, Rational, Vec3, DIM};
use crate::soliton::{check_scalar_identities, classify, solve_eta_einstein, ScalarCheck, SolitonParams};

pub const FIXTURE_ENV: &str = "SASAKI_AUDIT_FIXTURE";

#[derive(Parser, Debug)]
#[command(name = "sasaki-audit", version, about = "Exact audit of trans-Sasakian frame geometries and η-Einstein solitons")]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Manifest file; falls back to the SASAKI_AUDIT_FIXTURE fixture
    pub manifest: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structural checks of the frame and the almost contact structure
    Validate(Target),
    /// Connection, curvature, Ricci tensor and operator, scalar curvature
    Geometry(Target),
    /// Trans-Sasakian type (α, β)
    Detect(Target),
    /// η-Einstein soliton solve or residual check
    #[command(subcommand)]
    Soliton(SolitonCommand),
    /// Theorem audit
    Theorems {
        #[command(flatten)]
        target: Target,
        /// Single theorem id such as T5.1
        #[arg(long)]
        id: Option<String>,
    },
    /// Everything above in one bundle
    Report(Target),
}

#[derive(Subcommand, Debug)]
pub enum SolitonCommand {
    /// Solve for (λ, μ)
    Solve {
        #[command(flatten)]
        target: Target,
        /// Potential field as a,b,c (default: manifest soliton potential, else ξ)
        #[arg(long, allow_hyphen_values = true)]
        potential: Option<String>,
    },
    /// Evaluate the residual at given (λ, μ)
    Check {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        potential: Option<String>,
    },
}

/// Raw instance data before contact/frame validation.
struct Loaded {
    name: String,
    constants: StructureConstants,
    metric: FrameMetric,
    phi: Mat3,
    xi_index: usize,
    soliton: Option<SolitonSpec>,
}

impl Loaded {
    fn instance(&self) -> Result<Instance> {
        Instance::new(
            self.name.clone(),
            self.constants.clone(),
            self.metric.clone(),
            self.phi.clone(),
            self.xi_index,
            self.soliton.clone(),
        )
    }
}

fn load(target: &Target, fixture: Option<&str>) -> Result<Loaded> {
    if let Some(path) = &target.manifest {
        let text = std::fs::read_to_string(path)?;
        let m = parse_manifest(&text)?;
        let metric = m.metric();
        let name = m.name.clone().unwrap_or_else(|| path.display().to_string());
        return Ok(Loaded {
            name,
            constants: m.constants,
            metric,
            phi: m.phi,
            xi_index: m.xi_index,
            soliton: m.soliton,
        });
    }
    let Some(name) = fixture else {
        return Err(Error::Parse(format!("no manifest given and {FIXTURE_ENV} is not set")));
    };
    let f: Fixture = name.parse()?;
    Ok(Loaded {
        name: f.to_string(),
        constants: f.constants(),
        metric: FrameMetric::identity(),
        phi: crate::fixtures::standard_phi(),
        xi_index: 2,
        soliton: None,
    })
}

fn parse_potential(text: &str) -> Result<VectorField> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != DIM {
        return Err(Error::Parse(format!("potential must be a,b,c, got {text:?}")));
    }
    let values = parts.iter().map(|p| parse_rational(p.trim())).collect::<Result<Vec<_>>>()?;
    Ok(std::array::from_fn(|i| values[i].clone()))
}

/// Output text and exit code of one command.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialize")
}

fn rational_matrix_lines(out: &mut String, symbol: &str, m: &Mat3) {
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let _ = writeln!(out, "  {symbol}[{}][{}] = {v}", i + 1, j + 1);
        }
    }
}

fn condition_lines(out: &mut String, reports: &[ConditionReport]) {
    for r in reports {
        let _ = writeln!(out, "  {r}");
    }
}

// validate

#[derive(Serialize)]
struct ValidateOut<'a> {
    instance: &'a str,
    frame: ValidationReport,
    contact: ValidationReport,
    valid: bool,
}

fn validate(loaded: &Loaded) -> (ValidateOut<'_>, String) {
    let frame = validate_frame(&loaded.constants);
    let acd = AlmostContactData::with_reeb_index(loaded.phi.clone(), loaded.xi_index, &loaded.metric);
    let contact = validate_almost_contact(&acd, &loaded.metric);
    let valid = frame.is_valid() && contact.is_valid();
    let mut text = String::new();
    let _ = writeln!(text, "instance: {}", loaded.name);
    let _ = writeln!(text, "frame: {frame}");
    let _ = writeln!(text, "contact: {contact}");
    let _ = writeln!(text, "verdict: {}", if valid { "valid" } else { "invalid" });
    (ValidateOut { instance: &loaded.name, frame, contact, valid }, text)
}

// geometry

#[derive(Serialize)]
struct CurvatureEntry {
    x: usize,
    y: usize,
    z: usize,
    value: Vec3,
}

#[derive(Serialize)]
struct GeometryOut<'a> {
    instance: &'a str,
    connection: [[Vec3; DIM]; DIM],
    curvature: Vec<CurvatureEntry>,
    ricci: Sym2Tensor,
    ricci_operator: Mat3,
    scalar_curvature: Rational,
    identities: Vec<ConditionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reference: Option<Vec<ReferenceValue>>,
    notes: Vec<String>,
}

impl GeometryOut<'_> {
    fn holds(&self) -> bool {
        self.identities.iter().all(|r| r.holds)
    }
}

fn geometry(inst: &Instance) -> (GeometryOut<'_>, String) {
    let geom = &inst.geom;
    let connection = std::array::from_fn(|i| std::array::from_fn(|j| geom.connection().get(i, j).clone()));
    let curvature = geom
        .curvature()
        .nonzero_entries()
        .into_iter()
        .map(|(i, j, k, v)| CurvatureEntry { x: i + 1, y: j + 1, z: k + 1, value: v.clone() })
        .collect::<Vec<_>>();
    let reference = worked_example_comparison(geom, &inst.acd);
    let mut notes = vec!["Ricci tensor S(Y,Z) = tr(X ↦ R(X,Y)Z)".to_string()];
    if let Some(rows) = &reference {
        notes.extend(discrepancy_notes(rows));
    }
    let out = GeometryOut {
        instance: &inst.name,
        connection,
        curvature,
        ricci: geom.ricci_tensor().clone(),
        ricci_operator: geom.ricci_operator().clone(),
        scalar_curvature: geom.scalar_curvature().clone(),
        identities: check_frame_identities(geom),
        reference,
        notes,
    };

    let mut text = String::new();
    let _ = writeln!(text, "instance: {}", inst.name);
    let _ = writeln!(text, "connection:");
    for i in 0..DIM {
        for j in 0..DIM {
            let _ = writeln!(text, "  ∇_e{} e{} = {}", i + 1, j + 1, format_vector(&out.connection[i][j]));
        }
    }
    let _ = writeln!(text, "curvature (nonzero components):");
    if out.curvature.is_empty() {
        let _ = writeln!(text, "  none");
    }
    for c in &out.curvature {
        let _ = writeln!(text, "  R(e{},e{})e{} = {}", c.x, c.y, c.z, format_vector(&c.value));
    }
    let _ = writeln!(text, "Ricci tensor:");
    rational_matrix_lines(&mut text, "S", out.ricci.matrix());
    let _ = writeln!(text, "Ricci operator:");
    rational_matrix_lines(&mut text, "Q", &out.ricci_operator);
    let _ = writeln!(text, "r = {}", out.scalar_curvature);
    let _ = writeln!(text, "identities:");
    condition_lines(&mut text, &out.identities);
    if let Some(rows) = &out.reference {
        let _ = writeln!(text, "reference comparison:");
        for r in rows {
            let verdict = if r.agrees { "agrees" } else { "differs" };
            let _ = writeln!(text, "  {}: reference {}, computed {}, {verdict}", r.quantity, r.reference, r.computed);
        }
    }
    for n in &out.notes {
        let _ = writeln!(text, "note: {n}");
    }
    (out, text)
}

// detect

#[derive(Serialize)]
struct DetectOut<'a> {
    instance: &'a str,
    detection: Detection,
    canonical_identities: Vec<ConditionReport>,
}

impl DetectOut<'_> {
    fn holds(&self) -> bool {
        self.detection.class().is_some() && self.canonical_identities.iter().all(|r| r.holds)
    }
}

fn detect(inst: &Instance) -> (DetectOut<'_>, String) {
    let detection = detect_alpha_beta(&inst.geom, &inst.acd);
    let canonical_identities = match detection.class() {
        Some(cls) => verify_canonical_identities(&inst.geom, &inst.acd, cls),
        None => Vec::new(),
    };
    let mut text = String::new();
    let _ = writeln!(text, "instance: {}", inst.name);
    match &detection {
        Detection::TransSasakian(cls) => {
            let _ = writeln!(text, "trans-Sasakian: alpha = {}, beta = {}, kind = {}", cls.alpha, cls.beta, cls.kind);
            let _ = writeln!(text, "canonical identities (k = α² - β² = {}):", cls.alpha2_minus_beta2());
            condition_lines(&mut text, &canonical_identities);
        }
        Detection::NotTransSasakian { reason } => {
            let _ = writeln!(text, "not trans-Sasakian: {reason}");
        }
    }
    (DetectOut { instance: &inst.name, detection, canonical_identities }, text)
}

// soliton

#[derive(Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
enum SolveOut {
    Solved {
        lambda: Rational,
        mu: Rational,
        class: crate::soliton::SolitonClass,
        potential: Vec3,
        residual_is_zero: bool,
        checks: Vec<ScalarCheck>,
    },
    NoSolution {
        potential: Vec3,
    },
}

fn default_potential(inst: &Instance, flag: Option<&str>) -> Result<VectorField> {
    match flag {
        Some(text) => parse_potential(text),
        None => Ok(inst
            .soliton
            .as_ref()
            .map(|s| s.potential.clone())
            .unwrap_or_else(|| inst.acd.xi().clone())),
    }
}

fn solve(inst: &Instance, potential: VectorField) -> (SolveOut, String) {
    let mut text = String::new();
    let _ = writeln!(text, "instance: {}", inst.name);
    let _ = writeln!(text, "potential = {}", format_vector(&potential));
    match solve_eta_einstein(&inst.geom, &inst.acd, &potential) {
        Some(s) => {
            let checks = match detect_alpha_beta(&inst.geom, &inst.acd).class() {
                Some(cls) if &potential == inst.acd.xi() => {
                    check_scalar_identities(&inst.geom, cls, &s.lambda, &s.mu)
                }
                _ => Vec::new(),
            };
            let _ = writeln!(text, "lambda = {}, mu = {}, class = {}", s.lambda, s.mu, s.class());
            let _ = writeln!(text, "residual = {}", if s.is_solution() { "0" } else { "nonzero" });
            for c in &checks {
                let _ = writeln!(text, "check {c}");
            }
            let out = SolveOut::Solved {
                class: s.class(),
                residual_is_zero: s.is_solution(),
                lambda: s.lambda,
                mu: s.mu,
                potential,
                checks,
            };
            (out, text)
        }
        None => {
            let _ = writeln!(text, "no_solution");
            (SolveOut::NoSolution { potential }, text)
        }
    }
}

#[derive(Serialize)]
struct CheckOut<'a> {
    instance: &'a str,
    lambda: Rational,
    mu: Rational,
    potential: Vec3,
    residual: Sym2Tensor,
    is_zero: bool,
}

fn check(inst: &Instance, lambda: Rational, mu: Rational, potential: VectorField) -> (CheckOut<'_>, String) {
    let p = SolitonParams::new(&inst.geom, &inst.acd, lambda, mu, potential);
    let mut text = String::new();
    let _ = writeln!(text, "instance: {}", inst.name);
    let _ = writeln!(text, "lambda = {}, mu = {}, potential = {}", p.lambda, p.mu, format_vector(&p.potential));
    let _ = writeln!(text, "residual:");
    rational_matrix_lines(&mut text, "E", p.residual.matrix());
    let zero = p.is_solution();
    let _ = writeln!(text, "verdict: {}", if zero { "zero" } else { "nonzero" });
    if zero {
        let _ = writeln!(text, "class = {}", classify(&p.lambda));
    }
    let out = CheckOut {
        instance: &inst.name,
        lambda: p.lambda,
        mu: p.mu,
        potential: p.potential,
        residual: p.residual,
        is_zero: zero,
    };
    (out, text)
}

// theorems

fn theorem_text(out: &mut String, r: &TheoremReport) {
    let hyp = if r.hypothesis_holds { "holds" } else { "fails" };
    let _ = writeln!(out, "{}: hypothesis {hyp}, conclusion {}", r.id, r.conclusion_holds);
    let witness: Vec<String> = r.witness.entries().iter().map(|(k, v)| format!("{k} = {v}")).collect();
    let _ = writeln!(out, "  witness: {}", witness.join(", "));
    for n in &r.notes {
        let _ = writeln!(out, "  note: {n}");
    }
}

fn any_failure(reports: &[TheoremReport]) -> bool {
    reports.iter().any(|r| r.conclusion_holds == Verdict::Fails)
}

fn supplied(inst: &Instance) -> Option<SolitonParams> {
    inst.supplied_soliton()
}

fn run_command(cli: &Cli, fixture: Option<&str>) -> Result<Outcome> {
    let json = cli.format == Format::Json;
    let emit = |json_out: String, text_out: String, ok: bool| Outcome {
        stdout: if json { json_out + "\n" } else { text_out },
        code: if ok { 0 } else { 1 },
    };
    match &cli.command {
        Command::Validate(t) => {
            let loaded = load(t, fixture)?;
            let (out, text) = validate(&loaded);
            let ok = out.valid;
            Ok(emit(to_json(&out), text, ok))
        }
        Command::Geometry(t) => {
            let inst = load(t, fixture)?.instance()?;
            let (out, text) = geometry(&inst);
            Ok(emit(to_json(&out), text, out.holds()))
        }
        Command::Detect(t) => {
            let inst = load(t, fixture)?.instance()?;
            let (out, text) = detect(&inst);
            Ok(emit(to_json(&out), text, out.holds()))
        }
        Command::Soliton(SolitonCommand::Solve { target, potential }) => {
            let inst = load(target, fixture)?.instance()?;
            let v = default_potential(&inst, potential.as_deref())?;
            let (out, text) = solve(&inst, v);
            let ok = matches!(out, SolveOut::Solved { .. });
            Ok(emit(to_json(&out), text, ok))
        }
        Command::Soliton(SolitonCommand::Check { target, lambda, mu, potential }) => {
            let inst = load(target, fixture)?.instance()?;
            let from_manifest = inst.soliton.clone();
            let pick = |flag: &Option<String>, manifest: Option<Rational>, name: &str| -> Result<Rational> {
                match (flag, manifest) {
                    (Some(text), _) => parse_rational(text),
                    (None, Some(v)) => Ok(v),
                    (None, None) => Err(Error::Parse(format!("--{name} is required"))),
                }
            };
            let l = pick(lambda, from_manifest.as_ref().map(|s| s.lambda.clone()), "lambda")?;
            let m = pick(mu, from_manifest.as_ref().map(|s| s.mu.clone()), "mu")?;
            let v = default_potential(&inst, potential.as_deref())?;
            let (out, text) = check(&inst, l, m, v);
            let ok = out.is_zero;
            Ok(emit(to_json(&out), text, ok))
        }
        Command::Theorems { target, id } => {
            let id = id.as_deref().map(str::parse::<TheoremId>).transpose()?;
            let inst = load(target, fixture)?.instance()?;
            let sol = supplied(&inst);
            match id {
                Some(id) => {
                    let r = AuditContext::new(&inst.geom, &inst.acd, sol.as_ref()).audit(id);
                    let mut text = String::new();
                    theorem_text(&mut text, &r);
                    let ok = r.conclusion_holds != Verdict::Fails;
                    Ok(emit(to_json(&r), text, ok))
                }
                None => {
                    let reports = run_all(&inst.geom, &inst.acd, sol.as_ref());
                    let ok = !any_failure(&reports);
                    let summary = AuditSummary { instance: inst.name.clone(), reports };
                    let mut text = format!("instance: {}\n", inst.name);
                    for r in &summary.reports {
                        theorem_text(&mut text, r);
                    }
                    Ok(emit(to_json(&summary), text, ok))
                }
            }
        }
        Command::Report(t) => {
            let loaded = load(t, fixture)?;
            let (v_out, v_text) = validate(&loaded);
            if !v_out.valid {
                return Ok(emit(to_json(&v_out), v_text, false));
            }
            let inst = loaded.instance()?;
            let (g_out, g_text) = geometry(&inst);
            let (d_out, d_text) = detect(&inst);
            let (s_out, s_text) = solve(&inst, inst.acd.xi().clone());
            let sol = supplied(&inst);
            let reports = run_all(&inst.geom, &inst.acd, sol.as_ref());
            let ok = g_out.holds() && !any_failure(&reports);

            #[derive(Serialize)]
            struct ReportOut<'a> {
                instance: &'a str,
                validation: &'a ValidateOut<'a>,
                geometry: &'a GeometryOut<'a>,
                detection: &'a DetectOut<'a>,
                soliton: &'a SolveOut,
                theorems: &'a [TheoremReport],
            }
            let out = ReportOut {
                instance: &inst.name,
                validation: &v_out,
                geometry: &g_out,
                detection: &d_out,
                soliton: &s_out,
                theorems: &reports,
            };
            let mut text = String::new();
            for (title, body) in [
                ("validation", v_text),
                ("geometry", g_text),
                ("detection", d_text),
                ("soliton along ξ", s_text),
            ] {
                let _ = writeln!(text, "== {title} ==");
                text.push_str(&body);
            }
            let _ = writeln!(text, "== theorems ==");
            for r in &reports {
                theorem_text(&mut text, r);
            }
            Ok(emit(to_json(&out), text, ok))
        }
    }
}

/// Parses `args` (program name first) and runs the command, writing to the
/// given streams. Returns the process exit code.
pub fn run<I, T>(args: I, fixture: Option<&str>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    match run_command(&cli, fixture) {
        Ok(outcome) => {
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if let Error::Manifest(items) = &e {
                for item in items {
                    let _ = writeln!(stderr, "  {item}");
                }
            }
            2
        }
    }
}

/// Entry point for the binary: process arguments, environment and standard
/// streams.
pub fn main_entry() -> i32 {
    let fixture = std::env::var(FIXTURE_ENV).ok();
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    run(std::env::args_os(), fixture.as_deref(), &mut stdout, &mut stderr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str], fixture: Option<&str>) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["sasaki-audit"];
        full.extend_from_slice(args);
        let code = run(full, fixture, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn geometry_text_on_hyp() {
        let (code, out, _) = run_capture(&["geometry"], Some("hyp"));
        assert_eq!(code, 0);
        assert!(out.contains("S[3][3] = -8"));
        assert!(out.contains("r = -24"));
        assert!(out.contains("R(e1,e2)e2 = -4·e1"));
        assert!(out.contains("note: reference value r = -8 differs from computed -24"));
    }

    #[test]
    fn soliton_solve_text_on_hyp() {
        let (code, out, _) = run_capture(&["soliton", "solve"], Some("hyp"));
        assert_eq!(code, 0);
        assert!(out.contains("lambda = -2, mu = -2, class = shrinking"));
    }

    #[test]
    fn soliton_check_and_no_solution() {
        let (code, out, _) = run_capture(&["soliton", "check", "--lambda", "-2", "--mu", "-2"], Some("hyp"));
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("verdict: zero"));
        let (code, _, _) = run_capture(&["soliton", "check", "--lambda", "0", "--mu", "0"], Some("su2(1)"));
        assert_eq!(code, 1);
        let (code, out, _) = run_capture(&["soliton", "solve", "--potential", "1,0,0"], Some("hyp"));
        assert_eq!(code, 1);
        assert!(out.contains("no_solution"));
    }

    #[test]
    fn theorem_json_single() {
        let (code, out, _) = run_capture(&["theorems", "--id", "T5.1", "--format", "json"], Some("hyp"));
        assert_eq!(code, 0);
        assert!(out.starts_with(r#"{"id":"T5.1","hypothesis_holds":true,"conclusion_holds":true,"#));
    }

    #[test]
    fn input_errors_exit_two() {
        assert_eq!(run_capture(&["geometry"], None).0, 2);
        assert_eq!(run_capture(&["geometry"], Some("nope")).0, 2);
        assert_eq!(run_capture(&["theorems", "--id", "T0.0"], Some("hyp")).0, 2);
        assert_eq!(run_capture(&["frobnicate"], Some("hyp")).0, 2);
        assert_eq!(run_capture(&["geometry", "/nonexistent/m.json"], None).0, 2);
        assert_eq!(run_capture(&["soliton", "check"], Some("hyp")).0, 2);
    }

    #[test]
    fn detect_and_validate() {
        let (code, out, _) = run_capture(&["detect"], Some("su2(1)"));
        assert_eq!(code, 0);
        assert!(out.contains("alpha = 1, beta = 0, kind = alpha_sasakian"));
        let (code, out, _) = run_capture(&["validate", "--format", "json"], Some("abl"));
        assert_eq!(code, 0);
        assert!(out.contains(r#""valid":true"#));
    }
}
