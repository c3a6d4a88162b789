//! Acceptance criteria 1-11, exact (tolerance 0). Prints one PASS/FAIL line
//! per criterion and exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sasaki_audit::audit::{audit, TheoremId, Verdict};
use sasaki_audit::conditions::{
    codazzi_check, cyclic_parallel_check, einstein_semisymmetry, einstein_tensor, r_xi_dot_s,
    s_wedge_dot_r, torse_forming_decompose, w2_tensor, TorseFormingDecomposition,
};
use sasaki_audit::contact::{detect_alpha_beta, validate_almost_contact, verify_canonical_identities};
use sasaki_audit::fixtures::{e3, fixture_library, Fixture};
use sasaki_audit::frame::identities::{
    first_bianchi, metric_compatible, pair_symmetry, ricci_symmetric, second_bianchi, torsion_free,
    trace_consistency,
};
use sasaki_audit::frame::{curvature_by_components, koszul_connection, FrameMetric, Sym2Tensor};
use sasaki_audit::reference::{discrepancy_notes, worked_example_comparison};
use sasaki_audit::scalar::{mat_is_zero, vec_from_ints, vec_is_zero};
use sasaki_audit::soliton::{check_scalar_identities, solve_eta_einstein, SolitonClass};
use sasaki_audit::Rational;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(n: i64) -> Rational {
    Rational::int(n)
}

fn criterion_1() -> Outcome {
    let gamma = koszul_connection(&Fixture::Hyp.constants(), &FrameMetric::identity()).map_err(|e| e.to_string())?;
    let expected = [
        [[0, 0, 2], [0, 0, 0], [-2, 0, 0]],
        [[0, 0, 0], [0, 0, 2], [0, -2, 0]],
        [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
    ];
    for i in 0..3 {
        for j in 0..3 {
            ensure!(gamma.get(i, j) == &vec_from_ints(expected[i][j]), "∇_e{} e{} = {:?}", i + 1, j + 1, gamma.get(i, j));
        }
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let inst = Fixture::Hyp.instance();
    let g = &inst.geom;
    let r = g.curvature();
    ensure!(r.get(0, 1, 1) == &vec_from_ints([-4, 0, 0]), "R(e1,e2)e2 = {:?}", r.get(0, 1, 1));
    ensure!(r.get(0, 2, 2) == &vec_from_ints([-4, 0, 0]), "R(e1,e3)e3 = {:?}", r.get(0, 2, 2));
    ensure!(g.ricci_tensor().get(2, 2) == &q(-8), "S(e3,e3) = {}", g.ricci_tensor().get(2, 2));
    let oracle = curvature_by_components(g.connection(), g.constants());
    ensure!(&oracle == r, "curvature routes disagree");
    let minus_eight_g = Sym2Tensor::from_metric(&FrameMetric::identity()).scaled(&q(-8));
    ensure!(g.ricci_tensor() == &minus_eight_g, "S is not -8g");
    ensure!(g.scalar_curvature() == &q(-24), "r = {}", g.scalar_curvature());
    let rows = worked_example_comparison(g, &inst.acd).ok_or("no reference comparison on hyp")?;
    let notes = discrepancy_notes(&rows);
    for wanted in [
        "reference value S(e1,e1) = 0 differs from computed -8",
        "reference value r = -8 differs from computed -24",
    ] {
        ensure!(notes.iter().any(|n| n == wanted), "missing note {wanted:?}");
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let inst = Fixture::Hyp.instance();
    let s = solve_eta_einstein(&inst.geom, &inst.acd, &e3()).ok_or("no_solution on hyp")?;
    ensure!((s.lambda.clone(), s.mu.clone()) == (q(-2), q(-2)), "(λ, μ) = ({}, {})", s.lambda, s.mu);
    ensure!(s.residual.is_zero(), "nonzero residual");
    let cls = detect_alpha_beta(&inst.geom, &inst.acd).class().cloned().ok_or("not trans-Sasakian")?;
    ensure!((cls.alpha.clone(), cls.beta.clone()) == (q(0), q(-2)), "(α, β) = ({}, {})", cls.alpha, cls.beta);
    ensure!(s.lambda == cls.alpha2_minus_beta2() - &cls.beta, "λ = (α²-β²) - β fails");
    ensure!(s.class() == SolitonClass::Shrinking, "class {}", s.class());
    Ok(())
}

fn criterion_4() -> Outcome {
    let inst = Fixture::Su2(q(1)).instance();
    let s = solve_eta_einstein(&inst.geom, &inst.acd, &e3()).ok_or("no_solution on su2(1)")?;
    ensure!((s.lambda.clone(), s.mu.clone()) == (q(1), q(0)), "(λ, μ) = ({}, {})", s.lambda, s.mu);
    ensure!(s.class() == SolitonClass::Expanding, "class {}", s.class());
    ensure!(inst.geom.scalar_curvature() == &q(6), "r = {}", inst.geom.scalar_curvature());
    let cls = detect_alpha_beta(&inst.geom, &inst.acd).class().cloned().ok_or("not trans-Sasakian")?;
    let checks = check_scalar_identities(&inst.geom, &cls, &s.lambda, &s.mu);
    for c in &checks {
        ensure!(c.holds, "{c}");
    }
    ensure!(cls.alpha.square() > &cls.beta * (&cls.beta + q(1)), "α² > β(β+1) does not hold");
    Ok(())
}

fn criterion_5() -> Outcome {
    let inst = Fixture::Abl.instance();
    let g = &inst.geom;
    let s = solve_eta_einstein(g, &inst.acd, &e3()).ok_or("no_solution on abl")?;
    ensure!((s.lambda.clone(), s.mu.clone()) == (q(0), q(0)), "(λ, μ) = ({}, {})", s.lambda, s.mu);
    ensure!(s.class() == SolitonClass::Steady, "class {}", s.class());
    for i in 0..3 {
        for j in 0..3 {
            ensure!(vec_is_zero(g.connection().get(i, j)), "Γ nonzero");
        }
    }
    ensure!(g.curvature().is_zero(), "R nonzero");
    ensure!(g.ricci_tensor().is_zero(), "S nonzero");
    ensure!(mat_is_zero(g.ricci_operator()), "Q nonzero");
    ensure!(g.scalar_curvature().is_zero(), "r nonzero");
    ensure!(w2_tensor(g).is_zero(), "W2 nonzero");
    ensure!(einstein_tensor(g).is_zero(), "E nonzero");
    ensure!(g.lie_derivative(&e3()).is_zero(), "L_ξ g nonzero");
    ensure!(s.residual.is_zero(), "residual nonzero");
    Ok(())
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a5a_2024);
    let mut count = 0;
    while count < 120 {
        let fixture = common::random_fixture(&mut rng);
        let change = common::random_change(&mut rng);
        let (geom, acd) = common::relabeled(&fixture, &change);
        ensure!(validate_almost_contact(&acd, geom.metric()).is_valid(), "{fixture}: relabeled φ invalid");
        for report in [
            torsion_free(&geom),
            metric_compatible(&geom),
            first_bianchi(&geom),
            second_bianchi(&geom),
            pair_symmetry(&geom),
            ricci_symmetric(&geom),
            trace_consistency(&geom),
        ] {
            ensure!(report.holds, "{fixture} relabeled by {:?}: {report}", change.matrix());
        }
        count += 1;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cases: Vec<(String, _, _)> = fixture_library()
        .into_iter()
        .map(|f| {
            let inst = f.instance();
            (f.to_string(), inst.geom, inst.acd)
        })
        .collect();
    for _ in 0..20 {
        let f = common::random_fixture(&mut rng);
        let (g, a) = common::relabeled(&f, &common::random_change(&mut rng));
        cases.push((format!("{f} relabeled"), g, a));
    }
    let mut detected = 0;
    for (name, geom, acd) in &cases {
        if let Some(cls) = detect_alpha_beta(geom, acd).class() {
            detected += 1;
            for r in verify_canonical_identities(geom, acd, cls) {
                ensure!(r.holds, "{name}: {r}");
            }
        }
    }
    ensure!(detected == cases.len(), "detection failed on {} cases", cases.len() - detected);
    Ok(())
}

fn criterion_8() -> Outcome {
    for f in [Fixture::Hyp, Fixture::Su2(q(1))] {
        let inst = f.instance();
        let (g, a) = (&inst.geom, &inst.acd);
        for r in [r_xi_dot_s(g, a), codazzi_check(g), cyclic_parallel_check(g), einstein_semisymmetry(g), s_wedge_dot_r(g, a)] {
            ensure!(r.holds, "{f}: {r}");
        }
        let report = audit(TheoremId::T5_1, g, a, None);
        ensure!(report.hypothesis_holds, "{f}: T5.1 hypothesis fails");
        ensure!(report.conclusion_holds == Verdict::Holds, "{f}: T5.1 conclusion {}", report.conclusion_holds);
        let s = solve_eta_einstein(g, a, &e3()).ok_or("no_solution")?;
        let beta = detect_alpha_beta(g, a).class().ok_or("not trans-Sasakian")?.beta.clone();
        let predicted = q(6) * &s.lambda + q(6) * beta;
        ensure!(g.scalar_curvature() == &predicted, "{f}: r = {} vs 6λ+6β = {predicted}", g.scalar_curvature());
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let hyp = Fixture::Hyp.instance();
    let d = torse_forming_decompose(&hyp.geom, &e3()).map_err(|e| e.to_string())?;
    let expected = TorseFormingDecomposition { f: q(-2), gamma: vec_from_ints([0, 0, 2]) };
    ensure!(d.as_ref() == Some(&expected), "hyp: {d:?}");
    // γ = 2η with η = g(ξ, ·)
    ensure!(expected.gamma == hyp.acd.eta().clone().map(|x| x * q(2)), "γ is not 2η");
    let su2 = Fixture::Su2(q(1)).instance();
    let d = torse_forming_decompose(&su2.geom, &e3()).map_err(|e| e.to_string())?;
    ensure!(d.is_none(), "su2(1): {d:?}");
    Ok(())
}

fn criterion_10() -> Outcome {
    let kens = [q(-3), q(-2), q(-1), Rational::frac(1, 2), q(2)];
    let su2s = [Rational::frac(1, 2), q(1), q(3)];
    let cases = kens
        .iter()
        .map(|c| (Fixture::Ken(c.clone()), -(c * (c + q(1))), c.clone()))
        .chain(su2s.iter().map(|a| (Fixture::Su2(a.clone()), a.square(), q(0))));
    for (f, lambda, mu) in cases {
        let inst = f.instance();
        let s = solve_eta_einstein(&inst.geom, &inst.acd, &e3()).ok_or(format!("{f}: no_solution"))?;
        ensure!(s.lambda == lambda && s.mu == mu, "{f}: (λ, μ) = ({}, {})", s.lambda, s.mu);
        let cls = detect_alpha_beta(&inst.geom, &inst.acd).class().cloned().ok_or(format!("{f}: not trans-Sasakian"))?;
        ensure!(s.lambda == cls.alpha2_minus_beta2() - &cls.beta, "{f}: λ = (α²-β²) - β fails");
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_sasaki-audit");
    for f in fixture_library() {
        let name = f.to_string();
        let run = || {
            Command::new(bin)
                .args(["theorems", "--format", "json"])
                .env("SASAKI_AUDIT_FIXTURE", &name)
                .output()
                .expect("binary runs")
        };
        let (a, b) = (run(), run());
        ensure!(a.status.code() == Some(0) || a.status.code() == Some(1), "{name}: exit {:?}", a.status.code());
        ensure!(a.stdout == b.stdout, "{name}: output differs between runs");
        let doc: serde_json::Value = serde_json::from_slice(&a.stdout).map_err(|e| format!("{name}: {e}"))?;
        let reports = doc["reports"].as_array().ok_or(format!("{name}: no reports"))?;
        ensure!(reports.len() == 17, "{name}: {} reports", reports.len());
        if f == Fixture::Hyp {
            let t81 = reports.iter().find(|r| r["id"] == "T8.1").ok_or("no T8.1")?;
            ensure!(t81["hypothesis_holds"] == true, "T8.1 hypothesis {}", t81["hypothesis_holds"]);
            ensure!(t81["conclusion_holds"] == false, "T8.1 conclusion {}", t81["conclusion_holds"]);
            ensure!(t81["witness"]["r"] == "-24", "T8.1 r {}", t81["witness"]["r"]);
            ensure!(t81["witness"]["predicted_r"] == "-28", "T8.1 predicted {}", t81["witness"]["predicted_r"]);
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("connection table of the hyperbolic example", criterion_1),
        ("curvature and Ricci of the hyperbolic example", criterion_2),
        ("soliton solve on HYP", criterion_3),
        ("soliton solve on SU2(1)", criterion_4),
        ("abelian frame", criterion_5),
        ("structural identities on 120 relabeled instances", criterion_6),
        ("canonical trans-Sasakian identities", criterion_7),
        ("derivation conditions and T5.1", criterion_8),
        ("torse-forming decomposition", criterion_9),
        ("λ identity across parameter samples", criterion_10),
        ("audit determinism and the T8.1 finding", criterion_11),
    ];
    let mut failed = 0;
    for (n, (label, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {label}", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {label}: {why}", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
