mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sasaki_audit::audit::{run_all, Verdict};
use sasaki_audit::conditions::{
    antisymmetry_in_first_pair, c_bochner_tensor, torse_forming_decompose, w2_tensor,
};
use sasaki_audit::contact::detect_alpha_beta;
use sasaki_audit::fixtures::{e3, Fixture};
use sasaki_audit::scalar::vec_scale;
use sasaki_audit::soliton::{collinear_solve, solve_eta_einstein, CollinearConfig};
use sasaki_audit::Rational;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=4).prop_map(|(p, q)| Rational::frac(p, q))
}

fn fixture() -> impl Strategy<Value = Fixture> {
    prop_oneof![rational().prop_map(Fixture::Ken), rational().prop_map(Fixture::Su2)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn detection_survives_relabeling(f in fixture(), seed in any::<u64>()) {
        let inst = f.instance();
        let before = detect_alpha_beta(&inst.geom, &inst.acd);
        let change = common::random_change(&mut ChaCha8Rng::seed_from_u64(seed));
        let (geom, acd) = common::relabeled(&f, &change);
        let after = detect_alpha_beta(&geom, &acd);
        prop_assert!(before.class().is_some());
        prop_assert_eq!(before.class(), after.class());
    }

    #[test]
    fn solve_is_frame_independent(f in fixture(), seed in any::<u64>()) {
        let inst = f.instance();
        let s = solve_eta_einstein(&inst.geom, &inst.acd, &e3()).unwrap();
        let change = common::random_change(&mut ChaCha8Rng::seed_from_u64(seed));
        let (geom, acd) = common::relabeled(&f, &change);
        let t = solve_eta_einstein(&geom, &acd, acd.xi()).unwrap();
        prop_assert!(t.residual.is_zero());
        prop_assert_eq!((s.lambda, s.mu), (t.lambda, t.mu));
    }

    #[test]
    fn collinear_fit_matches_solution(f in fixture(), b in rational()) {
        prop_assume!(!b.is_zero());
        let inst = f.instance();
        let cls = detect_alpha_beta(&inst.geom, &inst.acd).class().cloned().unwrap();
        let sol = collinear_solve(&inst.geom, &inst.acd, &cls, &CollinearConfig { b }).unwrap();
        prop_assert!(sol.params.residual.is_zero());
        prop_assert!(sol.ricci_form_holds);
        prop_assert!(sol.scalar_check.holds);
    }

    // V = bξ moves (λ, μ) by ((1-b)β, (b-1)β)
    #[test]
    fn scaling_the_potential_shifts_lambda_and_mu(f in fixture(), b in rational()) {
        let inst = f.instance();
        let beta = detect_alpha_beta(&inst.geom, &inst.acd).class().unwrap().beta.clone();
        let unit = solve_eta_einstein(&inst.geom, &inst.acd, &e3()).unwrap();
        let scaled = solve_eta_einstein(&inst.geom, &inst.acd, &vec_scale(&b, &e3())).unwrap();
        let shift = (&b - Rational::one()) * &beta;
        prop_assert_eq!(scaled.lambda, &unit.lambda - &shift);
        prop_assert_eq!(scaled.mu, &unit.mu + &shift);
    }

    #[test]
    fn w2_and_bochner_are_antisymmetric(f in fixture(), seed in any::<u64>()) {
        let change = common::random_change(&mut ChaCha8Rng::seed_from_u64(seed));
        let (geom, acd) = common::relabeled(&f, &change);
        let w2 = antisymmetry_in_first_pair("W2", &w2_tensor(&geom));
        let b = antisymmetry_in_first_pair("B", &c_bochner_tensor(&geom, &acd));
        prop_assert!(w2.holds, "{:?}", w2.worst);
        prop_assert!(b.holds, "{:?}", b.worst);
    }

    #[test]
    fn reeb_field_torse_forming_iff_alpha_vanishes(f in fixture()) {
        let inst = f.instance();
        let cls = detect_alpha_beta(&inst.geom, &inst.acd).class().cloned().unwrap();
        let d = torse_forming_decompose(&inst.geom, &e3()).unwrap();
        prop_assert_eq!(d.is_some(), cls.alpha.is_zero());
        if let Some(d) = d {
            prop_assert_eq!(d.f, cls.beta.clone());
            prop_assert_eq!(d.gamma, vec_scale(&-cls.beta, inst.acd.eta()));
        }
    }

    #[test]
    fn audit_is_deterministic_and_inapplicable_exactly_without_hypothesis(f in fixture()) {
        let inst = f.instance();
        let first = run_all(&inst.geom, &inst.acd, None);
        let second = run_all(&inst.geom, &inst.acd, None);
        prop_assert_eq!(serde_json::to_string(&first).unwrap(), serde_json::to_string(&second).unwrap());
        prop_assert_eq!(first.len(), 17);
        for r in &first {
            prop_assert_eq!(r.conclusion_holds == Verdict::Inapplicable, !r.hypothesis_holds, "{}", r.id);
        }
    }
}
