//! Exact (λ, μ) solves along ξ and along 2ξ, plus the η-Ricci shift.

use sasaki_audit::contact::detect_alpha_beta;
use sasaki_audit::fixtures::{fixture_library, Fixture};
use sasaki_audit::soliton::{collinear_solve, eta_ricci_residual, solve_eta_einstein, CollinearConfig};
use sasaki_audit::Rational;

fn main() {
    for fixture in fixture_library() {
        let inst = fixture.instance();
        match solve_eta_einstein(&inst.geom, &inst.acd, inst.acd.xi()) {
            Some(s) => println!("{fixture}: lambda = {}, mu = {}, class = {}", s.lambda, s.mu, s.class()),
            None => println!("{fixture}: no_solution"),
        }
    }

    let inst = Fixture::Hyp.instance();
    let cls = detect_alpha_beta(&inst.geom, &inst.acd).class().cloned().expect("trans-Sasakian");
    let cfg = CollinearConfig { b: Rational::int(2) };
    if let Some(sol) = collinear_solve(&inst.geom, &inst.acd, &cls, &cfg) {
        println!(
            "hyp, V = 2ξ: lambda = {}, mu = {}, S = ({})g + ({})η⊗η matches: {}",
            sol.params.lambda, sol.params.mu, sol.expected_fit.a, sol.expected_fit.b, sol.ricci_form_holds
        );
    }

    let su2 = Fixture::Su2(Rational::one()).instance();
    let zero = eta_ricci_residual(&su2.geom, &su2.acd, &Rational::int(-2), &Rational::zero(), su2.acd.xi());
    println!("su2(1) η-Ricci residual at (-2, 0) is zero: {}", zero.is_zero());

    let off_axis = solve_eta_einstein(&inst.geom, &inst.acd, &[Rational::one(), Rational::zero(), Rational::zero()]);
    println!("hyp, V = e1: {}", if off_axis.is_some() { "solved" } else { "no_solution" });
}
