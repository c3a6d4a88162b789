//! (α, β), (λ, μ) and r do not depend on the frame; relabel a KEN frame by
//! a rational rotation and compare.

use sasaki_audit::contact::detect_alpha_beta;
use sasaki_audit::fixtures::Fixture;
use sasaki_audit::frame::{FrameChange, FrameGeometry};
use sasaki_audit::scalar::{identity_mat, inverse3, mat_add, mat_mul, mat_sub, Mat3};
use sasaki_audit::soliton::solve_eta_einstein;
use sasaki_audit::Rational;

/// Cayley transform (I - A)(I + A)⁻¹ of a skew matrix: an exact rotation.
fn cayley(a: Rational, b: Rational, c: Rational) -> Mat3 {
    let z = Rational::zero();
    let skew = [
        [z.clone(), a.clone(), b.clone()],
        [-a, z.clone(), c.clone()],
        [-b, -c, z],
    ];
    let i = identity_mat();
    let inv = inverse3(&mat_add(&i, &skew)).expect("I + skew is invertible");
    mat_mul(&mat_sub(&i, &skew), &inv)
}

fn main() -> sasaki_audit::Result<()> {
    let inst = Fixture::Ken(Rational::frac(-3, 2)).instance();
    let change = FrameChange::new(cayley(Rational::frac(1, 2), Rational::int(2), Rational::frac(-1, 3)))
        .expect("rotation is invertible");
    let metric = change.metric(inst.geom.metric())?;
    let geom = FrameGeometry::new(change.constants(inst.geom.constants()), metric.clone())?;
    let acd = inst.acd.in_frame(&change, &metric);

    for (label, g, a) in [("original", &inst.geom, &inst.acd), ("rotated", &geom, &acd)] {
        let cls = detect_alpha_beta(g, a);
        let s = solve_eta_einstein(g, a, a.xi()).expect("soliton along ξ");
        println!(
            "{label}: r = {}, {:?}, lambda = {}, mu = {}",
            g.scalar_curvature(),
            cls.class().map(|c| (c.alpha.to_string(), c.beta.to_string())),
            s.lambda,
            s.mu
        );
    }
    Ok(())
}
