//! Derivation-type curvature conditions and the W₂ / C-Bochner tensors.

use sasaki_audit::conditions::{
    antisymmetry_in_first_pair, bochner_xi_dot_s, c_bochner_tensor, codazzi_check,
    cyclic_parallel_check, einstein_semisymmetry, r_xi_dot_s, s_wedge_dot_r, w2_tensor, w2_xi_dot_s,
};
use sasaki_audit::fixtures::{fixture_library, Fixture};
use sasaki_audit::scalar::format_vector;

fn main() {
    for fixture in fixture_library() {
        let inst = fixture.instance();
        let (g, a) = (&inst.geom, &inst.acd);
        println!("{fixture}");
        for report in [
            r_xi_dot_s(g, a),
            w2_xi_dot_s(g, a),
            bochner_xi_dot_s(g, a),
            einstein_semisymmetry(g),
            s_wedge_dot_r(g, a),
            codazzi_check(g),
            cyclic_parallel_check(g),
        ] {
            println!("  {report}");
        }
    }

    let abl = Fixture::Abl.instance();
    let b = c_bochner_tensor(&abl.geom, &abl.acd);
    println!("abl: B(e1,e2)e2 = {}", format_vector(b.get(0, 1, 1)));
    println!("abl: B(ξ,e1)e1 = {}", format_vector(b.get(2, 0, 0)));
    println!("{}", antisymmetry_in_first_pair("B antisymmetric", &b));
    println!("{}", antisymmetry_in_first_pair("W2 antisymmetric", &w2_tensor(&abl.geom)));
}
