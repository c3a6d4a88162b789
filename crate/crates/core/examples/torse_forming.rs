//! Torse-forming decomposition ∇_X V = fX + γ(X)V.

use sasaki_audit::conditions::torse_forming_decompose;
use sasaki_audit::fixtures::{e3, fixture_library};
use sasaki_audit::scalar::vec_from_ints;

fn main() -> sasaki_audit::Result<()> {
    for fixture in fixture_library() {
        let inst = fixture.instance();
        match torse_forming_decompose(&inst.geom, &e3())? {
            Some(d) => println!(
                "{fixture}: ξ torse-forming, f = {}, γ = ({}, {}, {})",
                d.f, d.gamma[0], d.gamma[1], d.gamma[2]
            ),
            None => println!("{fixture}: ξ not torse-forming"),
        }
    }
    let abl = fixture_library()[1].instance();
    let d = torse_forming_decompose(&abl.geom, &vec_from_ints([1, 0, 0]))?;
    println!("abl, V = e1: {d:?}");
    Ok(())
}
