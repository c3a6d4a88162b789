//! Trans-Sasakian type detection across the fixture library.

use sasaki_audit::contact::{detect_alpha_beta, verify_canonical_identities, Detection};
use sasaki_audit::fixtures::fixture_library;

fn main() {
    for fixture in fixture_library() {
        let inst = fixture.instance();
        match detect_alpha_beta(&inst.geom, &inst.acd) {
            Detection::TransSasakian(cls) => {
                let ok = verify_canonical_identities(&inst.geom, &inst.acd, &cls)
                    .iter()
                    .all(|r| r.holds);
                println!(
                    "{fixture}: alpha = {}, beta = {}, {} (canonical identities {})",
                    cls.alpha,
                    cls.beta,
                    cls.kind,
                    if ok { "hold" } else { "fail" }
                );
            }
            Detection::NotTransSasakian { reason } => println!("{fixture}: {reason}"),
        }
    }
}
