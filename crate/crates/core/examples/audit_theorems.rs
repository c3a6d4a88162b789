//! Theorem audit on a fixture named on the command line (default `hyp`).

use sasaki_audit::audit::{run_all, Verdict};
use sasaki_audit::fixtures::Fixture;

fn main() -> sasaki_audit::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "hyp".into());
    let inst = name.parse::<Fixture>()?.instance();
    for r in run_all(&inst.geom, &inst.acd, None) {
        let verdict = match r.conclusion_holds {
            Verdict::Holds => "holds",
            Verdict::Fails => "FAILS",
            Verdict::Inapplicable => "n/a",
        };
        println!("{:5} {verdict}", r.id.as_str());
        for n in &r.notes {
            println!("      {n}");
        }
    }
    Ok(())
}
