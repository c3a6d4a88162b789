//! Parse a manifest and print its geometry summary.
//!
//! `cargo run --example load_manifest -- crates/core/manifests/ken.json`

use sasaki_audit::contact::detect_alpha_beta;
use sasaki_audit::manifest::parse_manifest;
use sasaki_audit::soliton::solve_eta_einstein;

fn main() -> sasaki_audit::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/manifests/hyp.json").into());
    let text = std::fs::read_to_string(&path)?;
    let inst = parse_manifest(&text)?.into_instance(&path)?;
    println!("{}: r = {}", inst.name, inst.geom.scalar_curvature());
    println!("{:?}", detect_alpha_beta(&inst.geom, &inst.acd));
    match solve_eta_einstein(&inst.geom, &inst.acd, inst.acd.xi()) {
        Some(s) => println!("lambda = {}, mu = {}, class = {}", s.lambda, s.mu, s.class()),
        None => println!("no_solution"),
    }

    let broken = text.replace("\"dimension\": 3", "\"dimension\": 4");
    if let Err(e) = parse_manifest(&broken) {
        println!("rejected: {e}");
    }
    Ok(())
}
