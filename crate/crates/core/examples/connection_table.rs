//! Levi-Civita connection of the hyperbolic frame from its brackets alone.

use sasaki_audit::fixtures::Fixture;
use sasaki_audit::frame::{koszul_connection, FrameMetric};
use sasaki_audit::scalar::format_vector;

fn main() -> sasaki_audit::Result<()> {
    let constants = Fixture::Hyp.constants();
    let gamma = koszul_connection(&constants, &FrameMetric::identity())?;
    for i in 0..3 {
        for j in 0..3 {
            println!("∇_e{} e{} = {}", i + 1, j + 1, format_vector(gamma.get(i, j)));
        }
    }
    Ok(())
}
