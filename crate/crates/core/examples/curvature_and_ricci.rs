//! Curvature, Ricci tensor and scalar curvature, with the structural
//! identities checked on a non-orthonormal frame.

use sasaki_audit::fixtures::Fixture;
use sasaki_audit::frame::identities::check_frame_identities;
use sasaki_audit::frame::{FrameChange, FrameGeometry, FrameMetric};
use sasaki_audit::scalar::{format_vector, mat_from_ints};

fn main() -> sasaki_audit::Result<()> {
    let geom = Fixture::Hyp.instance().geom;
    for (i, j, k, v) in geom.curvature().nonzero_entries() {
        println!("R(e{},e{})e{} = {}", i + 1, j + 1, k + 1, format_vector(v));
    }
    println!("S = {:?}", geom.ricci_tensor().matrix().clone().map(|row| row.map(|x| x.to_string())));
    println!("r = {}", geom.scalar_curvature());

    // same manifold, skewed frame
    let change = FrameChange::new(mat_from_ints([[1, 1, 0], [0, 1, 0], [0, 2, 1]])).expect("invertible");
    let skewed = FrameGeometry::new(
        change.constants(geom.constants()),
        change.metric(&FrameMetric::identity())?,
    )?;
    println!("r in the skewed frame = {}", skewed.scalar_curvature());
    for report in check_frame_identities(&skewed) {
        println!("{report}");
    }
    Ok(())
}
