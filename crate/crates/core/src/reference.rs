//! Reference values for the hyperbolic worked example, set against what the
//! engine computes on the same data.

use serde::Serialize;

use crate::contact::AlmostContactData;
use crate::fixtures::{e3, standard_phi, Fixture};
use crate::frame::FrameGeometry;
use crate::scalar::{basis_vec, format_vector, vec_from_ints, Rational, Vec3};
use crate::soliton::solve_eta_einstein;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReferenceValue {
    pub quantity: String,
    pub reference: String,
    pub computed: String,
    pub agrees: bool,
}

impl ReferenceValue {
    fn new(quantity: impl Into<String>, reference: String, computed: String) -> Self {
        let agrees = reference == computed;
        ReferenceValue { quantity: quantity.into(), reference, computed, agrees }
    }
}

/// True when the instance is the hyperbolic frame with orthonormal metric,
/// the standard φ and `ξ = e3`.
pub fn is_worked_example(geom: &FrameGeometry, acd: &AlmostContactData) -> bool {
    geom.constants() == &Fixture::Hyp.constants()
        && geom.metric().is_identity()
        && acd.phi() == &standard_phi()
        && acd.xi() == &e3()
}

fn vector_row(label: String, reference: [i64; 3], computed: &Vec3) -> ReferenceValue {
    ReferenceValue::new(label, format_vector(&vec_from_ints(reference)), format_vector(computed))
}

/// Row-by-row comparison; `None` unless [`is_worked_example`] holds.
pub fn worked_example_comparison(
    geom: &FrameGeometry,
    acd: &AlmostContactData,
) -> Option<Vec<ReferenceValue>> {
    if !is_worked_example(geom, acd) {
        return None;
    }
    let mut rows = Vec::new();
    let connection: [[[i64; 3]; 3]; 3] = [
        [[0, 0, 2], [0, 0, 0], [-2, 0, 0]],
        [[0, 0, 0], [0, 0, 2], [0, -2, 0]],
        [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
    ];
    for (i, row) in connection.iter().enumerate() {
        for (j, value) in row.iter().enumerate() {
            let label = format!("∇_e{} e{}", i + 1, j + 1);
            rows.push(vector_row(label, *value, geom.connection().get(i, j)));
        }
    }
    let curvature: [((usize, usize, usize), [i64; 3]); 6] = [
        ((0, 1, 1), [-4, 0, 0]),
        ((0, 2, 2), [-4, 0, 0]),
        ((1, 2, 2), [0, -4, 0]),
        ((2, 0, 0), [0, -4, 0]),
        ((2, 1, 1), [0, 4, 0]),
        ((1, 0, 0), [0, 0, 4]),
    ];
    for ((i, j, k), value) in curvature {
        let label = format!("R(e{},e{})e{}", i + 1, j + 1, k + 1);
        rows.push(vector_row(label, value, geom.curvature().get(i, j, k)));
    }
    for (k, value) in [(0, 0), (1, 0), (2, -8)] {
        let computed = geom.ricci_tensor().get(k, k).to_string();
        rows.push(ReferenceValue::new(
            format!("S(e{0},e{0})", k + 1),
            value.to_string(),
            computed,
        ));
    }
    rows.push(ReferenceValue::new("r", "-8".into(), geom.scalar_curvature().to_string()));
    let solved = solve_eta_einstein(geom, acd, &basis_vec(2));
    let (lambda, mu) = match &solved {
        Some(s) => (s.lambda.to_string(), s.mu.to_string()),
        None => ("no_solution".into(), "no_solution".into()),
    };
    rows.push(ReferenceValue::new("lambda", Rational::int(-2).to_string(), lambda));
    rows.push(ReferenceValue::new("mu", Rational::int(6).to_string(), mu));
    Some(rows)
}

/// One line per disagreeing row.
pub fn discrepancy_notes(rows: &[ReferenceValue]) -> Vec<String> {
    rows.iter()
        .filter(|r| !r.agrees)
        .map(|r| format!("reference value {} = {} differs from computed {}", r.quantity, r.reference, r.computed))
        .collect()
}
