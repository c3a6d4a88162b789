//! Structural identities every valid frame geometry must satisfy exactly.

use crate::report::ConditionReport;
use crate::scalar::{basis_vec, vec_add, vec_sub, zero_vec, Rational, Vec3, DIM};

use super::{cov_deriv_sym2, curvature_by_components, ricci_matrix, FrameGeometry, Sym2Tensor};

fn triples() -> impl Iterator<Item = (usize, usize, usize)> {
    (0..DIM).flat_map(|i| (0..DIM).flat_map(move |j| (0..DIM).map(move |k| (i, j, k))))
}

/// `∇_{e_i}e_j - ∇_{e_j}e_i - [e_i, e_j] = 0`
pub fn torsion_free(geom: &FrameGeometry) -> ConditionReport {
    let (gamma, c) = (geom.connection(), geom.constants());
    let mut report = ConditionReport::evaluate("torsion_free");
    for (i, j, k) in triples() {
        let v = &gamma.get(i, j)[k] - &gamma.get(j, i)[k] - c.get(i, j, k);
        report.component(&[i, j, k], v);
    }
    report.finish()
}

/// `∇g = 0`
pub fn metric_compatible(geom: &FrameGeometry) -> ConditionReport {
    let g = Sym2Tensor::from_metric(geom.metric());
    let d = cov_deriv_sym2(&g, geom.connection());
    let mut report = ConditionReport::evaluate("metric_compatible");
    for (i, j, k) in triples() {
        report.component(&[i, j, k], d[i][j][k].clone());
    }
    report.finish()
}

/// `R(X,Y) = -R(Y,X)`
pub fn curvature_antisymmetry(geom: &FrameGeometry) -> ConditionReport {
    let r = geom.curvature();
    let mut report = ConditionReport::evaluate("curvature_antisymmetry");
    for (i, j, k) in triples() {
        for l in 0..DIM {
            report.component(&[i, j, k, l], r.component(i, j, k, l) + r.component(j, i, k, l));
        }
    }
    report.finish()
}

/// `R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0`
pub fn first_bianchi(geom: &FrameGeometry) -> ConditionReport {
    let r = geom.curvature();
    let mut report = ConditionReport::evaluate("first_bianchi");
    for (i, j, k) in triples() {
        for l in 0..DIM {
            let v = r.component(i, j, k, l) + r.component(j, k, i, l) + r.component(k, i, j, l);
            report.component(&[i, j, k, l], v);
        }
    }
    report.finish()
}

/// `(∇_{e_a}R)(e_b, e_c)e_d`, differentiating the (1,3) tensor with constant
/// components.
fn nabla_curvature(geom: &FrameGeometry, a: usize, b: usize, c: usize, d: usize) -> Vec3 {
    let (gamma, r) = (geom.connection(), geom.curvature());
    let ea = basis_vec(a);
    let (eb, ec, ed) = (basis_vec(b), basis_vec(c), basis_vec(d));
    let mut out = gamma.nabla(&ea, r.get(b, c, d));
    out = vec_sub(&out, &r.apply(gamma.get(a, b), &ec, &ed));
    out = vec_sub(&out, &r.apply(&eb, gamma.get(a, c), &ed));
    vec_sub(&out, &r.apply(&eb, &ec, gamma.get(a, d)))
}

/// Cyclic sum over `(a, b, c)` of `(∇_{e_a}R)(e_b, e_c)` vanishes.
pub fn second_bianchi(geom: &FrameGeometry) -> ConditionReport {
    let mut report = ConditionReport::evaluate("second_bianchi");
    for (a, b, c) in triples() {
        for d in 0..DIM {
            let sum = [
                nabla_curvature(geom, a, b, c, d),
                nabla_curvature(geom, b, c, a, d),
                nabla_curvature(geom, c, a, b, d),
            ]
            .iter()
            .fold(zero_vec(), |acc, v| vec_add(&acc, v));
            for (l, v) in sum.into_iter().enumerate() {
                report.component(&[a, b, c, d, l], v);
            }
        }
    }
    report.finish()
}

fn lowered(geom: &FrameGeometry, i: usize, j: usize, k: usize, l: usize) -> Rational {
    geom.metric().inner(geom.curvature().get(i, j, k), &basis_vec(l))
}

/// `R(X,Y,Z,W) = R(Z,W,X,Y)` and skewness in the last pair for the (0,4) form.
pub fn pair_symmetry(geom: &FrameGeometry) -> ConditionReport {
    let mut report = ConditionReport::evaluate("pair_symmetry");
    for (i, j, k) in triples() {
        for l in 0..DIM {
            let rijkl = lowered(geom, i, j, k, l);
            report.component(&[i, j, k, l], &rijkl - lowered(geom, k, l, i, j));
            report.component(&[i, j, k, l], &rijkl + lowered(geom, i, j, l, k));
        }
    }
    report.finish()
}

pub fn ricci_symmetric(geom: &FrameGeometry) -> ConditionReport {
    let s = ricci_matrix(geom.curvature());
    let mut report = ConditionReport::evaluate("ricci_symmetric");
    for i in 0..DIM {
        for j in 0..DIM {
            report.component(&[i, j], &s[i][j] - &s[j][i]);
        }
    }
    report.finish()
}

/// `g(Qe_i, e_j) = S(e_i, e_j)`, `tr Q = r` and `g^{ij}S_ij = r`.
pub fn trace_consistency(geom: &FrameGeometry) -> ConditionReport {
    let ricci = geom.ricci();
    let g = geom.metric();
    let mut report = ConditionReport::evaluate("trace_consistency");
    for i in 0..DIM {
        let qe = geom.apply_ricci_operator(&basis_vec(i));
        for j in 0..DIM {
            report.component(&[i, j], g.inner(&qe, &basis_vec(j)) - ricci.s.get(i, j));
        }
    }
    report.component(&[], crate::scalar::trace(&ricci.q) - &ricci.r);
    report.component(&[], ricci.s.trace_with(g) - &ricci.r);
    report.finish()
}

/// Operator-route curvature equals index-contraction curvature.
pub fn curvature_routes_agree(geom: &FrameGeometry) -> ConditionReport {
    let alt = curvature_by_components(geom.connection(), geom.constants());
    let r = geom.curvature();
    let mut report = ConditionReport::evaluate("curvature_routes_agree");
    for (i, j, k) in triples() {
        for l in 0..DIM {
            report.component(&[i, j, k, l], r.component(i, j, k, l) - alt.component(i, j, k, l));
        }
    }
    report.finish()
}

/// All structural identities, in a fixed order.
pub fn check_frame_identities(geom: &FrameGeometry) -> Vec<ConditionReport> {
    vec![
        torsion_free(geom),
        metric_compatible(geom),
        curvature_antisymmetry(geom),
        first_bianchi(geom),
        second_bianchi(geom),
        pair_symmetry(geom),
        ricci_symmetric(geom),
        trace_consistency(geom),
        curvature_routes_agree(geom),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{FrameChange, FrameMetric, StructureConstants};
    use crate::scalar::{mat_from_ints, vec_from_ints};

    #[test]
    fn identities_hold_on_non_orthonormal_frame() {
        let c = StructureConstants::from_brackets(&[
            (0, 2, vec_from_ints([3, 0, 0])),
            (1, 2, vec_from_ints([0, 3, 0])),
        ]);
        let change = FrameChange::new(mat_from_ints([[1, 2, 0], [0, 1, 1], [1, 0, 1]])).unwrap();
        let g = change.metric(&FrameMetric::identity()).unwrap();
        let geom = FrameGeometry::new(change.constants(&c), g).unwrap();
        for report in check_frame_identities(&geom) {
            assert!(report.holds, "{report}");
        }
    }

    #[test]
    fn heisenberg_frame_identities_hold() {
        let geom = FrameGeometry::with_identity_metric(StructureConstants::from_brackets(&[(
            0,
            1,
            vec_from_ints([0, 0, 1]),
        )]))
        .unwrap();
        assert!(!geom.curvature().is_zero());
        for report in check_frame_identities(&geom) {
            assert!(report.holds, "{report}");
        }
    }
}
