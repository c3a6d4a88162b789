//! W₂, Einstein and C-Bochner tensors, derivation-type curvature conditions,
//! Codazzi and cyclic-parallel Ricci checks, and torse-forming decompositions.

use serde::Serialize;

use crate::contact::AlmostContactData;
use crate::error::{Error, Result};
use crate::frame::{FrameGeometry, Sym2Tensor, Tensor13, VectorField};
use crate::report::ConditionReport;
use crate::scalar::{
    basis_vec, mat_vec, solve_exact, vec_axpy, vec_is_zero, vec_sub, zero_vec, LinearSystem, Mat3,
    Rational, Solution, Vec3, DIM,
};

/// Rank-(1,3) tensor `T(X,Y)Z`.
pub type Rank13Tensor = Tensor13;

/// `W₂(X,Y)Z = R(X,Y)Z + ½[g(X,Z)QY - g(Y,Z)QX]`
pub fn w2_tensor(geom: &FrameGeometry) -> Rank13Tensor {
    let g = geom.metric();
    let half = Rational::frac(1, 2);
    Tensor13::from_fn(|i, j, k| {
        let mut out = geom.curvature().get(i, j, k).clone();
        let qy = geom.apply_ricci_operator(&basis_vec(j));
        let qx = geom.apply_ricci_operator(&basis_vec(i));
        vec_axpy(&mut out, &(&half * g.get(i, k)), &qy);
        vec_axpy(&mut out, &(-(&half * g.get(j, k))), &qx);
        out
    })
}

/// `E = S - (r/3) g`
pub fn einstein_tensor(geom: &FrameGeometry) -> Sym2Tensor {
    let third = geom.scalar_curvature() * Rational::frac(1, 3);
    geom.ricci_tensor()
        .combine(&Rational::one(), &Sym2Tensor::from_metric(geom.metric()), &-third)
}

/// C-Bochner tensor with `D = (r+2)/4`. The vector-less `S(Y,Z)` term of the
/// usual printed form is taken as `S(Y,Z)X`.
pub fn c_bochner_tensor(geom: &FrameGeometry, acd: &AlmostContactData) -> Rank13Tensor {
    let g = geom.metric();
    let s = geom.ricci_tensor();
    let xi = acd.xi();
    let d = (geom.scalar_curvature() + Rational::int(2)) * Rational::frac(1, 4);
    let sixth = Rational::frac(1, 6);
    let c_phi = -((&d + Rational::int(2)) * &sixth);
    let c_eta = &d * &sixth;
    let c_met = -((&d - Rational::int(4)) * &sixth);
    let two = Rational::int(2);
    let q = |v: &Vec3| geom.apply_ricci_operator(v);

    Tensor13::from_fn(|i, j, k| {
        let (x, y, z) = (basis_vec(i), basis_vec(j), basis_vec(k));
        let (px, py, pz) = (acd.apply_phi(&x), acd.apply_phi(&y), acd.apply_phi(&z));
        let (ex, ey, ez) = (acd.eta_of(&x), acd.eta_of(&y), acd.eta_of(&z));

        let ricci_terms: Vec<(Rational, Vec3)> = vec![
            (g.inner(&x, &z), q(&y)),
            (-s.eval(&y, &z), x.clone()),
            (-g.inner(&y, &z), q(&x)),
            (s.eval(&x, &z), y.clone()),
            (g.inner(&px, &z), q(&py)),
            (-s.eval(&py, &z), px.clone()),
            (-g.inner(&py, &z), q(&px)),
            (s.eval(&px, &z), py.clone()),
            (&two * s.eval(&px, &y), pz.clone()),
            (&two * g.inner(&px, &y), q(&pz)),
            (&ey * &ez, q(&x)),
            (-(&ey * s.eval(&x, &z)), xi.clone()),
            (&ex * s.eval(&y, &z), xi.clone()),
            (-(&ex * &ez), q(&y)),
        ];
        let phi_terms: Vec<(Rational, Vec3)> = vec![
            (g.inner(&px, &z), py.clone()),
            (-g.inner(&py, &z), px.clone()),
            (&two * g.inner(&px, &y), pz.clone()),
        ];
        let eta_terms: Vec<(Rational, Vec3)> = vec![
            (&ey * g.inner(&x, &z), xi.clone()),
            (-(&ey * &ez), x.clone()),
            (&ex * &ez, y.clone()),
            (-(&ex * g.inner(&y, &z)), xi.clone()),
        ];
        let metric_terms: Vec<(Rational, Vec3)> =
            vec![(g.inner(&x, &z), y.clone()), (-g.inner(&y, &z), x.clone())];

        let mut out = geom.curvature().get(i, j, k).clone();
        for (group, coeff) in [
            (&ricci_terms, &sixth),
            (&phi_terms, &c_phi),
            (&eta_terms, &c_eta),
            (&metric_terms, &c_met),
        ] {
            for (s, v) in group {
                vec_axpy(&mut out, &(coeff * s), v);
            }
        }
        out
    })
}

/// `T(X,Y)Z + T(Y,X)Z = 0` on every component.
pub fn antisymmetry_in_first_pair(id: &str, t: &Tensor13) -> ConditionReport {
    let mut report = ConditionReport::evaluate(id);
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                for l in 0..DIM {
                    report.component(&[i, j, k, l], t.component(i, j, k, l) + t.component(j, i, k, l));
                }
            }
        }
    }
    report.finish()
}

/// `S(A_i e_j, e_k) + S(e_j, A_i e_k) = 0` for endomorphisms
/// `A_i = A(ξ, e_i)` (column `k` of `A_i` is `A_i e_k`).
pub fn derivation_on_sym2(id: &str, family: &[Mat3; DIM], s: &Sym2Tensor) -> ConditionReport {
    let mut report = ConditionReport::evaluate(id);
    for (i, a) in family.iter().enumerate() {
        for j in 0..DIM {
            let aej = mat_vec(a, &basis_vec(j));
            for k in 0..DIM {
                let aek = mat_vec(a, &basis_vec(k));
                let v = s.eval(&aej, &basis_vec(k)) + s.eval(&basis_vec(j), &aek);
                report.component(&[i, j, k], v);
            }
        }
    }
    report.finish()
}

/// `R(ξ,X)·S = 0`
pub fn r_xi_dot_s(geom: &FrameGeometry, acd: &AlmostContactData) -> ConditionReport {
    let family = geom.curvature().slice_first(acd.xi());
    derivation_on_sym2("R(ξ,X)·S = 0", &family, geom.ricci_tensor())
}

/// `W₂(ξ,X)·S = 0`
pub fn w2_xi_dot_s(geom: &FrameGeometry, acd: &AlmostContactData) -> ConditionReport {
    let family = w2_tensor(geom).slice_first(acd.xi());
    derivation_on_sym2("W2(ξ,X)·S = 0", &family, geom.ricci_tensor())
}

/// `B(ξ,X)·S = 0`
pub fn bochner_xi_dot_s(geom: &FrameGeometry, acd: &AlmostContactData) -> ConditionReport {
    let family = c_bochner_tensor(geom, acd).slice_first(acd.xi());
    derivation_on_sym2("B(ξ,X)·S = 0", &family, geom.ricci_tensor())
}

/// `B(ξ,Y)Z = [k - (r/2 - λ - μ)/6 - 2/3][g(Y,Z)ξ - η(Z)Y]` with `k = α² - β²`,
/// the reduced form expected once `S(ξ,Z) = (r/2 - λ - μ)η(Z)`.
pub fn bochner_xi_reduction(
    geom: &FrameGeometry,
    acd: &AlmostContactData,
    k: &Rational,
    lambda: &Rational,
    mu: &Rational,
) -> ConditionReport {
    let b = c_bochner_tensor(geom, acd);
    let half_r = geom.scalar_curvature() * Rational::frac(1, 2);
    let coeff = k - (half_r - lambda - mu) * Rational::frac(1, 6) - Rational::frac(2, 3);
    let g = geom.metric();
    let mut report = ConditionReport::evaluate("B(ξ,Y)Z reduced form");
    for j in 0..DIM {
        for k_idx in 0..DIM {
            let mut expected = zero_vec();
            vec_axpy(&mut expected, &(&coeff * g.get(j, k_idx)), acd.xi());
            vec_axpy(&mut expected, &-(&coeff * acd.eta_of(&basis_vec(k_idx))), &basis_vec(j));
            let actual = b.apply(acd.xi(), &basis_vec(j), &basis_vec(k_idx));
            for (l, v) in vec_sub(&actual, &expected).into_iter().enumerate() {
                report.component(&[j, k_idx, l], v);
            }
        }
    }
    report.finish()
}

/// `R·E = 0`: `E(R(X,Y)Z, W) + E(Z, R(X,Y)W) = 0`.
pub fn einstein_semisymmetry(geom: &FrameGeometry) -> ConditionReport {
    let e = einstein_tensor(geom);
    let r = geom.curvature();
    let mut report = ConditionReport::evaluate("R·E = 0");
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                for l in 0..DIM {
                    let v = e.eval(r.get(i, j, k), &basis_vec(l)) + e.eval(&basis_vec(k), r.get(i, j, l));
                    report.component(&[i, j, k, l], v);
                }
            }
        }
    }
    report.finish()
}

/// `(ξ ∧_S X)Z = S(X,Z)ξ - S(ξ,Z)X`
pub fn xi_wedge_s(geom: &FrameGeometry, acd: &AlmostContactData, x: &Vec3, z: &Vec3) -> Vec3 {
    let s = geom.ricci_tensor();
    let xi = acd.xi();
    let mut out = zero_vec();
    vec_axpy(&mut out, &s.eval(x, z), xi);
    vec_axpy(&mut out, &-s.eval(xi, z), x);
    out
}

/// `(ξ ∧_S X)·R = 0`, with the endomorphism acting as a derivation:
/// `A R(Y,Z)W - R(AY,Z)W - R(Y,AZ)W - R(Y,Z)AW`.
pub fn s_wedge_dot_r(geom: &FrameGeometry, acd: &AlmostContactData) -> ConditionReport {
    let r = geom.curvature();
    let mut report = ConditionReport::evaluate("(ξ∧_S X)·R = 0");
    for i in 0..DIM {
        let x = basis_vec(i);
        let a = |v: &Vec3| xi_wedge_s(geom, acd, &x, v);
        for yi in 0..DIM {
            for zi in 0..DIM {
                for wi in 0..DIM {
                    let (y, z, w) = (basis_vec(yi), basis_vec(zi), basis_vec(wi));
                    let mut v = a(r.get(yi, zi, wi));
                    v = vec_sub(&v, &r.apply(&a(&y), &z, &w));
                    v = vec_sub(&v, &r.apply(&y, &a(&z), &w));
                    v = vec_sub(&v, &r.apply(&y, &z, &a(&w)));
                    for (l, c) in v.into_iter().enumerate() {
                        report.component(&[i, yi, zi, wi, l], c);
                    }
                }
            }
        }
    }
    report.finish()
}

/// `(∇_X S)(Y,Z) = (∇_Y S)(X,Z)`
pub fn codazzi_check(geom: &FrameGeometry) -> ConditionReport {
    let d = geom.nabla_ricci();
    let mut report = ConditionReport::evaluate("Codazzi-type Ricci tensor");
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                report.component(&[i, j, k], &d[i][j][k] - &d[j][i][k]);
            }
        }
    }
    report.finish()
}

/// `(∇_X S)(Y,Z) + (∇_Y S)(Z,X) + (∇_Z S)(X,Y) = 0`
pub fn cyclic_parallel_check(geom: &FrameGeometry) -> ConditionReport {
    let d = geom.nabla_ricci();
    let mut report = ConditionReport::evaluate("cyclic parallel Ricci tensor");
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                report.component(&[i, j, k], &d[i][j][k] + &d[j][k][i] + &d[k][i][j]);
            }
        }
    }
    report.finish()
}

/// `∇_X V = f X + γ(X) V` with constant `f` and covector `γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorseFormingDecomposition {
    pub f: Rational,
    pub gamma: Vec3,
}

/// Exact solve for `(f, γ)`; `Ok(None)` when `V` is not torse-forming.
pub fn torse_forming_decompose(
    geom: &FrameGeometry,
    v: &VectorField,
) -> Result<Option<TorseFormingDecomposition>> {
    if vec_is_zero(v) {
        return Err(Error::ZeroVectorField);
    }
    // unknowns: f, γ_1, γ_2, γ_3
    let mut system = LinearSystem::with_unknowns(1 + DIM);
    for i in 0..DIM {
        let grad = geom.connection().nabla(&basis_vec(i), v);
        for l in 0..DIM {
            let mut row = vec![Rational::zero(); 1 + DIM];
            row[0] = basis_vec(i)[l].clone();
            row[1 + i] = v[l].clone();
            system.push_row(row, grad[l].clone());
        }
    }
    Ok(match solve_exact(&system) {
        Solution::Unique(x) => Some(TorseFormingDecomposition {
            f: x[0].clone(),
            gamma: std::array::from_fn(|i| x[1 + i].clone()),
        }),
        Solution::Inconsistent | Solution::Underdetermined => None,
    })
}
