#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use sasaki_audit::contact::AlmostContactData;
use sasaki_audit::fixtures::Fixture;
use sasaki_audit::frame::{FrameChange, FrameGeometry};
use sasaki_audit::scalar::{det3, identity_mat, inverse3, mat_add, mat_mul, mat_sub, zero_mat, Mat3};
use sasaki_audit::Rational;

/// Random rational in [lo, hi] with denominator at most 4.
pub fn rational_in(rng: &mut impl Rng, lo: i64, hi: i64) -> Rational {
    let q = rng.gen_range(1..=4);
    let p = rng.gen_range(lo * q..=hi * q);
    Rational::frac(p, q)
}

/// Cayley transform `(I - A)(I + A)⁻¹` of the skew matrix built from
/// `(a, b, c)`: an exact rational rotation.
pub fn cayley(a: Rational, b: Rational, c: Rational) -> Mat3 {
    let z = Rational::zero();
    let skew = [[z.clone(), a.clone(), b.clone()], [-a, z.clone(), c.clone()], [-b, -c, z]];
    let i = identity_mat();
    let inv = inverse3(&mat_add(&i, &skew)).expect("I + skew is invertible");
    mat_mul(&mat_sub(&i, &skew), &inv)
}

pub fn signed_permutation(rng: &mut impl Rng) -> Mat3 {
    let mut perm = [0usize, 1, 2];
    perm.shuffle(rng);
    let mut m = zero_mat();
    for (col, &row) in perm.iter().enumerate() {
        m[row][col] = if rng.gen_bool(0.5) { Rational::one() } else { -Rational::one() };
    }
    m
}

/// Orthogonal relabeling (signed permutation times a rational rotation) or,
/// one time in three, a general invertible matrix with small entries.
pub fn random_change(rng: &mut impl Rng) -> FrameChange {
    let m = if rng.gen_range(0..3) == 0 {
        loop {
            let m: Mat3 = std::array::from_fn(|_| std::array::from_fn(|_| Rational::int(rng.gen_range(-2..=2))));
            if !det3(&m).is_zero() {
                break m;
            }
        }
    } else {
        let rot = cayley(rational_in(rng, -2, 2), rational_in(rng, -2, 2), rational_in(rng, -2, 2));
        mat_mul(&signed_permutation(rng), &rot)
    };
    FrameChange::new(m).expect("invertible")
}

pub fn random_fixture(rng: &mut impl Rng) -> Fixture {
    let x = rational_in(rng, -5, 5);
    if rng.gen_bool(0.5) {
        Fixture::Ken(x)
    } else {
        Fixture::Su2(x)
    }
}

/// Fixture data expressed in a new frame.
pub fn relabeled(fixture: &Fixture, change: &FrameChange) -> (FrameGeometry, AlmostContactData) {
    let inst = fixture.instance();
    let metric = change.metric(inst.geom.metric()).expect("pulled-back metric is valid");
    let geom = FrameGeometry::new(change.constants(inst.geom.constants()), metric.clone())
        .expect("frame changes preserve Jacobi");
    let acd = inst.acd.in_frame(change, &metric);
    (geom, acd)
}
