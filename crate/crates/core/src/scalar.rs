//! Exact rational scalars, fixed 3×3 linear algebra and an exact linear solver.
//!
//! Every equality test downstream is a zero test on these values; nothing in
//! the crate ever compares with a tolerance.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Arbitrary-precision rational number, always in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` reduced to lowest terms. Panics when `q == 0`.
    pub fn frac(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn signum(&self) -> Ordering {
        self.0.cmp(&BigRational::zero())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
}

/// Parses `"-2"`, `"4/6"`, `"+3"` and similar. The result is reduced.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("malformed rational {text:?}"));
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let valid_int = |t: &str, allow_sign: bool| {
        let digits = if allow_sign {
            t.strip_prefix(['-', '+']).unwrap_or(t)
        } else {
            t
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) {
        return Err(bad());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) => {
            if !valid_int(d, false) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational(BigRational::new(n, d)))
}

/// Canonical text form: an integer, or `p/q` in lowest terms; the sign sits on
/// the numerator.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Frame vector as a linear combination, e.g. `-4·e1 + 1/2·e3`; `0` when zero.
pub fn format_vector(v: &[Rational]) -> String {
    let mut out = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let coeff = if mag == Rational::one() { String::new() } else { format!("{mag}·") };
        let sign = match (out.is_empty(), c.is_negative()) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        out.push_str(&format!("{sign}{coeff}e{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_rational(s)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::int(n)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign<Rational> for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

// ---------------------------------------------------------------------------
// Fixed 3×3 linear algebra

/// Frame dimension. Everything in the crate is 3-dimensional.
pub const DIM: usize = 3;

pub type Vec3 = [Rational; DIM];
/// Row-major: `m[row][col]`.
pub type Mat3 = [[Rational; DIM]; DIM];

pub fn zero_vec() -> Vec3 {
    std::array::from_fn(|_| Rational::zero())
}

pub fn basis_vec(i: usize) -> Vec3 {
    std::array::from_fn(|k| if k == i { Rational::one() } else { Rational::zero() })
}

pub fn vec_from_ints(v: [i64; DIM]) -> Vec3 {
    v.map(Rational::int)
}

pub fn zero_mat() -> Mat3 {
    std::array::from_fn(|_| zero_vec())
}

pub fn identity_mat() -> Mat3 {
    std::array::from_fn(basis_vec)
}

pub fn mat_from_ints(m: [[i64; DIM]; DIM]) -> Mat3 {
    m.map(vec_from_ints)
}

pub fn vec_add(a: &Vec3, b: &Vec3) -> Vec3 {
    std::array::from_fn(|i| &a[i] + &b[i])
}

pub fn vec_sub(a: &Vec3, b: &Vec3) -> Vec3 {
    std::array::from_fn(|i| &a[i] - &b[i])
}

pub fn vec_scale(s: &Rational, a: &Vec3) -> Vec3 {
    std::array::from_fn(|i| s * &a[i])
}

/// `acc += s * v`
pub fn vec_axpy(acc: &mut Vec3, s: &Rational, v: &Vec3) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        *a += s * x;
    }
}

pub fn vec_is_zero(a: &Vec3) -> bool {
    a.iter().all(Rational::is_zero)
}

pub fn dot(a: &Vec3, b: &Vec3) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn mat_vec(m: &Mat3, v: &Vec3) -> Vec3 {
    std::array::from_fn(|i| dot(&m[i], v))
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..DIM).map(|k| &a[i][k] * &b[k][j]).sum()))
}

pub fn mat_add(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| vec_add(&a[i], &b[i]))
}

pub fn mat_sub(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| vec_sub(&a[i], &b[i]))
}

pub fn mat_scale(s: &Rational, a: &Mat3) -> Mat3 {
    std::array::from_fn(|i| vec_scale(s, &a[i]))
}

pub fn transpose(m: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

/// Column `j` of `m`.
pub fn column(m: &Mat3, j: usize) -> Vec3 {
    std::array::from_fn(|i| m[i][j].clone())
}

/// Matrix whose columns are the given vectors.
pub fn from_columns(cols: &[Vec3; DIM]) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i].clone()))
}

pub fn outer(a: &Vec3, b: &Vec3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i] * &b[j]))
}

pub fn mat_is_zero(m: &Mat3) -> bool {
    m.iter().all(vec_is_zero)
}

pub fn trace(m: &Mat3) -> Rational {
    (0..DIM).map(|i| m[i][i].clone()).sum()
}

pub fn det3(m: &Mat3) -> Rational {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1]
    };
    &m[0][0] * minor(1, 2, 1, 2) - &m[0][1] * minor(1, 2, 0, 2) + &m[0][2] * minor(1, 2, 0, 1)
}

/// Inverse via the adjugate; `None` when singular.
pub fn inverse3(m: &Mat3) -> Option<Mat3> {
    let det = det3(m);
    let inv_det = det.recip()?;
    // cofactor(i, j) uses the rows/cols other than i/j in cyclic order, which
    // absorbs the checkerboard sign.
    let cof = |i: usize, j: usize| {
        let (r1, r2) = ((i + 1) % 3, (i + 2) % 3);
        let (c1, c2) = ((j + 1) % 3, (j + 2) % 3);
        &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1]
    };
    Some(std::array::from_fn(|i| {
        std::array::from_fn(|j| cof(j, i) * &inv_det)
    }))
}

/// Rank of a 3×3 matrix by exact elimination.
pub fn rank3(m: &Mat3) -> usize {
    let rows: Vec<Vec<Rational>> = m.iter().map(|r| r.to_vec()).collect();
    row_reduce(rows, DIM).rank
}

// ---------------------------------------------------------------------------
// Exact linear systems

/// `rows · x = rhs` over the rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    unknowns: usize,
}

impl LinearSystem {
    /// Fails when rows have unequal lengths or the right-hand side length
    /// does not match the row count.
    pub fn new(rows: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> Result<Self, Error> {
        let unknowns = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != unknowns) {
            return Err(Error::Shape("linear system rows have unequal lengths".into()));
        }
        if rhs.len() != rows.len() {
            return Err(Error::Shape(format!(
                "right-hand side has {} entries for {} rows",
                rhs.len(),
                rows.len()
            )));
        }
        Ok(LinearSystem { rows, rhs, unknowns })
    }

    /// An empty system in `unknowns` variables, filled with [`push_row`](Self::push_row).
    pub fn with_unknowns(unknowns: usize) -> Self {
        LinearSystem { rows: Vec::new(), rhs: Vec::new(), unknowns }
    }

    pub fn push_row(&mut self, row: Vec<Rational>, rhs: Rational) {
        assert_eq!(row.len(), self.unknowns, "row length must match unknown count");
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    /// `true` when `x` satisfies every row exactly.
    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.unknowns
            && self
                .rows
                .iter()
                .zip(&self.rhs)
                .all(|(row, b)| row.iter().zip(x).map(|(a, xi)| a * xi).sum::<Rational>() == *b)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    Unique(Vec<Rational>),
    Underdetermined,
    Inconsistent,
}

struct Reduced {
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    rank: usize,
}

/// Reduced row echelon form over the first `cols` columns, pivoting on the
/// first nonzero entry.
fn row_reduce(mut rows: Vec<Vec<Rational>>, cols: usize) -> Reduced {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Reduced { rows, pivots, rank: r }
}

/// Exact Gaussian elimination.
pub fn solve_exact(system: &LinearSystem) -> Solution {
    let n = system.unknowns;
    let augmented: Vec<Vec<Rational>> = system
        .rows
        .iter()
        .zip(&system.rhs)
        .map(|(row, b)| row.iter().cloned().chain(std::iter::once(b.clone())).collect())
        .collect();
    let reduced = row_reduce(augmented, n);
    let inconsistent = reduced.rows[reduced.rank..].iter().any(|row| !row[n].is_zero());
    if inconsistent {
        return Solution::Inconsistent;
    }
    if reduced.rank < n {
        return Solution::Underdetermined;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &c) in reduced.rows.iter().zip(&reduced.pivots) {
        x[c] = row[n].clone();
    }
    Solution::Unique(x)
}
