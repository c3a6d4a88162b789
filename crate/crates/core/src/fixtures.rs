//! Validated instances and the built-in fixture families.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::contact::{validate_almost_contact, AlmostContactData};
use crate::error::{Error, Result};
use crate::frame::{validate_frame, FrameGeometry, FrameMetric, StructureConstants, VectorField};
use crate::scalar::{mat_from_ints, vec_from_ints, Mat3, Rational, Vec3};
use crate::soliton::SolitonParams;

/// Soliton data carried by an instance, before its residual is evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolitonSpec {
    pub lambda: Rational,
    pub mu: Rational,
    pub potential: VectorField,
}

/// A frame geometry with a validated almost contact metric structure.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub geom: FrameGeometry,
    pub acd: AlmostContactData,
    pub soliton: Option<SolitonSpec>,
}

impl Instance {
    /// `xi_index` is 0-based.
    pub fn new(
        name: impl Into<String>,
        constants: StructureConstants,
        metric: FrameMetric,
        phi: Mat3,
        xi_index: usize,
        soliton: Option<SolitonSpec>,
    ) -> Result<Self> {
        let frame = validate_frame(&constants);
        if !frame.is_valid() {
            return Err(Error::InvalidFrame(frame));
        }
        let acd = AlmostContactData::with_reeb_index(phi, xi_index, &metric);
        let contact = validate_almost_contact(&acd, &metric);
        if !contact.is_valid() {
            return Err(Error::InvalidContact(contact));
        }
        let geom = FrameGeometry::new(constants, metric)?;
        Ok(Instance { name: name.into(), geom, acd, soliton })
    }

    /// The supplied soliton with its residual evaluated.
    pub fn supplied_soliton(&self) -> Option<SolitonParams> {
        self.soliton.as_ref().map(|s| {
            SolitonParams::new(&self.geom, &self.acd, s.lambda.clone(), s.mu.clone(), s.potential.clone())
        })
    }
}

/// `φe1 = e2, φe2 = -e1, φe3 = 0`
pub fn standard_phi() -> Mat3 {
    mat_from_ints([[0, -1, 0], [1, 0, 0], [0, 0, 0]])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// `[e1,e3] = -2e1, [e2,e3] = -2e2`
    Hyp,
    /// `[e1,e2] = 2αe3, [e2,e3] = 2αe1, [e3,e1] = 2αe2`
    Su2(Rational),
    /// `[e1,e3] = c·e1, [e2,e3] = c·e2`
    Ken(Rational),
    Abl,
}

impl Fixture {
    pub fn constants(&self) -> StructureConstants {
        match self {
            Fixture::Hyp => Fixture::Ken(Rational::int(-2)).constants(),
            Fixture::Su2(a) => {
                let t = Rational::int(2) * a;
                let z = Rational::zero();
                StructureConstants::from_brackets(&[
                    (0, 1, [z.clone(), z.clone(), t.clone()]),
                    (1, 2, [t.clone(), z.clone(), z.clone()]),
                    (2, 0, [z.clone(), t, z]),
                ])
            }
            Fixture::Ken(c) => {
                let z = Rational::zero();
                StructureConstants::from_brackets(&[
                    (0, 2, [c.clone(), z.clone(), z.clone()]),
                    (1, 2, [z.clone(), c.clone(), z]),
                ])
            }
            Fixture::Abl => StructureConstants::zero(),
        }
    }

    pub fn instance(&self) -> Instance {
        Instance::new(
            self.to_string(),
            self.constants(),
            FrameMetric::identity(),
            standard_phi(),
            2,
            None,
        )
        .expect("built-in fixtures are valid")
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fixture::Hyp => f.write_str("hyp"),
            Fixture::Su2(a) => write!(f, "su2({a})"),
            Fixture::Ken(c) => write!(f, "ken({c})"),
            Fixture::Abl => f.write_str("abl"),
        }
    }
}

impl FromStr for Fixture {
    type Err = Error;

    /// Accepts `hyp`, `paper_example`, `abl`, `su2(p/q)`, `su2:p/q`, `ken(p/q)`, `ken:p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let unknown = || Error::UnknownFixture(s.to_string());
        match lower.as_str() {
            "hyp" | "paper_example" => return Ok(Fixture::Hyp),
            "abl" => return Ok(Fixture::Abl),
            _ => {}
        }
        let (family, arg) = if let Some((family, rest)) = lower.split_once('(') {
            (family, rest.strip_suffix(')').ok_or_else(unknown)?)
        } else if let Some((family, rest)) = lower.split_once(':') {
            (family, rest)
        } else {
            return Err(unknown());
        };
        let value: Rational = arg.trim().parse().map_err(|_| unknown())?;
        match family.trim() {
            "su2" => Ok(Fixture::Su2(value)),
            "ken" => Ok(Fixture::Ken(value)),
            _ => Err(unknown()),
        }
    }
}

/// HYP, ABL, `SU2(α)` for `α ∈ {1/2, 1, 3}` and `KEN(c)` for
/// `c ∈ {-3, -2, -1, 1/2, 2}`.
pub fn fixture_library() -> Vec<Fixture> {
    let mut out = vec![Fixture::Hyp, Fixture::Abl];
    for a in [Rational::frac(1, 2), Rational::int(1), Rational::int(3)] {
        out.push(Fixture::Su2(a));
    }
    for c in [-3, -2, -1].map(Rational::int) {
        out.push(Fixture::Ken(c));
    }
    out.push(Fixture::Ken(Rational::frac(1, 2)));
    out.push(Fixture::Ken(Rational::int(2)));
    out
}

/// `ξ = e3` as a vector.
pub fn e3() -> Vec3 {
    vec_from_ints([0, 0, 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contact::detect_alpha_beta;
    use crate::soliton::solve_eta_einstein;

    #[test]
    fn parse_names() {
        assert_eq!("hyp".parse::<Fixture>().unwrap(), Fixture::Hyp);
        assert_eq!("paper_example".parse::<Fixture>().unwrap(), Fixture::Hyp);
        assert_eq!("ABL".parse::<Fixture>().unwrap(), Fixture::Abl);
        assert_eq!("su2(1/2)".parse::<Fixture>().unwrap(), Fixture::Su2(Rational::frac(1, 2)));
        assert_eq!("su2:3".parse::<Fixture>().unwrap(), Fixture::Su2(Rational::int(3)));
        assert_eq!("ken(-3)".parse::<Fixture>().unwrap(), Fixture::Ken(Rational::int(-3)));
        for bad in ["", "hyp2", "su2(", "ken(1/0)", "foo(1)", "su2(x)"] {
            assert!(matches!(bad.parse::<Fixture>(), Err(Error::UnknownFixture(_))), "{bad}");
        }
        for f in fixture_library() {
            assert_eq!(f.to_string().parse::<Fixture>().unwrap(), f);
        }
    }

    #[test]
    fn hyp_is_ken_minus_two() {
        assert_eq!(Fixture::Hyp.constants(), Fixture::Ken(Rational::int(-2)).constants());
        let c = Fixture::Hyp.constants();
        assert_eq!(c.bracket_of(0, 2), &vec_from_ints([-2, 0, 0]));
        assert_eq!(c.bracket_of(1, 2), &vec_from_ints([0, -2, 0]));
        assert_eq!(c.bracket_of(0, 1), &vec_from_ints([0, 0, 0]));
    }

    #[test]
    fn ken_family_detect_and_solve() {
        for c in [Rational::int(-3), Rational::frac(1, 2), Rational::int(2)] {
            let inst = Fixture::Ken(c.clone()).instance();
            let cls = detect_alpha_beta(&inst.geom, &inst.acd).class().cloned().unwrap();
            assert_eq!((cls.alpha.clone(), cls.beta.clone()), (Rational::zero(), c.clone()));
            let s = solve_eta_einstein(&inst.geom, &inst.acd, &e3()).unwrap();
            assert_eq!(s.lambda, -(&c * (&c + Rational::one())));
            assert_eq!(s.mu, c);
        }
    }

    #[test]
    fn invalid_instances_are_rejected() {
        let bad_frame = StructureConstants::from_brackets(&[
            (0, 1, vec_from_ints([0, 0, 1])),
            (0, 2, vec_from_ints([1, 0, 0])),
        ]);
        let err = Instance::new("x", bad_frame, FrameMetric::identity(), standard_phi(), 2, None);
        assert!(matches!(err, Err(Error::InvalidFrame(_))));
        let err = Instance::new(
            "x",
            StructureConstants::zero(),
            FrameMetric::identity(),
            mat_from_ints([[0, 1, 0], [1, 0, 0], [0, 0, 0]]),
            2,
            None,
        );
        assert!(matches!(err, Err(Error::InvalidContact(_))));
    }
}
