//! JSON manifest describing one instance.
//!
//! ```json
//! {
//!   "dimension": 3,
//!   "brackets": [{"i": 1, "j": 3, "coeffs": [-2, 0, 0]},
//!                {"i": 2, "j": 3, "coeffs": [0, -2, 0]}],
//!   "metric": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
//!   "phi": [[0, -1, 0], [1, 0, 0], [0, 0, 0]],
//!   "xi": 3,
//!   "soliton": {"lambda": "-2", "mu": "-2", "potential": [0, 0, 1]}
//! }
//! ```
//!
//! Indices are 1-based. `coeffs` lists the components of `[e_i, e_j]`.
//! `phi` is row-major with column `j` holding `φe_j`. Rationals are integers
//! or strings such as `"-3/4"`. `metric`, `xi` and `soliton` are optional.

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::fixtures::{Instance, SolitonSpec};
use crate::frame::{FrameMetric, StructureConstants};
use crate::scalar::{identity_mat, parse_rational, vec_is_zero, Mat3, Rational, Vec3, DIM};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    pub name: Option<String>,
    pub constants: StructureConstants,
    pub metric: Mat3,
    pub phi: Mat3,
    /// 0-based.
    pub xi_index: usize,
    pub soliton: Option<SolitonSpec>,
}

const KNOWN_KEYS: [&str; 7] = ["name", "dimension", "brackets", "metric", "phi", "xi", "soliton"];

struct Collector {
    errors: Vec<String>,
}

impl Collector {
    fn err(&mut self, path: &str, msg: impl AsRef<str>) {
        self.errors.push(format!("{path}: {}", msg.as_ref()));
    }

    fn rational(&mut self, path: &str, v: &Value) -> Option<Rational> {
        match v {
            Value::Number(n) => match n.as_i64() {
                Some(i) => Some(Rational::int(i)),
                None => {
                    self.err(path, "expected an integer or a rational string");
                    None
                }
            },
            Value::String(s) => match parse_rational(s) {
                Ok(r) => Some(r),
                Err(e) => {
                    self.err(path, e.to_string());
                    None
                }
            },
            _ => {
                self.err(path, "expected an integer or a rational string");
                None
            }
        }
    }

    fn vector(&mut self, path: &str, v: &Value) -> Option<Vec3> {
        let Some(items) = v.as_array() else {
            self.err(path, "expected an array of 3 rationals");
            return None;
        };
        if items.len() != DIM {
            self.err(path, format!("expected 3 entries, found {}", items.len()));
            return None;
        }
        let parsed: Vec<Option<Rational>> = items
            .iter()
            .enumerate()
            .map(|(k, x)| self.rational(&format!("{path}[{k}]"), x))
            .collect();
        let parsed: Option<Vec<Rational>> = parsed.into_iter().collect();
        parsed.map(|p| std::array::from_fn(|k| p[k].clone()))
    }

    fn matrix(&mut self, path: &str, v: &Value) -> Option<Mat3> {
        let Some(rows) = v.as_array() else {
            self.err(path, "expected a 3×3 array");
            return None;
        };
        if rows.len() != DIM {
            self.err(path, format!("expected 3 rows, found {}", rows.len()));
            return None;
        }
        let parsed: Vec<Option<Vec3>> = rows
            .iter()
            .enumerate()
            .map(|(i, row)| self.vector(&format!("{path}[{i}]"), row))
            .collect();
        let parsed: Option<Vec<Vec3>> = parsed.into_iter().collect();
        parsed.map(|p| std::array::from_fn(|i| p[i].clone()))
    }

    /// 1-based frame index, returned 0-based.
    fn index(&mut self, path: &str, v: Option<&Value>) -> Option<usize> {
        let Some(v) = v else {
            self.err(path, "missing");
            return None;
        };
        match v.as_u64() {
            Some(i @ 1..=3) => Some(i as usize - 1),
            _ => {
                self.err(path, format!("index must be 1, 2 or 3, found {v}"));
                None
            }
        }
    }
}

/// Parses and validates a manifest document; every problem is reported with
/// its path.
pub fn parse_manifest(text: &str) -> Result<Manifest> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    let Some(obj) = doc.as_object() else {
        return Err(Error::Manifest(vec!["$: expected an object".into()]));
    };
    let mut c = Collector { errors: Vec::new() };
    for key in obj.keys() {
        if !KNOWN_KEYS.contains(&key.as_str()) {
            c.err(key, "unknown field");
        }
    }

    match obj.get("dimension") {
        Some(d) if d.as_u64() == Some(3) => {}
        Some(_) => c.err("dimension", "dimension must be 3"),
        None => c.err("dimension", "missing"),
    }

    let name = match obj.get("name") {
        None => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => {
            c.err("name", "expected a string");
            None
        }
    };

    let constants = parse_brackets(&mut c, obj);

    let metric = match obj.get("metric") {
        None | Some(Value::Null) => Some(identity_mat()),
        Some(v) => c.matrix("metric", v),
    };
    if let Some(m) = &metric {
        if let Err(e) = FrameMetric::new(m.clone()) {
            c.err("metric", e.to_string());
        }
    }

    let phi = match obj.get("phi") {
        Some(v) => c.matrix("phi", v),
        None => {
            c.err("phi", "missing");
            None
        }
    };

    let xi_index = match obj.get("xi") {
        None | Some(Value::Null) => Some(2),
        v => c.index("xi", v),
    };

    let soliton = match obj.get("soliton") {
        None | Some(Value::Null) => Some(None),
        Some(v) => parse_soliton(&mut c, v).map(Some),
    };

    match (constants, metric, phi, xi_index, soliton) {
        (Some(constants), Some(metric), Some(phi), Some(xi_index), Some(soliton))
            if c.errors.is_empty() =>
        {
            Ok(Manifest { name, constants, metric, phi, xi_index, soliton })
        }
        _ => Err(Error::Manifest(c.errors)),
    }
}

fn parse_brackets(c: &mut Collector, obj: &Map<String, Value>) -> Option<StructureConstants> {
    let Some(list) = obj.get("brackets") else {
        c.err("brackets", "missing");
        return None;
    };
    let Some(list) = list.as_array() else {
        c.err("brackets", "expected an array");
        return None;
    };
    let before = c.errors.len();
    let mut constants = StructureConstants::zero();
    let mut seen = Vec::new();
    for (n, entry) in list.iter().enumerate() {
        let path = format!("brackets[{n}]");
        let Some(entry) = entry.as_object() else {
            c.err(&path, "expected an object with i, j, coeffs");
            continue;
        };
        for key in entry.keys() {
            if !["i", "j", "coeffs"].contains(&key.as_str()) {
                c.err(&format!("{path}.{key}"), "unknown field");
            }
        }
        let i = c.index(&format!("{path}.i"), entry.get("i"));
        let j = c.index(&format!("{path}.j"), entry.get("j"));
        let coeffs = match entry.get("coeffs") {
            Some(v) => c.vector(&format!("{path}.coeffs"), v),
            None => {
                c.err(&format!("{path}.coeffs"), "missing");
                None
            }
        };
        let (Some(i), Some(j), Some(coeffs)) = (i, j, coeffs) else { continue };
        if i == j {
            if !vec_is_zero(&coeffs) {
                c.err(&path, format!("[e{0},e{0}] must be zero", i + 1));
            }
            continue;
        }
        let key = (i.min(j), i.max(j));
        if seen.contains(&key) {
            c.err(&path, format!("bracket of e{} and e{} given twice", key.0 + 1, key.1 + 1));
            continue;
        }
        seen.push(key);
        constants.set_bracket(i, j, coeffs);
    }
    (c.errors.len() == before).then_some(constants)
}

fn parse_soliton(c: &mut Collector, v: &Value) -> Option<SolitonSpec> {
    let Some(obj) = v.as_object() else {
        c.err("soliton", "expected an object with lambda, mu, potential");
        return None;
    };
    for key in obj.keys() {
        if !["lambda", "mu", "potential"].contains(&key.as_str()) {
            c.err(&format!("soliton.{key}"), "unknown field");
        }
    }
    let mut field = |name: &str| match obj.get(name) {
        Some(v) => c.rational(&format!("soliton.{name}"), v),
        None => {
            c.err(&format!("soliton.{name}"), "missing");
            None
        }
    };
    let lambda = field("lambda");
    let mu = field("mu");
    let potential = match obj.get("potential") {
        Some(v) => c.vector("soliton.potential", v),
        None => {
            c.err("soliton.potential", "missing");
            None
        }
    };
    Some(SolitonSpec { lambda: lambda?, mu: mu?, potential: potential? })
}

impl Manifest {
    pub fn metric(&self) -> FrameMetric {
        FrameMetric::new(self.metric.clone()).expect("validated at parse time")
    }

    /// Validated instance; frame or contact violations are errors.
    pub fn into_instance(self, fallback_name: &str) -> Result<Instance> {
        let metric = self.metric();
        let name = self.name.unwrap_or_else(|| fallback_name.to_string());
        Instance::new(name, self.constants, metric, self.phi, self.xi_index, self.soliton)
    }
}

/// Manifest document for an instance given by its raw data.
pub fn manifest_json(
    constants: &StructureConstants,
    metric: &Mat3,
    phi: &Mat3,
    xi_index: usize,
) -> String {
    let brackets: Vec<Value> = (0..DIM)
        .flat_map(|i| (i + 1..DIM).map(move |j| (i, j)))
        .filter(|&(i, j)| !vec_is_zero(constants.bracket_of(i, j)))
        .map(|(i, j)| {
            serde_json::json!({
                "i": i + 1,
                "j": j + 1,
                "coeffs": constants.bracket_of(i, j),
            })
        })
        .collect();
    let mut doc = Map::new();
    doc.insert("dimension".into(), Value::from(3));
    doc.insert("brackets".into(), Value::Array(brackets));
    if metric != &identity_mat() {
        doc.insert("metric".into(), serde_json::to_value(metric).expect("serializable"));
    }
    doc.insert("phi".into(), serde_json::to_value(phi).expect("serializable"));
    doc.insert("xi".into(), Value::from(xi_index + 1));
    Value::Object(doc).to_string()
}
