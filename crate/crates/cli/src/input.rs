//! Arrangement files.
//!
//! ```json
//! {"type": "hyperplane", "ambient_dim": 2,
//!  "hyperplanes": [{"normal": ["1", "0"], "offset": "0"}, {"normal": ["0", "1"], "offset": "1/2"}]}
//! {"type": "toric", "ambient_dim": 2, "hypersurfaces": [{"covector": [1, 2], "offset": "0"}]}
//! {"type": "sphere", "ambient_dim": 2, "normals": [["1", "0", "0"], ["0", "1", "0"]]}
//! {"type": "circle", "points": ["0", "1/3"]}
//! {"type": "abstract", "ambient_dim": 1,
//!  "flats": [{"id": "X", "dim": 1, "poin_c": [1, 1]}, {"id": "p", "dim": 0, "poin_c": [1]}],
//!  "order": [["X", "p"]]}
//! ```
//!
//! Rationals are `"p/q"` or `"p"` strings; plain JSON integers are also
//! accepted. Parsing happens in two passes: serde checks the shape and
//! reports errors with their JSON path, then values are converted and
//! checked, again reporting the path of the offending entry.

use num_bigint::BigInt;
use serde::Deserialize;
use thiserror::Error;

use dissect_core::builders::{
    AbstractFlat, AbstractSpec, CentralSpec, CircleSpec, Hyperplane, HyperplaneSpec, ToricHypersurface, ToricSpec,
};
use dissect_core::exactmath::{parse_rational, Rational};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {reason}")]
    Parse { path: String, reason: String },
    #[error("{path}: {reason}")]
    Validation { path: String, reason: String },
}

fn invalid(path: impl Into<String>, reason: impl ToString) -> InputError {
    InputError::Validation { path: path.into(), reason: reason.to_string() }
}

/// A number written either as a string or as a bare JSON integer.
#[derive(Debug, Clone)]
enum Num {
    Text(String),
    Int(i64),
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = Num;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a rational as a \"p/q\" string, or an integer")
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<Num, E> {
                Ok(Num::Text(v.to_string()))
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<Num, E> {
                Ok(Num::Int(v))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<Num, E> {
                i64::try_from(v).map(Num::Int).or_else(|_| Ok(Num::Text(v.to_string())))
            }
        }
        d.deserialize_any(V)
    }
}

impl Num {
    fn rational(&self, path: &str) -> Result<Rational, InputError> {
        match self {
            Num::Text(s) => parse_rational(s).map_err(|e| invalid(path, format!("`{s}`: {e}"))),
            Num::Int(i) => Ok(Rational::from_integer((*i).into())),
        }
    }

    fn integer(&self, path: &str) -> Result<BigInt, InputError> {
        match self {
            Num::Text(s) => s.trim().parse().map_err(|_| invalid(path, format!("`{s}` is not an integer"))),
            Num::Int(i) => Ok((*i).into()),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHyperplane {
    normal: Vec<Num>,
    offset: Num,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHypersurface {
    covector: Vec<Num>,
    offset: Num,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFlat {
    id: String,
    dim: usize,
    poin_c: Option<Vec<Num>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHyperplaneFile {
    ambient_dim: usize,
    hyperplanes: Vec<RawHyperplane>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawToricFile {
    ambient_dim: usize,
    hypersurfaces: Vec<RawHypersurface>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCentralFile {
    ambient_dim: usize,
    normals: Vec<Vec<Num>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCircleFile {
    ambient_dim: Option<usize>,
    points: Vec<Num>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAbstractFile {
    ambient_dim: usize,
    flats: Vec<RawFlat>,
    order: Vec<(String, String)>,
}

enum RawFile {
    Hyperplane(RawHyperplaneFile),
    Toric(RawToricFile),
    Sphere(RawCentralFile),
    Projective(RawCentralFile),
    Circle(RawCircleFile),
    Abstract(RawAbstractFile),
}

/// A parsed arrangement, ready for a builder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrangementFile {
    Hyperplane(HyperplaneSpec),
    Toric(ToricSpec),
    Sphere(CentralSpec),
    Projective(CentralSpec),
    Circle(CircleSpec),
    Abstract(AbstractSpec),
}

impl ArrangementFile {
    pub fn family(&self) -> &'static str {
        match self {
            ArrangementFile::Hyperplane(_) => "hyperplane",
            ArrangementFile::Toric(_) => "toric",
            ArrangementFile::Sphere(_) => "sphere",
            ArrangementFile::Projective(_) => "projective",
            ArrangementFile::Circle(_) => "circle",
            ArrangementFile::Abstract(_) => "abstract",
        }
    }
}

/// Deserializes with the JSON path of the first error.
fn with_path<'de, T: Deserialize<'de>>(d: impl serde::Deserializer<'de, Error = serde_json::Error>) -> Result<T, InputError> {
    serde_path_to_error::deserialize(d).map_err(|e| {
        let path = e.path().to_string();
        InputError::Parse { path: if path == "." { "$".into() } else { format!("$.{path}") }, reason: e.into_inner().to_string() }
    })
}

pub fn parse(bytes: &[u8]) -> Result<ArrangementFile, InputError> {
    let mut value: serde_json::Map<String, serde_json::Value> =
        with_path(&mut serde_json::Deserializer::from_slice(bytes))?;
    let kind = match value.remove("type") {
        Some(serde_json::Value::String(s)) => s,
        Some(_) => return Err(InputError::Parse { path: "$.type".into(), reason: "expected a string".into() }),
        None => return Err(InputError::Parse { path: "$".into(), reason: "missing field `type`".into() }),
    };
    let body = serde_json::Value::Object(value);
    let raw = match kind.as_str() {
        "hyperplane" => RawFile::Hyperplane(with_path(body)?),
        "toric" => RawFile::Toric(with_path(body)?),
        "sphere" => RawFile::Sphere(with_path(body)?),
        "projective" => RawFile::Projective(with_path(body)?),
        "circle" => RawFile::Circle(with_path(body)?),
        "abstract" => RawFile::Abstract(with_path(body)?),
        other => {
            return Err(InputError::Parse {
                path: "$.type".into(),
                reason: format!("unknown type `{other}`; expected hyperplane, toric, sphere, projective, circle or abstract"),
            })
        }
    };
    convert(raw)
}

fn rationals(v: &[Num], path: &str) -> Result<Vec<Rational>, InputError> {
    v.iter().enumerate().map(|(i, x)| x.rational(&format!("{path}[{i}]"))).collect()
}

fn convert(raw: RawFile) -> Result<ArrangementFile, InputError> {
    Ok(match raw {
        RawFile::Hyperplane(RawHyperplaneFile { ambient_dim, hyperplanes }) => {
            let hs = hyperplanes
                .iter()
                .enumerate()
                .map(|(i, h)| {
                    let path = format!("$.hyperplanes[{i}]");
                    Ok(Hyperplane::new(rationals(&h.normal, &format!("{path}.normal"))?, h.offset.rational(&format!("{path}.offset"))?))
                })
                .collect::<Result<_, InputError>>()?;
            let spec = HyperplaneSpec::new(ambient_dim, hs);
            spec.validate().map_err(|e| invalid("$.hyperplanes", e))?;
            ArrangementFile::Hyperplane(spec)
        }
        RawFile::Toric(RawToricFile { ambient_dim, hypersurfaces }) => {
            let hs = hypersurfaces
                .iter()
                .enumerate()
                .map(|(i, h)| {
                    let path = format!("$.hypersurfaces[{i}]");
                    let covector = h
                        .covector
                        .iter()
                        .enumerate()
                        .map(|(j, c)| c.integer(&format!("{path}.covector[{j}]")))
                        .collect::<Result<_, _>>()?;
                    Ok(ToricHypersurface::new(covector, h.offset.rational(&format!("{path}.offset"))?))
                })
                .collect::<Result<_, InputError>>()?;
            let spec = ToricSpec::new(ambient_dim, hs);
            spec.validate().map_err(|e| invalid("$.hypersurfaces", e))?;
            ArrangementFile::Toric(spec)
        }
        RawFile::Sphere(RawCentralFile { ambient_dim, normals }) => ArrangementFile::Sphere(central(ambient_dim, &normals)?),
        RawFile::Projective(RawCentralFile { ambient_dim, normals }) => ArrangementFile::Projective(central(ambient_dim, &normals)?),
        RawFile::Circle(RawCircleFile { ambient_dim, points }) => {
            if let Some(d) = ambient_dim.filter(|&d| d != 1) {
                return Err(invalid("$.ambient_dim", format!("a circle has dimension 1, got {d}")));
            }
            let spec = CircleSpec::new(rationals(&points, "$.points")?);
            spec.validate().map_err(|e| invalid("$.points", e))?;
            ArrangementFile::Circle(spec)
        }
        RawFile::Abstract(RawAbstractFile { ambient_dim, flats, order }) => {
            let flats = flats
                .into_iter()
                .enumerate()
                .map(|(i, f)| {
                    let path = format!("$.flats[{i}].poin_c");
                    let poin = f.poin_c.ok_or_else(|| invalid(&path, "missing field `poin_c`"))?;
                    let poin_c =
                        poin.iter().enumerate().map(|(j, c)| c.integer(&format!("{path}[{j}]"))).collect::<Result<_, _>>()?;
                    Ok(AbstractFlat { id: f.id, dim: f.dim, poin_c })
                })
                .collect::<Result<_, InputError>>()?;
            ArrangementFile::Abstract(AbstractSpec { ambient_dim, flats, order })
        }
    })
}

fn central(ambient_dim: usize, normals: &[Vec<Num>]) -> Result<CentralSpec, InputError> {
    let normals =
        normals.iter().enumerate().map(|(i, v)| rationals(v, &format!("$.normals[{i}]"))).collect::<Result<_, _>>()?;
    let spec = CentralSpec::new(ambient_dim, normals);
    spec.validate().map_err(|e| invalid("$.normals", e))?;
    Ok(spec)
}
