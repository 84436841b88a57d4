//! JSON documents read by the command-line tool.
//!
//! Configuration files carry exactly one payload:
//!
//! ```json
//! {"concyclic": {"alpha": [a1, a2, a3, a4], "radii": [r1, r2, r3, r4]}}
//! {"lightcone": {"u": [[x, y, z], [x, y, z], [x, y, z], [x, y, z]]}}
//! {"matrix": {"rows": [[x1, x2, x3, x4], [y1, y2, y3, y4]], "field": "real"}}
//! ```
//!
//! Six-tuples are arrays of six scalars in the order 12, 13, 14, 23, 24, 34,
//! optionally wrapped as `{"tuple": [...]}`. Point sets for the cross-ratio
//! are four projective columns `[x, y]`. A scalar is a JSON number or a
//! `[re, im]` pair.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use threeterm::horocycle::Horocycle;
use threeterm::{ConcyclicConfig, LightConePoint, Matrix2x4, MinkowskiVec, SixTuple};

use crate::error::CliError;

/// A real number or a `[re, im]` pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Real(f64),
    Complex([f64; 2]),
}

impl ScalarJson {
    pub fn to_complex(self) -> Complex64 {
        match self {
            Self::Real(x) => Complex64::new(x, 0.0),
            Self::Complex([re, im]) => Complex64::new(re, im),
        }
    }

    fn is_complex(&self) -> bool {
        matches!(self, Self::Complex(_))
    }

    fn as_real(&self) -> Option<f64> {
        match *self {
            Self::Real(x) => Some(x),
            Self::Complex(_) => None,
        }
    }
}

impl From<f64> for ScalarJson {
    fn from(x: f64) -> Self {
        Self::Real(x)
    }
}

impl From<Complex64> for ScalarJson {
    fn from(z: Complex64) -> Self {
        Self::Complex([z.re, z.im])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    #[default]
    Real,
    Complex,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConcyclicPayload {
    pub alpha: [f64; 4],
    pub radii: [f64; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LightconePayload {
    pub u: [[f64; 3]; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixPayload {
    pub rows: [[ScalarJson; 4]; 2],
    #[serde(default)]
    pub field: Field,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    concyclic: Option<ConcyclicPayload>,
    lightcone: Option<LightconePayload>,
    matrix: Option<MatrixPayload>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConfigDocument {
    Concyclic(ConcyclicPayload),
    Lightcone(LightconePayload),
    Matrix(MatrixPayload),
}

/// A 2×4 matrix over the field named in its document.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FieldMatrix {
    Real(Matrix2x4<f64>),
    Complex(Matrix2x4<Complex64>),
}

/// A six-tuple, complex as soon as one entry is.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FieldTuple {
    Real(SixTuple<f64>),
    Complex(SixTuple<Complex64>),
}

impl FieldTuple {
    pub fn to_complex(&self) -> SixTuple<Complex64> {
        match self {
            Self::Real(t) => t.to_complex(),
            Self::Complex(t) => *t,
        }
    }

    pub fn to_json(&self) -> Vec<ScalarJson> {
        match self {
            Self::Real(t) => t.to_array().iter().map(|&v| v.into()).collect(),
            Self::Complex(t) => t.to_array().iter().map(|&v| v.into()).collect(),
        }
    }
}

fn json_err(e: serde_json::Error) -> CliError {
    CliError::Parse(e.to_string())
}

pub fn parse_config(text: &str) -> Result<ConfigDocument, CliError> {
    let raw: RawConfig = serde_json::from_str(text).map_err(json_err)?;
    match (raw.concyclic, raw.lightcone, raw.matrix) {
        (Some(c), None, None) => Ok(ConfigDocument::Concyclic(c)),
        (None, Some(l), None) => Ok(ConfigDocument::Lightcone(l)),
        (None, None, Some(m)) => Ok(ConfigDocument::Matrix(m)),
        (None, None, None) => Err(CliError::Parse(
            "configuration needs one of \"concyclic\", \"lightcone\", \"matrix\"".into(),
        )),
        _ => Err(CliError::Parse(
            "configuration must carry exactly one payload".into(),
        )),
    }
}

impl ConfigDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Concyclic(_) => "concyclic",
            Self::Lightcone(_) => "lightcone",
            Self::Matrix(_) => "matrix",
        }
    }

    /// The four-circle configuration described by a concyclic or light-cone
    /// payload.
    pub fn to_concyclic(&self) -> Result<ConcyclicConfig, CliError> {
        match self {
            Self::Concyclic(c) => Ok(ConcyclicConfig::new(c.alpha, c.radii)?),
            Self::Lightcone(l) => {
                let mut h = Vec::with_capacity(4);
                for [x, y, z] in l.u {
                    h.push(Horocycle::new(LightConePoint::new(MinkowskiVec::new(
                        x, y, z,
                    ))?));
                }
                let h: [Horocycle; 4] = h.try_into().expect("four vectors");
                Ok(ConcyclicConfig::from_horocycles(&h)?)
            }
            Self::Matrix(_) => Err(CliError::Parse(
                "expected a \"concyclic\" or \"lightcone\" configuration, got \"matrix\"".into(),
            )),
        }
    }

    pub fn to_matrix(&self) -> Result<FieldMatrix, CliError> {
        let Self::Matrix(m) = self else {
            return Err(CliError::Parse(format!(
                "expected a \"matrix\" document, got \"{}\"",
                self.kind()
            )));
        };
        let complex_entries = m.rows.iter().flatten().any(ScalarJson::is_complex);
        match m.field {
            Field::Real if complex_entries => Err(CliError::Parse(
                "complex entries in a matrix declared \"real\"".into(),
            )),
            Field::Real => {
                let rows = m
                    .rows
                    .map(|r| r.map(|v| v.as_real().expect("checked real")));
                Ok(FieldMatrix::Real(Matrix2x4::new(rows)?))
            }
            Field::Complex => {
                let rows = m.rows.map(|r| r.map(ScalarJson::to_complex));
                Ok(FieldMatrix::Complex(Matrix2x4::new(rows)?))
            }
        }
    }
}

impl FieldMatrix {
    pub fn to_document(&self) -> ConfigDocument {
        let (rows, field) = match self {
            Self::Real(m) => (m.rows.map(|r| r.map(ScalarJson::from)), Field::Real),
            Self::Complex(m) => (m.rows.map(|r| r.map(ScalarJson::from)), Field::Complex),
        };
        ConfigDocument::Matrix(MatrixPayload { rows, field })
    }
}

impl ConfigDocument {
    pub fn to_json(&self) -> serde_json::Value {
        let (key, value) = match self {
            Self::Concyclic(c) => ("concyclic", serde_json::to_value(c)),
            Self::Lightcone(l) => ("lightcone", serde_json::to_value(l)),
            Self::Matrix(m) => ("matrix", serde_json::to_value(m)),
        };
        serde_json::json!({ key: value.expect("serializable payload") })
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawTuple {
    Bare([ScalarJson; 6]),
    Wrapped { tuple: [ScalarJson; 6] },
}

pub fn parse_six_tuple(text: &str) -> Result<FieldTuple, CliError> {
    let raw: RawTuple = serde_json::from_str(text).map_err(|_| {
        CliError::Parse("expected an array of six scalars (12, 13, 14, 23, 24, 34)".into())
    })?;
    let entries = match raw {
        RawTuple::Bare(t) | RawTuple::Wrapped { tuple: t } => t,
    };
    if entries.iter().any(ScalarJson::is_complex) {
        Ok(FieldTuple::Complex(SixTuple::from_array(
            entries.map(ScalarJson::to_complex),
        )))
    } else {
        Ok(FieldTuple::Real(SixTuple::from_array(
            entries.map(|v| v.as_real().expect("checked real")),
        )))
    }
}

/// Four projective points as columns `[x, y]`, promoted to complex.
pub fn parse_points(text: &str) -> Result<([[Complex64; 2]; 4], bool), CliError> {
    let raw: [[ScalarJson; 2]; 4] = serde_json::from_str(text)
        .map_err(|_| CliError::Parse("expected four projective points [x, y]".into()))?;
    let complex = raw.iter().flatten().any(ScalarJson::is_complex);
    Ok((raw.map(|p| p.map(ScalarJson::to_complex)), complex))
}
