//! Command implementations. Each returns the text for stdout together with
//! the exit code, or a [`CliError`] carrying its own code.

use std::fmt::Write;
use std::path::Path;

use num_complex::Complex64;
use serde_json::json;
use threeterm::grassmann::reconstruct;
use threeterm::relations::{cross_ratio_points, rescaling_solve, RatioTuple};
use threeterm::{Error, Matrix2x4, PluckerVector, Scalar, SixTuple, TorusElement, PAIRS};

use crate::doc::{self, FieldMatrix, FieldTuple, ScalarJson};
use crate::error::CliError;
use crate::render;
use crate::report::{tuple_rows, Report};

/// Round-trip tolerance for reconstructed matrices.
pub const ROUND_TRIP_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

trait JsonScalar: Scalar {
    fn json(self) -> serde_json::Value;
}

impl JsonScalar for f64 {
    fn json(self) -> serde_json::Value {
        json!(self)
    }
}

impl JsonScalar for Complex64 {
    fn json(self) -> serde_json::Value {
        json!([self.re, self.im])
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes") + "\n"
}

pub fn measure(path: &Path, tol: f64, as_json: bool) -> Result<Output, CliError> {
    let document = doc::parse_config(&read(path)?)?;
    let cfg = document.to_concyclic()?;
    let report = Report::build(document.kind(), &cfg, tol);
    let stdout = if as_json {
        report.to_json()
    } else {
        report.to_table()
    };
    Ok(Output {
        stdout,
        code: if report.all_pass { 0 } else { 1 },
    })
}

fn rescale_output<S: JsonScalar>(
    a: &SixTuple<S>,
    b: &SixTuple<S>,
    q: &TorusElement<S>,
    field: &str,
    as_json: bool,
) -> Result<Output, CliError> {
    let ratios = RatioTuple::between(a, b)?;
    let rows = tuple_rows(&q.pair_products(), ratios.tuple());
    let max_err = rows.iter().map(|r| r.3).fold(0.0, f64::max);
    let stdout = if as_json {
        pretty(&json!({
            "field": field,
            "q": q.values().map(JsonScalar::json),
            "checks": rows.iter().map(|(pair, p, c, e)| json!({
                "pair": pair,
                "product": p.json(),
                "ratio": c.json(),
                "relative_error": e,
            })).collect::<Vec<_>>(),
            "max_relative_error": max_err,
        }))
    } else {
        let mut s = String::new();
        writeln!(s, "field: {field}").unwrap();
        for (k, v) in q.values().iter().enumerate() {
            writeln!(s, "q{} = {v}", k + 1).unwrap();
        }
        writeln!(
            s,
            "{:<5} {:>40} {:>40} {:>12}",
            "pair", "q_i*q_j", "b_ij/a_ij", "rel.err"
        )
        .unwrap();
        for (pair, p, c, e) in &rows {
            writeln!(
                s,
                "{pair:<5} {:>40} {:>40} {e:>12.3e}",
                p.to_string(),
                c.to_string()
            )
            .unwrap();
        }
        s
    };
    Ok(Output::ok(stdout))
}

pub fn rescale(a_path: &Path, b_path: &Path, tol: f64, as_json: bool) -> Result<Output, CliError> {
    let a = doc::parse_six_tuple(&read(a_path)?)?;
    let b = doc::parse_six_tuple(&read(b_path)?)?;
    if let (FieldTuple::Real(a), FieldTuple::Real(b)) = (a, b) {
        match rescaling_solve(&a, &b, tol) {
            Ok(q) => return rescale_output(&a, &b, &q, "real", as_json),
            // same complex orbit, imaginary q: fall through to the complex solve
            Err(Error::NoRealRoot(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let (a, b) = (a.to_complex(), b.to_complex());
    let q = rescaling_solve(&a, &b, tol)?;
    rescale_output(&a, &b, &q, "complex", as_json)
}

fn minors_output<S: JsonScalar>(m: &Matrix2x4<S>, as_json: bool) -> String {
    let p = m.minors();
    let t = p.tuple();
    if as_json {
        pretty(&json!({
            "tuple": t.to_array().map(JsonScalar::json),
            "residual": t.residual().json(),
            "relative_residual": t.relative_residual(),
        }))
    } else {
        let mut s = String::new();
        for (&(i, j), v) in PAIRS.iter().zip(t.to_array()) {
            writeln!(s, "P{i}{j} = {v}").unwrap();
        }
        writeln!(s, "residual P12*P34 + P14*P23 - P13*P24 = {}", t.residual()).unwrap();
        writeln!(s, "relative residual = {:e}", t.relative_residual()).unwrap();
        s
    }
}

pub fn plucker_minors(path: &Path, as_json: bool) -> Result<Output, CliError> {
    let stdout = match doc::parse_config(&read(path)?)?.to_matrix()? {
        FieldMatrix::Real(m) => minors_output(&m, as_json),
        FieldMatrix::Complex(m) => minors_output(&m, as_json),
    };
    Ok(Output::ok(stdout))
}

fn round_trip_error<S: Scalar>(p: &SixTuple<S>, m: &Matrix2x4<S>) -> f64 {
    let scale = p.to_array().iter().map(|v| v.modulus()).fold(0.0, f64::max);
    let err = m
        .minors()
        .tuple()
        .to_array()
        .iter()
        .zip(p.to_array())
        .map(|(&x, y)| (x - y).modulus())
        .fold(0.0, f64::max);
    if scale == 0.0 {
        err
    } else {
        err / scale
    }
}

fn reconstruct_one<S: Scalar>(p: &SixTuple<S>, tol: f64) -> Result<(Matrix2x4<S>, f64), CliError> {
    let m = reconstruct(&PluckerVector(*p), tol).map_err(|e| match e {
        Error::OffQuadric { .. } => CliError::Mismatch(format!(
            "{e}; residual P12*P34 + P14*P23 - P13*P24 = {}",
            p.residual()
        )),
        other => other.into(),
    })?;
    let err = round_trip_error(p, &m);
    if err.is_nan() || err > ROUND_TRIP_TOL {
        return Err(CliError::Relation(format!(
            "reconstructed minors deviate by {err:e} (tolerance {ROUND_TRIP_TOL:e})"
        )));
    }
    Ok((m, err))
}

pub fn plucker_reconstruct(path: &Path, tol: f64, as_json: bool) -> Result<Output, CliError> {
    let (matrix, err) = match doc::parse_six_tuple(&read(path)?)? {
        FieldTuple::Real(t) => {
            let (m, e) = reconstruct_one(&t, tol)?;
            (FieldMatrix::Real(m), e)
        }
        FieldTuple::Complex(t) => {
            let (m, e) = reconstruct_one(&t, tol)?;
            (FieldMatrix::Complex(m), e)
        }
    };
    let stdout = if as_json {
        pretty(&matrix.to_document().to_json())
    } else {
        let mut s = String::new();
        let rows: Vec<Vec<String>> = match matrix {
            FieldMatrix::Real(m) => m
                .rows
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect(),
            FieldMatrix::Complex(m) => m
                .rows
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect(),
        };
        for r in rows {
            writeln!(s, "[ {} ]", r.join("  ")).unwrap();
        }
        writeln!(s, "minor round-trip error = {err:e}").unwrap();
        s
    };
    Ok(Output::ok(stdout))
}

pub fn crossratio(path: &Path, as_json: bool) -> Result<Output, CliError> {
    let (points, complex) = doc::parse_points(&read(path)?)?;
    let cr = cross_ratio_points(&points)?;
    let value: ScalarJson = if complex { cr.into() } else { cr.re.into() };
    let stdout = if as_json {
        pretty(&json!({ "cross_ratio": value }))
    } else if complex {
        format!("{cr}\n")
    } else {
        format!("{}\n", cr.re)
    };
    Ok(Output::ok(stdout))
}

pub fn render(path: &Path) -> Result<String, CliError> {
    let cfg = doc::parse_config(&read(path)?)?.to_concyclic()?;
    Ok(render::render(&cfg))
}
