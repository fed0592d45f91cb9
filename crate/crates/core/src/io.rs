//! Matrix and parameter files.
//!
//! Matrix JSON is `{"rows":2,"cols":2,"data":[["1","1/2"],["1/2","1/3"]]}`;
//! [`matrix_to_json`] emits exactly this compact form, so canonical input
//! round-trips byte for byte. CSV holds one row per line with the same entry
//! strings. Input starting with `{` is read as JSON, anything else as CSV.
//!
//! Parameter files are
//! `{"n":2,"lowers":[["2","1"]],"uppers":[["2","1"]],"diag":["1","1"]}` with
//! `[position, value]` pairs in factor order; positions may also be numbers.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Result, TpError};
use crate::matrix::ExactMatrix;
use crate::netfact::FactorizationParams;
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    rows: usize,
    cols: usize,
    data: Vec<Vec<String>>,
}

/// Reads a file, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(Path::new(path)).map_err(|e| TpError::Io(format!("{path}: {e}")))
    }
}

pub fn detect_format(text: &str) -> Format {
    if text.trim_start().starts_with('{') {
        Format::Json
    } else {
        Format::Csv
    }
}

pub fn parse_matrix(text: &str, format: Option<Format>) -> Result<ExactMatrix> {
    match format.unwrap_or_else(|| detect_format(text)) {
        Format::Json => parse_matrix_json(text),
        Format::Csv => parse_matrix_csv(text),
    }
}

pub fn read_matrix(path: &str, format: Option<Format>) -> Result<ExactMatrix> {
    parse_matrix(&read_source(path)?, format)
}

fn json_error(e: serde_json::Error) -> TpError {
    TpError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Shifts a column-relative parse error from [`parse_rational`] to `(line, column)`.
fn relocate(e: TpError, line: usize, column: usize) -> TpError {
    match e {
        TpError::Parse { column: c, message, .. } => TpError::Parse {
            line,
            column: column + c - 1,
            message,
        },
        other => other,
    }
}

/// 1-based `(line, column)` of the opening quote of every string literal after
/// the `"data"` key, in document order.
fn data_string_positions(text: &str) -> Vec<(usize, usize)> {
    let start = text.find("\"data\"").map_or(0, |p| p + "\"data\"".len());
    let (mut line, mut col) = (1, 1);
    for ch in text[..start].chars() {
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    let mut out = Vec::new();
    let mut in_str = false;
    let mut escaped = false;
    for ch in text[start..].chars() {
        if in_str {
            if escaped {
                escaped = false;
            } else if ch == '\\' {
                escaped = true;
            } else if ch == '"' {
                in_str = false;
            }
        } else if ch == '"' {
            in_str = true;
            out.push((line, col));
        }
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    out
}

pub fn parse_matrix_json(text: &str) -> Result<ExactMatrix> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(json_error)?;
    if doc.data.len() != doc.rows {
        return Err(TpError::Shape(format!("declared {} rows, found {}", doc.rows, doc.data.len())));
    }
    if let Some((r, row)) = doc.data.iter().enumerate().find(|(_, row)| row.len() != doc.cols) {
        return Err(TpError::Shape(format!(
            "row {} has {} entries, declared {} columns",
            r + 1,
            row.len(),
            doc.cols
        )));
    }
    let mut entries = Vec::with_capacity(doc.rows * doc.cols);
    let mut positions: Option<Vec<(usize, usize)>> = None;
    for (t, s) in doc.data.iter().flatten().enumerate() {
        match parse_rational(s) {
            Ok(v) => entries.push(v),
            Err(e) => {
                let pos = positions.get_or_insert_with(|| data_string_positions(text));
                let (line, col) = pos.get(t).copied().unwrap_or((1, 1));
                // +1 steps over the opening quote
                return Err(relocate(e, line, col + 1));
            }
        }
    }
    ExactMatrix::new(doc.rows, doc.cols, entries)
}

pub fn parse_matrix_csv(text: &str) -> Result<ExactMatrix> {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut col = 1;
        for field in line.split(',') {
            row.push(parse_rational(field).map_err(|e| relocate(e, ln + 1, col))?);
            col += field.chars().count() + 1;
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(TpError::Shape(format!(
                    "line {} has {} entries, expected {}",
                    ln + 1,
                    row.len(),
                    first.len()
                )));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(TpError::Shape("empty matrix".into()));
    }
    ExactMatrix::from_rows(rows)
}

pub fn matrix_to_json(a: &ExactMatrix) -> String {
    let doc = MatrixDoc {
        rows: a.rows(),
        cols: a.cols(),
        data: a.to_rows().iter().map(|r| r.iter().map(format_rational).collect()).collect(),
    };
    serde_json::to_string(&doc).expect("matrix serializes")
}

/// JSON value of a matrix, for embedding in larger documents.
pub fn matrix_to_value(a: &ExactMatrix) -> Value {
    serde_json::from_str(&matrix_to_json(a)).expect("valid json")
}

pub fn matrix_to_csv(a: &ExactMatrix) -> String {
    let mut s = String::new();
    for i in 1..=a.rows() {
        let row: Vec<String> = a.row(i).iter().map(format_rational).collect();
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

pub fn emit_matrix(a: &ExactMatrix, format: Format) -> String {
    match format {
        Format::Json => matrix_to_json(a),
        Format::Csv => matrix_to_csv(a).trim_end().to_string(),
    }
}

#[derive(Serialize)]
struct ParamsDoc {
    n: usize,
    lowers: Vec<[String; 2]>,
    uppers: Vec<[String; 2]>,
    diag: Vec<String>,
}

impl ParamsDoc {
    fn from_params(p: &FactorizationParams) -> Self {
        let pairs = |list: &[(usize, Rational)]| list.iter().map(|(i, v)| [i.to_string(), format_rational(v)]).collect();
        ParamsDoc {
            n: p.n,
            lowers: pairs(&p.lowers),
            uppers: pairs(&p.uppers),
            diag: p.diag.iter().map(format_rational).collect(),
        }
    }
}

pub fn params_to_value(p: &FactorizationParams) -> Value {
    serde_json::to_value(ParamsDoc::from_params(p)).expect("params serialize")
}

pub fn params_to_json(p: &FactorizationParams) -> String {
    serde_json::to_string(&ParamsDoc::from_params(p)).expect("params serialize")
}

fn field_error(msg: impl Into<String>) -> TpError {
    TpError::Parse {
        line: 1,
        column: 1,
        message: msg.into(),
    }
}

fn value_rational(v: &Value, what: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| match e {
            TpError::Parse { message, .. } => field_error(format!("{what}: {message}")),
            other => other,
        }),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().expect("i64").into())),
        _ => Err(field_error(format!("{what}: expected a rational string"))),
    }
}

fn value_position(v: &Value, what: &str) -> Result<usize> {
    let parsed = match v {
        Value::String(s) => s.trim().parse::<usize>().ok(),
        Value::Number(n) => n.as_u64().map(|x| x as usize),
        _ => None,
    };
    parsed.ok_or_else(|| field_error(format!("{what}: expected a position")))
}

pub fn parse_params(text: &str) -> Result<FactorizationParams> {
    let v: Value = serde_json::from_str(text).map_err(json_error)?;
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| field_error("missing integer field \"n\""))? as usize;
    let pairs = |key: &str| -> Result<Vec<(usize, Rational)>> {
        let arr = v
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| field_error(format!("missing array field {key:?}")))?;
        arr.iter()
            .enumerate()
            .map(|(t, item)| {
                let what = format!("{key}[{}]", t + 1);
                match item.as_array().map(Vec::as_slice) {
                    Some([pos, val]) => Ok((value_position(pos, &what)?, value_rational(val, &what)?)),
                    _ => Err(field_error(format!("{what}: expected [position, value]"))),
                }
            })
            .collect()
    };
    let lowers = pairs("lowers")?;
    let uppers = pairs("uppers")?;
    let diag = v
        .get("diag")
        .and_then(Value::as_array)
        .ok_or_else(|| field_error("missing array field \"diag\""))?
        .iter()
        .enumerate()
        .map(|(t, d)| value_rational(d, &format!("diag[{}]", t + 1)))
        .collect::<Result<Vec<_>>>()?;
    let p = FactorizationParams { n, lowers, uppers, diag };
    p.validate()?;
    Ok(p)
}

pub fn read_params(path: &str) -> Result<FactorizationParams> {
    parse_params(&read_source(path)?)
}
