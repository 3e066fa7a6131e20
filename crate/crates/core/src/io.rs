//! Arc files and direction strings.
//!
//! An arc file is JSON of the form `{"vertices": [["0", "0", "0"], …]}`.
//! Coordinates are strings holding `p`, `p/q` or a finite decimal, or JSON
//! integers.

use serde_json::Value;
use thiserror::Error;

use crate::arc::{validate_arc, ArcError, SpatialArc};
use crate::geom::{Direction, Rat, Vec3};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InputError {
    #[error("JSON syntax error at line {line}, column {column}: {msg}")]
    Syntax { line: usize, column: usize, msg: String },
    #[error("{path}: {msg}")]
    Shape { path: String, msg: String },
    #[error("invalid arc: {0}")]
    Arc(#[from] ArcError),
    #[error("bad direction '{0}': expected three rationals 'x,y,z', not all zero")]
    Direction(String),
}

fn coord(v: &Value, path: &str) -> Result<Rat, InputError> {
    let shape = |msg: &str| InputError::Shape {
        path: path.to_string(),
        msg: msg.to_string(),
    };
    match v {
        Value::String(s) => s.parse().map_err(|_| shape(&format!("'{}' is not a rational", s))),
        Value::Number(n) => n
            .as_i64()
            .map(Rat::from_int)
            .ok_or_else(|| shape("non-integer numbers must be written as strings such as \"1/3\"")),
        _ => Err(shape("expected a rational string or an integer")),
    }
}

pub fn parse_arc_json(text: &str) -> Result<SpatialArc, InputError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| InputError::Syntax {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    let verts = doc
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| InputError::Shape {
            path: "vertices".into(),
            msg: "expected an array of [x, y, z] triples".into(),
        })?;
    let mut pts = Vec::with_capacity(verts.len());
    for (i, v) in verts.iter().enumerate() {
        let path = format!("vertices[{}]", i);
        let xyz = v.as_array().filter(|a| a.len() == 3).ok_or_else(|| InputError::Shape {
            path: path.clone(),
            msg: "expected exactly three coordinates".into(),
        })?;
        let c: Vec<Rat> = xyz
            .iter()
            .enumerate()
            .map(|(j, x)| coord(x, &format!("{}[{}]", path, j)))
            .collect::<Result<_, _>>()?;
        let [x, y, z]: [Rat; 3] = c.try_into().unwrap();
        pts.push(Vec3::new(x, y, z));
    }
    Ok(validate_arc(pts)?)
}

pub fn arc_to_json(arc: &SpatialArc) -> String {
    let verts: Vec<Value> = arc
        .vertices()
        .iter()
        .map(|p| Value::Array(p.coords().iter().map(|c| Value::String(c.to_string())).collect()))
        .collect();
    serde_json::to_string_pretty(&serde_json::json!({ "vertices": verts })).unwrap()
}

/// Parse `"x,y,z"` with rational components.
pub fn parse_direction(text: &str) -> Result<Direction, InputError> {
    let bad = || InputError::Direction(text.to_string());
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let c: Vec<Rat> = parts.iter().map(|p| p.parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
    let [x, y, z]: [Rat; 3] = c.try_into().unwrap();
    Direction::new(&Vec3::new(x, y, z)).map_err(|_| bad())
}
