//! Reading quivers and matrices from the command line or a request body.

use std::path::Path;

use serde_json::Value;

use mutalg::dynkin::DynkinType;
use mutalg::{GssMatrix, SignedValuedQuiver};

/// A parsed input object.
#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    Quiver(SignedValuedQuiver),
    Matrix(GssMatrix),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Quiver(_) => "quiver",
            Input::Matrix(_) => "matrix",
        }
    }

    pub fn matrix(&self) -> GssMatrix {
        match self {
            Input::Quiver(q) => q.to_matrix(),
            Input::Matrix(b) => b.clone(),
        }
    }

    /// The quiver, converting a pure matrix if needed.
    pub fn quiver(&self) -> Result<SignedValuedQuiver, String> {
        match self {
            Input::Quiver(q) => Ok(q.clone()),
            Input::Matrix(b) => SignedValuedQuiver::from_matrix(b).map_err(|e| e.to_string()),
        }
    }
}

/// Interpret `text` as a Dynkin type (`A3`), a JSON document, or the arrow
/// language `1 -(a,b)-> 2; ...`. A path to an existing file is read first;
/// `-` reads standard input.
pub fn parse_input(text: &str) -> Result<Input, String> {
    let trimmed = text.trim();
    if trimmed == "-" {
        let body = std::io::read_to_string(std::io::stdin()).map_err(|e| format!("reading stdin: {e}"))?;
        return parse_text(&body);
    }
    if !trimmed.is_empty() && !trimmed.starts_with('{') && Path::new(trimmed).is_file() {
        let body = std::fs::read_to_string(trimmed).map_err(|e| format!("reading {trimmed}: {e}"))?;
        return parse_text(&body);
    }
    parse_text(trimmed)
}

fn parse_text(text: &str) -> Result<Input, String> {
    let t = text.trim();
    if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| format!("invalid JSON: {e}"))?;
        return parse_json(&v);
    }
    if let Ok(ty) = t.parse::<DynkinType>() {
        return Ok(Input::Quiver(ty.canonical_quiver()));
    }
    SignedValuedQuiver::parse_dsl(t).map(Input::Quiver)
}

/// Accepts a quiver `{n, d, arrows}`, a matrix `{n, d, entries}`, or a
/// wrapper `{"type": "A3"}`, `{"quiver": ...}`, `{"matrix": ...}`. A quiver
/// may also be given as a string in the arrow language.
pub fn parse_json(v: &Value) -> Result<Input, String> {
    if let Some(t) = v.get("type") {
        let s = t.as_str().ok_or("\"type\" must be a string such as \"A3\"")?;
        let ty: DynkinType = s.parse().map_err(|e: mutalg::Error| e.to_string())?;
        return Ok(Input::Quiver(ty.canonical_quiver()));
    }
    if let Some(q) = v.get("quiver") {
        return match q {
            Value::String(s) => SignedValuedQuiver::parse_dsl(s).map(Input::Quiver),
            _ => serde_json::from_value(q.clone()).map(Input::Quiver).map_err(|e| format!("invalid quiver: {e}")),
        };
    }
    if let Some(m) = v.get("matrix") {
        return serde_json::from_value(m.clone()).map(Input::Matrix).map_err(|e| format!("invalid matrix: {e}"));
    }
    if v.get("entries").is_some() {
        return serde_json::from_value(v.clone()).map(Input::Matrix).map_err(|e| format!("invalid matrix: {e}"));
    }
    if v.get("arrows").is_some() {
        return serde_json::from_value(v.clone()).map(Input::Quiver).map_err(|e| format!("invalid quiver: {e}"));
    }
    Err("expected a quiver, a matrix, or a Dynkin type".into())
}

/// Parse a 1-based mutation sequence such as `2,1,3` or `2 1 3` into
/// 0-based indices.
pub fn parse_sequence(s: &str) -> Result<Vec<usize>, String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| match p.parse::<usize>() {
            Ok(0) => Err("vertices are numbered from 1".to_string()),
            Ok(v) => Ok(v - 1),
            Err(e) => Err(format!("bad vertex {p:?}: {e}")),
        })
        .collect()
}
