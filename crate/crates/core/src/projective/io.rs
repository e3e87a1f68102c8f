//! JSON design files.
//!
//! ```json
//! { "field": "C", "n": 1, "backend": "exact",
//!   "points": [["1", "0"], [{"cyclo": {"order": 5, "coeffs": ["0", "1"]}}, "1"]] }
//! ```
//!
//! A scalar is a decimal or `"p/q"` string, `{"re": .., "im": ..}`,
//! `{"cyclo": {"order": m, "coeffs": [..]}}` or `{"quat": [w, x, y, z]}`.
//! Float values are written with the shortest representation that parses
//! back to the same `f64`.

use std::path::Path;

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use super::pointset::{Backend, PointSet, Points};
use crate::error::{Error, Result};
use crate::exactnum::{format_rational, parse_rational, Cyclotomic, Quaternion, Rational};
use crate::jacobi::Field;

pub fn load_design(path: impl AsRef<Path>) -> Result<PointSet> {
    let text = std::fs::read_to_string(path.as_ref())?;
    design_from_json(&text)
}

pub fn save_design(ps: &PointSet, path: impl AsRef<Path>) -> Result<()> {
    let mut text = design_to_json(ps);
    text.push('\n');
    std::fs::write(path.as_ref(), text)?;
    Ok(())
}

pub fn design_to_json(ps: &PointSet) -> String {
    let points: Vec<Value> = match ps.points() {
        Points::Cyclotomic(rows) => rows
            .iter()
            .map(|r| Value::Array(r.iter().map(cyclo_value).collect()))
            .collect(),
        Points::Quaternion(rows) => rows
            .iter()
            .map(|r| {
                Value::Array(
                    r.iter()
                        .map(|q| json!({ "quat": q.components().iter().map(format_rational).collect::<Vec<_>>() }))
                        .collect(),
                )
            })
            .collect(),
        Points::FloatComplex(rows) => rows
            .iter()
            .map(|r| {
                Value::Array(
                    r.iter()
                        .map(|z| {
                            if z.im == 0.0 && ps.field() == Field::R {
                                Value::String(float_text(z.re))
                            } else {
                                json!({ "re": float_text(z.re), "im": float_text(z.im) })
                            }
                        })
                        .collect(),
                )
            })
            .collect(),
        Points::FloatQuaternion(rows) => rows
            .iter()
            .map(|r| {
                Value::Array(
                    r.iter()
                        .map(|q| json!({ "quat": q.components().iter().map(|x| float_text(*x)).collect::<Vec<_>>() }))
                        .collect(),
                )
            })
            .collect(),
    };
    let doc = json!({
        "field": ps.field().symbol(),
        "n": ps.n(),
        "backend": ps.backend().name(),
        "points": points,
    });
    serde_json::to_string_pretty(&doc).expect("design serialises")
}

fn float_text(x: f64) -> String {
    format!("{x:?}")
}

fn cyclo_value(z: &Cyclotomic) -> Value {
    match z.to_rational() {
        Some(r) => Value::String(format_rational(&r)),
        None => json!({
            "cyclo": {
                "order": z.order(),
                "coeffs": z.coeffs().iter().map(format_rational).collect::<Vec<_>>(),
            }
        }),
    }
}

/// A parsed scalar before it is committed to a backend.
enum Scalar {
    Real(String),
    Complex(String, String),
    Cyclo(Cyclotomic),
    Quat([String; 4]),
}

pub fn design_from_json(text: &str) -> Result<PointSet> {
    let doc: Value = serde_json::from_str(text).map_err(|e| {
        let msg = e.to_string();
        let msg = msg.split(" at line ").next().unwrap_or(&msg).to_string();
        Error::parse(format!("line {}, column {}", e.line(), e.column()), msg)
    })?;
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::parse("document", "expected a JSON object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "field" | "n" | "backend" | "points") {
            return Err(Error::parse(format!("field \"{key}\""), "unknown field"));
        }
    }
    let field: Field = required_str(obj, "field")?.parse()?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .filter(|&n| n >= 1 && n <= u32::MAX as u64)
        .ok_or_else(|| Error::parse("\"n\"", "expected a positive integer"))? as u32;
    let backend = match required_str(obj, "backend")? {
        "exact" => Backend::Exact,
        "float" => Backend::Float,
        other => {
            return Err(Error::parse(
                "\"backend\"",
                format!("expected \"exact\" or \"float\", got \"{other}\""),
            ))
        }
    };
    let rows = obj
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("\"points\"", "expected an array of points"))?;
    if rows.is_empty() {
        return Err(Error::parse("\"points\"", "no points"));
    }
    let mut scalars: Vec<Vec<Scalar>> = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::parse(format!("points[{i}]"), "expected an array"))?;
        if row.len() != n as usize + 1 {
            return Err(Error::parse(
                format!("points[{i}]"),
                format!("expected {} coordinates, found {}", n + 1, row.len()),
            ));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, v)| parse_scalar(v, &format!("points[{i}][{j}]")))
            .collect::<Result<Vec<_>>>()?;
        scalars.push(parsed);
    }
    let points = commit(field, backend, scalars)?;
    PointSet::new(field, n, points).map_err(|e| match e {
        Error::ZeroPoint { index } => Error::parse(format!("points[{index}]"), "zero vector"),
        Error::InvalidPoint { index, reason } => Error::parse(format!("points[{index}]"), reason),
        other => other,
    })
}

fn required_str<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a str> {
    obj.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| Error::parse(format!("\"{key}\""), "expected a string"))
}

fn component(v: &Value, loc: &str) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(x) => Ok(x.to_string()),
        _ => Err(Error::parse(loc, "expected a number or numeric string")),
    }
}

fn parse_scalar(v: &Value, loc: &str) -> Result<Scalar> {
    match v {
        Value::String(_) | Value::Number(_) => Ok(Scalar::Real(component(v, loc)?)),
        Value::Object(o) if o.contains_key("cyclo") => {
            let c = o["cyclo"]
                .as_object()
                .ok_or_else(|| Error::parse(loc, "\"cyclo\" must be an object"))?;
            let order = c
                .get("order")
                .and_then(Value::as_u64)
                .filter(|&m| m >= 1)
                .ok_or_else(|| Error::parse(loc, "cyclo order must be a positive integer"))?;
            let coeffs = c
                .get("coeffs")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::parse(loc, "cyclo coeffs must be an array"))?
                .iter()
                .map(|x| component(x, loc).and_then(|s| located(parse_rational(&s), loc)))
                .collect::<Result<Vec<Rational>>>()?;
            Ok(Scalar::Cyclo(Cyclotomic::from_coeffs(order, &coeffs)))
        }
        Value::Object(o) if o.contains_key("quat") => {
            let q = o["quat"]
                .as_array()
                .filter(|a| a.len() == 4)
                .ok_or_else(|| Error::parse(loc, "\"quat\" must hold four components"))?;
            Ok(Scalar::Quat([
                component(&q[0], loc)?,
                component(&q[1], loc)?,
                component(&q[2], loc)?,
                component(&q[3], loc)?,
            ]))
        }
        Value::Object(o) if o.contains_key("re") || o.contains_key("im") => {
            let re = o
                .get("re")
                .map_or(Ok("0".to_string()), |x| component(x, loc))?;
            let im = o
                .get("im")
                .map_or(Ok("0".to_string()), |x| component(x, loc))?;
            Ok(Scalar::Complex(re, im))
        }
        _ => Err(Error::parse(loc, "unrecognised scalar")),
    }
}

fn located<T>(r: Result<T>, loc: &str) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { message, location } => Error::parse(loc, format!("{location}: {message}")),
        other => other,
    })
}

fn exact(s: &str, loc: &str) -> Result<Rational> {
    located(parse_rational(s), loc)
}

fn float(s: &str, loc: &str) -> Result<f64> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Error::parse(loc, format!("\"{s}\" is not a finite float")))
}

fn commit(field: Field, backend: Backend, rows: Vec<Vec<Scalar>>) -> Result<Points> {
    let mixed = |i: usize, j: usize, what: &str| {
        Error::parse(
            format!("points[{i}][{j}]"),
            format!(
                "{what} scalar mixed into a {} {field} design",
                backend.name()
            ),
        )
    };
    let loc = |i: usize, j: usize| format!("points[{i}][{j}]");
    match (backend, field) {
        (Backend::Exact, Field::H) => {
            let mut out = Vec::new();
            for (i, r) in rows.iter().enumerate() {
                let mut row = Vec::new();
                for (j, s) in r.iter().enumerate() {
                    row.push(match s {
                        Scalar::Real(x) => Quaternion::real(exact(x, &loc(i, j))?),
                        Scalar::Quat([w, x, y, z]) => Quaternion::new(
                            exact(w, &loc(i, j))?,
                            exact(x, &loc(i, j))?,
                            exact(y, &loc(i, j))?,
                            exact(z, &loc(i, j))?,
                        ),
                        Scalar::Complex(..) => return Err(mixed(i, j, "complex")),
                        Scalar::Cyclo(_) => return Err(mixed(i, j, "cyclotomic")),
                    });
                }
                out.push(row);
            }
            Ok(Points::Quaternion(out))
        }
        (Backend::Exact, _) => {
            let i4 = Cyclotomic::zeta_power(4, 1);
            let mut out = Vec::new();
            for (i, r) in rows.iter().enumerate() {
                let mut row = Vec::new();
                for (j, s) in r.iter().enumerate() {
                    row.push(match s {
                        Scalar::Real(x) => Cyclotomic::from_rational(&exact(x, &loc(i, j))?),
                        Scalar::Complex(re, im) => {
                            let re = Cyclotomic::from_rational(&exact(re, &loc(i, j))?);
                            let im = Cyclotomic::from_rational(&exact(im, &loc(i, j))?);
                            &re + &(&im * &i4)
                        }
                        Scalar::Cyclo(z) => z.clone(),
                        Scalar::Quat(_) => return Err(mixed(i, j, "quaternion")),
                    });
                }
                out.push(row);
            }
            Ok(Points::Cyclotomic(out))
        }
        (Backend::Float, Field::H) => {
            let mut out = Vec::new();
            for (i, r) in rows.iter().enumerate() {
                let mut row = Vec::new();
                for (j, s) in r.iter().enumerate() {
                    let l = loc(i, j);
                    row.push(match s {
                        Scalar::Real(x) => Quaternion::real(float(x, &l)?),
                        Scalar::Complex(re, im) => {
                            Quaternion::new(float(re, &l)?, float(im, &l)?, 0.0, 0.0)
                        }
                        Scalar::Quat([w, x, y, z]) => Quaternion::new(
                            float(w, &l)?,
                            float(x, &l)?,
                            float(y, &l)?,
                            float(z, &l)?,
                        ),
                        Scalar::Cyclo(_) => return Err(mixed(i, j, "cyclotomic")),
                    });
                }
                out.push(row);
            }
            Ok(Points::FloatQuaternion(out))
        }
        (Backend::Float, _) => {
            let mut out = Vec::new();
            for (i, r) in rows.iter().enumerate() {
                let mut row = Vec::new();
                for (j, s) in r.iter().enumerate() {
                    let l = loc(i, j);
                    row.push(match s {
                        Scalar::Real(x) => Complex64::new(float(x, &l)?, 0.0),
                        Scalar::Complex(re, im) => Complex64::new(float(re, &l)?, float(im, &l)?),
                        Scalar::Quat(_) => return Err(mixed(i, j, "quaternion")),
                        Scalar::Cyclo(_) => return Err(mixed(i, j, "cyclotomic")),
                    });
                }
                out.push(row);
            }
            Ok(Points::FloatComplex(out))
        }
    }
}
