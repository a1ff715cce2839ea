//! Parameter records: parsing from flag strings, signature checks and grid
//! expansion.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::CliError;

/// A complex number serialized as `{"re": …, "im": …}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cplx {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for Cplx {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<Cplx> for Complex64 {
    fn from(z: Cplx) -> Self {
        Complex64::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Real(f64),
    Complex(Cplx),
    Text(String),
}

/// Input echo keyed by flag name; `BTreeMap` keeps the order canonical.
pub type Params = BTreeMap<String, ParamValue>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Real,
    Complex,
    Text,
}

/// One accepted flag of a selector.
#[derive(Debug, Clone, Copy)]
pub struct Slot {
    pub name: &'static str,
    pub kind: Kind,
    pub required: bool,
}

pub const fn req(name: &'static str, kind: Kind) -> Slot {
    Slot {
        name,
        kind,
        required: true,
    }
}

pub const fn opt(name: &'static str, kind: Kind) -> Slot {
    Slot {
        name,
        kind,
        required: false,
    }
}

/// Parse `a`, `a+bi`, `a-bi`, `bi`, `-i` and friends; no spaces.
pub fn parse_complex(raw: &str) -> Option<Complex64> {
    let s = raw.trim();
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |t: &str| match t {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => t.parse::<f64>().ok(),
    };
    match split {
        Some(k) => Some(Complex64::new(body[..k].parse().ok()?, imag(&body[k..])?)),
        None => Some(Complex64::new(0.0, imag(body)?)),
    }
}

fn parse_one(name: &str, kind: Kind, raw: &str) -> Result<ParamValue, CliError> {
    let bad = |what: &str| CliError::Usage(format!("--{name}: expected {what}, got '{raw}'"));
    match kind {
        Kind::Real => raw
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .map(ParamValue::Real)
            .ok_or_else(|| bad("a finite real number")),
        Kind::Complex => parse_complex(raw)
            .filter(|z| z.is_finite())
            .map(|z| ParamValue::Complex(z.into()))
            .ok_or_else(|| bad("a complex number like 0.5+14.1i")),
        Kind::Text => Ok(ParamValue::Text(raw.trim().to_string())),
    }
}

/// Snap range points to 12 decimals so `0:1:0.1` yields `0.3`, not
/// `0.30000000000000004`.
fn snap(v: f64) -> f64 {
    (v * 1e12).round() / 1e12
}

fn parse_range(name: &str, raw: &str) -> Result<Vec<f64>, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "--{name}: expected start:stop:step with step > 0, got '{raw}'"
        ))
    };
    let parts: Vec<f64> = raw
        .split(':')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    let [a, b, h] = parts[..] else {
        return Err(bad());
    };
    if !(h > 0.0) || !(b >= a) || !a.is_finite() || !b.is_finite() {
        return Err(bad());
    }
    let n = ((b - a) / h + 1e-9).floor() as usize;
    if n > 1_000_000 {
        return Err(CliError::Usage(format!(
            "--{name}: range has more than a million points"
        )));
    }
    Ok((0..=n).map(|k| snap(a + k as f64 * h)).collect())
}

/// A comma-separated list; real slots also take `start:stop:step` ranges.
pub fn parse_list(name: &str, kind: Kind, raw: &str) -> Result<Vec<ParamValue>, CliError> {
    let mut out = Vec::new();
    for item in raw.split(',') {
        if kind == Kind::Real && item.contains(':') {
            out.extend(parse_range(name, item)?.into_iter().map(ParamValue::Real));
        } else {
            out.push(parse_one(name, kind, item)?);
        }
    }
    Ok(out)
}

/// Raw flag strings, in flag-name order, checked against `slots`: unknown
/// flags and missing required ones are usage errors.
pub fn check_signature<'a>(
    context: &str,
    slots: &[Slot],
    raw: &'a [(&'static str, String)],
) -> Result<Vec<(Slot, &'a str)>, CliError> {
    let mut out = Vec::new();
    for (name, value) in raw {
        let slot = slots
            .iter()
            .find(|s| s.name == *name)
            .ok_or_else(|| CliError::Usage(format!("--{name} is not a parameter of {context}")))?;
        out.push((*slot, value.as_str()));
    }
    for slot in slots.iter().filter(|s| s.required) {
        if !raw.iter().any(|(n, _)| *n == slot.name) {
            return Err(CliError::Usage(format!(
                "--{} is required for {context}",
                slot.name
            )));
        }
    }
    Ok(out)
}

/// Single-valued parameter record.
pub fn parse_point(
    context: &str,
    slots: &[Slot],
    raw: &[(&'static str, String)],
) -> Result<Params, CliError> {
    let mut params = Params::new();
    for (slot, value) in check_signature(context, slots, raw)? {
        let mut list = parse_list(slot.name, slot.kind, value)?;
        if list.len() != 1 {
            return Err(CliError::Usage(format!(
                "--{}: expected a single value, got '{value}'",
                slot.name
            )));
        }
        params.insert(slot.name.to_string(), list.remove(0));
    }
    Ok(params)
}

/// Cartesian product of per-flag value lists, in lexicographic order over
/// flag names (the first name varies slowest).
pub fn parse_grid(
    context: &str,
    slots: &[Slot],
    raw: &[(&'static str, String)],
) -> Result<Vec<Params>, CliError> {
    let mut axes: BTreeMap<&str, Vec<ParamValue>> = BTreeMap::new();
    for (slot, value) in check_signature(context, slots, raw)? {
        axes.insert(slot.name, parse_list(slot.name, slot.kind, value)?);
    }
    let mut rows = vec![Params::new()];
    for (name, values) in axes {
        rows = rows
            .into_iter()
            .flat_map(|row| {
                values.iter().map(move |v| {
                    let mut r = row.clone();
                    r.insert(name.to_string(), v.clone());
                    r
                })
            })
            .collect();
    }
    Ok(rows)
}

/// Typed accessors over a validated record.
pub trait ParamsExt {
    fn real(&self, name: &str) -> Option<f64>;
    fn complex(&self, name: &str) -> Option<Complex64>;
    fn text(&self, name: &str) -> Option<&str>;

    fn need_real(&self, name: &str, context: &str) -> Result<f64, CliError> {
        self.real(name)
            .ok_or_else(|| CliError::Usage(format!("--{name} is required for {context}")))
    }

    fn need_complex(&self, name: &str, context: &str) -> Result<Complex64, CliError> {
        self.complex(name)
            .ok_or_else(|| CliError::Usage(format!("--{name} is required for {context}")))
    }
}

impl ParamsExt for Params {
    fn real(&self, name: &str) -> Option<f64> {
        match self.get(name)? {
            ParamValue::Real(v) => Some(*v),
            _ => None,
        }
    }

    fn complex(&self, name: &str) -> Option<Complex64> {
        match self.get(name)? {
            ParamValue::Complex(z) => Some((*z).into()),
            ParamValue::Real(v) => Some(Complex64::new(*v, 0.0)),
            ParamValue::Text(_) => None,
        }
    }

    fn text(&self, name: &str) -> Option<&str> {
        match self.get(name)? {
            ParamValue::Text(t) => Some(t),
            _ => None,
        }
    }
}
