//! Result records and their JSON / CSV serializations.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::params::{Cplx, ParamValue, Params};
use super::CliError;
use crate::numerics::QuadratureSpec;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub version: String,
    /// Present only when timing was requested, so reruns stay byte-identical.
    pub wall_ms: Option<f64>,
    pub quadrature: QuadratureSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub input: Params,
    pub value: Cplx,
    pub err_estimate: Option<f64>,
    pub converged: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residuals: Option<BTreeMap<String, f64>>,
    pub meta: Meta,
}

impl ResultRecord {
    pub fn new(
        input: Params,
        value: Cplx,
        err_estimate: f64,
        converged: bool,
        q: &QuadratureSpec,
    ) -> Self {
        Self {
            input,
            value,
            err_estimate: err_estimate.is_finite().then_some(err_estimate),
            converged,
            residuals: None,
            meta: Meta {
                version: VERSION.to_string(),
                wall_ms: None,
                quadrature: *q,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records hold only finite numbers")
    }

    pub fn from_json(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }
}

/// One compact JSON object per line.
pub fn to_json_lines(records: &[ResultRecord]) -> String {
    records.iter().map(|r| r.to_json() + "\n").collect()
}

pub fn from_json_lines(text: &str) -> serde_json::Result<Vec<ResultRecord>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(ResultRecord::from_json)
        .collect()
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}

fn io(e: csv::Error) -> CliError {
    CliError::Io(e.to_string())
}

/// Input columns (complex inputs as `name_re,name_im`), then `value_re`,
/// `value_im`, `err_estimate`, `converged`, then any residual columns.
pub fn to_csv(records: &[ResultRecord]) -> Result<String, CliError> {
    let mut inputs: BTreeMap<&str, bool> = BTreeMap::new();
    let mut residuals = BTreeSet::new();
    for r in records {
        for (k, v) in &r.input {
            let complex = matches!(v, ParamValue::Complex(_));
            *inputs.entry(k).or_insert(complex) |= complex;
        }
        residuals.extend(
            r.residuals
                .iter()
                .flat_map(|m| m.keys().map(String::as_str)),
        );
    }
    let mut header = Vec::new();
    for (k, complex) in &inputs {
        if *complex {
            header.push(format!("{k}_re"));
            header.push(format!("{k}_im"));
        } else {
            header.push(k.to_string());
        }
    }
    header.extend(["value_re", "value_im", "err_estimate", "converged"].map(String::from));
    header.extend(residuals.iter().map(|k| k.to_string()));

    let mut w = csv_writer();
    w.write_record(&header).map_err(io)?;
    for r in records {
        let mut row = Vec::with_capacity(header.len());
        for (k, complex) in &inputs {
            match (r.input.get(*k), complex) {
                (Some(ParamValue::Complex(z)), _) => row.extend([fmt_float(z.re), fmt_float(z.im)]),
                (Some(ParamValue::Real(v)), true) => row.extend([fmt_float(*v), fmt_float(0.0)]),
                (Some(ParamValue::Real(v)), false) => row.push(fmt_float(*v)),
                (Some(ParamValue::Text(t)), _) => row.push(t.clone()),
                (None, true) => row.extend([String::new(), String::new()]),
                (None, false) => row.push(String::new()),
            }
        }
        row.push(fmt_float(r.value.re));
        row.push(fmt_float(r.value.im));
        row.push(r.err_estimate.map(fmt_float).unwrap_or_default());
        row.push(r.converged.to_string());
        for k in &residuals {
            let v = r.residuals.as_ref().and_then(|m| m.get(*k));
            row.push(v.map(|v| fmt_float(*v)).unwrap_or_default());
        }
        w.write_record(&row).map_err(io)?;
    }
    finish(w)
}

/// Arbitrary rows of floats under a fixed header.
pub fn float_table_csv(header: &[&str], rows: &[Vec<f64>]) -> Result<String, CliError> {
    let mut w = csv_writer();
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row.iter().map(|v| fmt_float(*v)))
            .map_err(io)?;
    }
    finish(w)
}

/// Parse CSV text back into a header and string cells.
pub fn read_csv(text: &str) -> Result<(Vec<String>, Vec<Vec<String>>), CliError> {
    let mut r = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let header = r.headers().map_err(io)?.iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.map(|rec| rec.iter().map(String::from).collect()))
        .collect::<Result<_, _>>()
        .map_err(io)?;
    Ok((header, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ResultRecord {
        let mut input = Params::new();
        input.insert("fn".into(), ParamValue::Text("zeta".into()));
        input.insert("s".into(), ParamValue::Complex(Cplx { re: 0.5, im: 14.1 }));
        input.insert("lambda".into(), ParamValue::Real(0.1));
        let mut r = ResultRecord::new(
            input,
            Cplx {
                re: 0.1 + 0.2,
                im: -1.0 / 3.0,
            },
            1e-13,
            true,
            &QuadratureSpec::default(),
        );
        r.residuals = Some(BTreeMap::from([("rel".to_string(), 2.5e-15)]));
        r
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let text = r.to_json();
        let back = ResultRecord::from_json(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
        assert!(text.contains(r#""value":{"re":"#));
    }

    #[test]
    fn nan_error_becomes_null() {
        let r = ResultRecord::new(
            Params::new(),
            Cplx { re: 1.0, im: 0.0 },
            f64::NAN,
            false,
            &Default::default(),
        );
        assert!(r.to_json().contains(r#""err_estimate":null"#));
    }

    #[test]
    fn csv_floats_round_trip() {
        let r = sample();
        let text = to_csv(std::slice::from_ref(&r)).unwrap();
        let (header, rows) = read_csv(&text).unwrap();
        let col = |name: &str| header.iter().position(|h| h == name).unwrap();
        let re: f64 = rows[0][col("value_re")].parse().unwrap();
        assert_eq!(re.to_bits(), r.value.re.to_bits());
        assert_eq!(rows[0][col("s_im")].parse::<f64>().unwrap(), 14.1);
        assert!(text.ends_with('\n') && !text.contains('\r'));
    }
}
