//! Report assembly and JSON / CSV / text emission.
//!
//! JSON objects use sorted keys and rationals are strings, so identical
//! inputs give identical bytes.

use crate::error::{Error, Result};
use crate::scalar::{Backend, Coefficient};
use crate::series::TruncatedSeries;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// One coefficient row: `n, value, error, sign`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffRow {
    pub n: usize,
    pub value: String,
    pub error: String,
    pub sign: char,
}

pub fn coeff_rows<C: Coefficient>(s: &TruncatedSeries<C>) -> Vec<CoeffRow> {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| CoeffRow {
            n,
            value: c.render(),
            error: render_error(c),
            sign: c.certified_sign().symbol(),
        })
        .collect()
}

fn render_error<C: Coefficient>(c: &C) -> String {
    let e = c.error_bound();
    if e.is_zero() {
        "0".into()
    } else {
        crate::scalar::rational::format_sci(&e.to_rational(), 3)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: Vec<String>,
    pub digest: String,
    pub backend: Option<Backend>,
    pub sections: Map<String, Value>,
    pub rows: Option<Vec<CoeffRow>>,
    /// Plain-text body used by the text format when present.
    pub text: Option<String>,
    pub counter_finding: bool,
}

impl Report {
    pub fn new(command: Vec<String>, digest: String) -> Self {
        Report {
            command,
            digest,
            backend: None,
            sections: Map::new(),
            rows: None,
            text: None,
            counter_finding: false,
        }
    }

    pub fn section(&mut self, key: &str, v: Value) {
        self.sections.insert(key.to_string(), v);
    }

    pub fn to_json(&self) -> Value {
        let mut m = self.sections.clone();
        m.insert("command".into(), Value::from(self.command.clone()));
        m.insert("inputDigest".into(), Value::from(self.digest.clone()));
        m.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
        m.insert("counterFinding".into(), Value::from(self.counter_finding));
        let (backend, precision) = match self.backend {
            None | Some(Backend::Exact) => ("exact".to_string(), Value::Null),
            Some(Backend::Ball { precision }) => ("ball".to_string(), Value::from(precision)),
        };
        m.insert("backend".into(), Value::from(backend));
        m.insert("precision".into(), precision);
        if let Some(rows) = &self.rows {
            m.insert(
                "coefficients".into(),
                Value::Array(
                    rows.iter()
                        .map(|r| {
                            let mut o = Map::new();
                            o.insert("n".into(), Value::from(r.n));
                            o.insert("value".into(), Value::from(r.value.clone()));
                            o.insert("error".into(), Value::from(r.error.clone()));
                            o.insert("sign".into(), Value::from(r.sign.to_string()));
                            Value::Object(o)
                        })
                        .collect(),
                ),
            );
        }
        Value::Object(m)
    }
}

/// A float for reports: finite values as numbers, infinities as `"inf"`/`"-inf"`.
pub fn float(x: f64) -> Value {
    if x.is_finite() {
        Value::from(x)
    } else if x.is_nan() {
        Value::Null
    } else if x > 0.0 {
        Value::from("inf")
    } else {
        Value::from("-inf")
    }
}

pub fn opt_float(x: Option<f64>) -> Value {
    x.map_or(Value::Null, float)
}

pub fn samples(v: &[(usize, f64)]) -> Value {
    Value::Array(v.iter().map(|&(n, x)| Value::Array(vec![Value::from(n), float(x)])).collect())
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::Array(a) => out.push((
            prefix.to_string(),
            a.iter().map(scalar_text).collect::<Vec<_>>().join(" "),
        )),
        x => out.push((prefix.to_string(), scalar_text(x))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn emit_report(r: &Report, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&r.to_json()).map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            Ok(s.into_bytes())
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(e.to_string());
            match &r.rows {
                Some(rows) => {
                    w.write_record(["n", "value", "error", "sign"]).map_err(io)?;
                    for row in rows {
                        w.write_record([row.n.to_string(), row.value.clone(), row.error.clone(), row.sign.to_string()])
                            .map_err(io)?;
                    }
                }
                None => {
                    w.write_record(["key", "value"]).map_err(io)?;
                    let mut flat = Vec::new();
                    flatten("", &r.to_json(), &mut flat);
                    for (k, v) in flat {
                        w.write_record([k, v]).map_err(io)?;
                    }
                }
            }
            w.into_inner().map_err(|e| Error::Io(e.to_string()))
        }
        Format::Text => {
            let body = match &r.text {
                Some(t) => t.clone(),
                None => {
                    let mut flat = Vec::new();
                    flatten("", &Value::Object(r.sections.clone()), &mut flat);
                    flat.into_iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>().join("\n")
                }
            };
            Ok(format!("{body}\n").into_bytes())
        }
    }
}
