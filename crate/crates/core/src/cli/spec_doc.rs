//! JSON function specifications.
//!
//! Numeric literals are strings parsed as exact rationals; integer-valued
//! JSON numbers are accepted where a count or an exact value is expected.
//! Unknown keys are rejected, and errors name the offending field.

use crate::error::{Error, Result};
use crate::functions::{ClassicalFactor, ExpBase, FunctionSpec, RealParam, ZeroKind, ZeroSequence};
use crate::scalar::rational::{parse_rational, render_rational};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct SpecDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    scale: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    monomial_power: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gauss_a: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lin_b: Option<Value>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    product_factors: Vec<ProductDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    classical_factors: Vec<ClassicalDoc>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct ProductDoc {
    kind: String,
    #[serde(default)]
    params: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    count: Option<usize>,
    #[serde(default)]
    lambda: u8,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct ClassicalDoc {
    name: String,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    params: Map<String, Value>,
}

fn field_err(path: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_string(),
        message: message.into(),
    }
}

fn literal(v: &Value, path: &str) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        Value::Number(_) => Err(field_err(path, "non-integer numbers must be written as strings")),
        _ => Err(field_err(path, "expected a numeric string")),
    }
}

fn rational(v: &Value, path: &str) -> Result<BigRational> {
    let s = literal(v, path)?;
    parse_rational(&s).map_err(|_| field_err(path, format!("not a rational: `{s}`")))
}

fn opt_rational(v: &Option<Value>, path: &str, default: BigRational) -> Result<BigRational> {
    v.as_ref().map_or(Ok(default), |v| rational(v, path))
}

fn real_param(v: &Value, path: &str) -> Result<RealParam> {
    let s = literal(v, path)?;
    RealParam::parse(&s).map_err(|_| field_err(path, format!("not a rational or rational multiple of pi: `{s}`")))
}

fn check_keys(params: &Map<String, Value>, allowed: &[&str], path: &str) -> Result<()> {
    match params.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(field_err(&format!("{path}.params.{k}"), "unknown parameter")),
        None => Ok(()),
    }
}

fn need<'a>(params: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    params
        .get(key)
        .ok_or_else(|| field_err(&format!("{path}.params.{key}"), "missing parameter"))
}

fn product(doc: &ProductDoc, path: &str) -> Result<ZeroSequence> {
    let p = &doc.params;
    let pp = |k: &str| format!("{path}.params.{k}");
    let count = |path: &str| doc.count.ok_or_else(|| field_err(&format!("{path}.count"), "missing count"));
    let (kind, count) = match doc.kind.as_str() {
        "explicit" => {
            check_keys(p, &["zeros"], path)?;
            let zs = need(p, "zeros", path)?
                .as_array()
                .ok_or_else(|| field_err(&pp("zeros"), "expected a list"))?
                .iter()
                .enumerate()
                .map(|(i, v)| rational(v, &format!("{}[{i}]", pp("zeros"))))
                .collect::<Result<Vec<_>>>()?;
            let n = zs.len();
            if doc.count.is_some_and(|c| c != n) {
                return Err(field_err(&format!("{path}.count"), "count differs from the number of zeros"));
            }
            (ZeroKind::Explicit(zs), n)
        }
        "exp_growth" => {
            check_keys(p, &["base", "scale"], path)?;
            let base = match need(p, "base", path)? {
                Value::String(s) if s == "e" => ExpBase::E,
                v => ExpBase::Rational(rational(v, &pp("base"))?),
            };
            let scale = p.get("scale").map_or(Ok(BigRational::one()), |v| rational(v, &pp("scale")))?;
            (ZeroKind::ExpGrowth { scale, base }, count(path)?)
        }
        "power_log" => {
            check_keys(p, &["rho", "log_power"], path)?;
            let rho = rational(need(p, "rho", path)?, &pp("rho"))?;
            let log_power = match p.get("log_power") {
                None => 1,
                Some(v) => literal(v, &pp("log_power"))?
                    .parse()
                    .map_err(|_| field_err(&pp("log_power"), "expected a positive integer"))?,
            };
            (ZeroKind::PowerLog { rho, log_power }, count(path)?)
        }
        "arithmetic" => {
            check_keys(p, &["step"], path)?;
            let step = p.get("step").map_or(Ok(BigRational::one()), |v| rational(v, &pp("step")))?;
            (ZeroKind::Arithmetic { step }, count(path)?)
        }
        other => return Err(field_err(&format!("{path}.kind"), format!("unknown factor kind `{other}`"))),
    };
    ZeroSequence::new(kind, count, doc.lambda).map_err(|e| field_err(path, e.to_string()))
}

fn classical(doc: &ClassicalDoc, path: &str) -> Result<ClassicalFactor> {
    let p = &doc.params;
    let takes_params = matches!(doc.name.as_str(), "cos_affine" | "laguerre_family");
    check_keys(p, if takes_params { &["phase", "angle"] } else { &[] }, path)?;
    let get = |k: &str| {
        p.get(k)
            .map(|v| real_param(v, &format!("{path}.params.{k}")))
            .transpose()
    };
    ClassicalFactor::from_name(&doc.name, get("phase")?, get("angle")?)
        .map_err(|e| field_err(&format!("{path}.name"), e.to_string()))
}

/// Parses a JSON specification document.
pub fn parse_spec(text: &str) -> Result<FunctionSpec> {
    let doc: SpecDoc = serde_json::from_str(text).map_err(|e| {
        field_err(
            &format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let spec = FunctionSpec {
        scale: opt_rational(&doc.scale, "scale", BigRational::one())?,
        monomial_power: doc.monomial_power.unwrap_or(0),
        gauss_a: opt_rational(&doc.gauss_a, "gauss_a", BigRational::zero())?,
        lin_b: opt_rational(&doc.lin_b, "lin_b", BigRational::zero())?,
        product_factors: doc
            .product_factors
            .iter()
            .enumerate()
            .map(|(i, d)| product(d, &format!("product_factors[{i}]")))
            .collect::<Result<_>>()?,
        classical_factors: doc
            .classical_factors
            .iter()
            .enumerate()
            .map(|(i, d)| classical(d, &format!("classical_factors[{i}]")))
            .collect::<Result<_>>()?,
    };
    if spec.scale.is_zero() {
        return Err(field_err("scale", "scale must be nonzero"));
    }
    Ok(spec)
}

fn s(q: &BigRational) -> Value {
    Value::String(render_rational(q))
}

fn product_doc(z: &ZeroSequence) -> ProductDoc {
    let mut params = Map::new();
    let kind = match &z.kind {
        ZeroKind::Explicit(v) => {
            params.insert("zeros".into(), Value::Array(v.iter().map(s).collect()));
            "explicit"
        }
        ZeroKind::ExpGrowth { scale, base } => {
            let b = match base {
                ExpBase::E => Value::String("e".into()),
                ExpBase::Rational(r) => s(r),
            };
            params.insert("base".into(), b);
            params.insert("scale".into(), s(scale));
            "exp_growth"
        }
        ZeroKind::PowerLog { rho, log_power } => {
            params.insert("rho".into(), s(rho));
            params.insert("log_power".into(), Value::from(*log_power));
            "power_log"
        }
        ZeroKind::Arithmetic { step } => {
            params.insert("step".into(), s(step));
            "arithmetic"
        }
    };
    ProductDoc {
        kind: kind.into(),
        params,
        count: Some(z.count),
        lambda: z.lambda,
    }
}

fn classical_doc(f: &ClassicalFactor) -> ClassicalDoc {
    let mut params = Map::new();
    if let ClassicalFactor::CosAffine { phase, angle } | ClassicalFactor::LaguerreFamily { phase, angle } = f {
        params.insert("phase".into(), Value::String(phase.render()));
        params.insert("angle".into(), Value::String(angle.render()));
    }
    ClassicalDoc {
        name: f.name().into(),
        params,
    }
}

/// Canonical document for a specification; `parse_spec` inverts it.
pub fn emit_spec(spec: &FunctionSpec) -> String {
    let doc = SpecDoc {
        scale: Some(s(&spec.scale)),
        monomial_power: Some(spec.monomial_power),
        gauss_a: Some(s(&spec.gauss_a)),
        lin_b: Some(s(&spec.lin_b)),
        product_factors: spec.product_factors.iter().map(product_doc).collect(),
        classical_factors: spec.classical_factors.iter().map(classical_doc).collect(),
    };
    let v = serde_json::to_value(&doc).expect("serializable");
    serde_json::to_string(&v).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn examples() {
        let s = parse_spec(r#"{"gauss_a":"-1","classical_factors":[{"name":"exp"}]}"#).unwrap();
        assert_eq!(s.gauss_a, int(-1));
        assert_eq!(s.classical_factors, vec![ClassicalFactor::Exp]);
        let t = parse_spec(
            r#"{"gauss_a":"-1","product_factors":[{"kind":"exp_growth","params":{"base":"e"},"count":12,"lambda":0}]}"#,
        )
        .unwrap();
        assert_eq!(t.product_factors[0].count, 12);
        assert_eq!(
            t.product_factors[0].kind,
            ZeroKind::ExpGrowth {
                scale: int(1),
                base: ExpBase::E
            }
        );
        match parse_spec(r#"{"gauss_a":"bogus"}"#) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "gauss_a"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejections() {
        assert!(matches!(parse_spec(r#"{"gauss":"-1"}"#), Err(Error::Parse { .. })));
        match parse_spec(r#"{"product_factors":[{"kind":"spiral","count":2}]}"#) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "product_factors[0].kind"),
            other => panic!("{other:?}"),
        }
        match parse_spec(r#"{"product_factors":[{"kind":"arithmetic","params":{"stride":"1"},"count":2}]}"#) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "product_factors[0].params.stride"),
            other => panic!("{other:?}"),
        }
        match parse_spec(r#"{"classical_factors":[{"name":"bessel"}]}"#) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "classical_factors[0].name"),
            other => panic!("{other:?}"),
        }
        match parse_spec("{\n  \"gauss_a\": }") {
            Err(Error::Parse { path, .. }) => assert!(path.starts_with("line 2")),
            other => panic!("{other:?}"),
        }
        assert!(parse_spec(r#"{"gauss_a":0.5}"#).is_err());
    }

    #[test]
    fn round_trip() {
        let text = r#"{"scale":"3/2","monomial_power":1,"gauss_a":"-1/3","lin_b":"2",
            "product_factors":[{"kind":"explicit","params":{"zeros":["1","-5/2"]}},
                {"kind":"power_log","params":{"rho":"3/2"},"count":6,"lambda":1},
                {"kind":"exp_growth","params":{"base":"3","scale":"1/2"},"count":4}],
            "classical_factors":[{"name":"laguerre_family","params":{"phase":"1/2","angle":"pi/3"}},{"name":"cos_sqrt"}]}"#;
        let spec = parse_spec(text).unwrap();
        let again = parse_spec(&emit_spec(&spec)).unwrap();
        assert_eq!(spec, again);
        assert_eq!(emit_spec(&spec), emit_spec(&again));
    }
}
