//! Ring descriptors as JSON values.

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::{Field, RingDescriptor};
use crate::error::{Error, Result};

fn big(v: &Value, key: &str) -> Result<BigInt> {
    match v.get(key) {
        Some(Value::Number(n)) => n
            .to_string()
            .parse()
            .map_err(|_| Error::Parse(format!("'{}' must be an integer", key))),
        Some(Value::String(s)) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("'{}' must be an integer", key))),
        _ => Err(Error::Parse(format!("ring JSON is missing '{}'", key))),
    }
}

fn parse_field(s: &str) -> Result<Field> {
    match s {
        "Q" | "QQ" | "rat" => Ok(Field::Rationals),
        _ => {
            let p = s
                .strip_prefix('F')
                .or_else(|| s.strip_prefix("GF"))
                .and_then(|p| p.parse::<BigInt>().ok())
                .ok_or_else(|| Error::Parse(format!("unknown coefficient field '{}'", s)))?;
            match RingDescriptor::prime_field(p)? {
                RingDescriptor::PrimeField(p) => Ok(Field::Prime(p)),
                _ => unreachable!(),
            }
        }
    }
}

impl RingDescriptor {
    pub fn from_json(v: &Value) -> Result<Self> {
        let ty = v
            .get("type")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("ring JSON needs a string 'type'".into()))?;
        match ty {
            "int" => Ok(RingDescriptor::Integers),
            "rat" | "Q" => Ok(RingDescriptor::Rationals),
            "intmod" => RingDescriptor::intmod(big(v, "n")?),
            "fp" => RingDescriptor::prime_field(big(v, "p")?),
            "poly" => {
                let base = parse_field(v.get("base").and_then(Value::as_str).unwrap_or("Q"))?;
                let vars: Vec<String> = v
                    .get("vars")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Parse("poly ring needs 'vars'".into()))?
                    .iter()
                    .map(|x| x.as_str().map(str::to_string))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::Parse("variable names must be strings".into()))?;
                if vars.is_empty() {
                    return Err(Error::Parse("poly ring needs at least one variable".into()));
                }
                for (i, a) in vars.iter().enumerate() {
                    if vars[..i].contains(a) {
                        return Err(Error::Parse(format!("duplicate variable '{}'", a)));
                    }
                }
                Ok(RingDescriptor::Polynomial { base, vars })
            }
            "localization" => {
                let base = RingDescriptor::from_json(
                    v.get("base")
                        .ok_or_else(|| Error::Parse("localization needs 'base'".into()))?,
                )?;
                let f = match v.get("f") {
                    Some(Value::String(s)) => base.parse(s)?,
                    Some(Value::Number(n)) => base.parse(&n.to_string())?,
                    _ => return Err(Error::Parse("localization needs 'f'".into())),
                };
                Ok(base.localize(&f)?.ring)
            }
            other => Err(Error::Parse(format!("unknown ring type '{}'", other))),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            RingDescriptor::Integers => json!({"type": "int"}),
            RingDescriptor::Rationals => json!({"type": "rat"}),
            RingDescriptor::IntegersMod(n) => json!({"type": "intmod", "n": n.to_string()}),
            RingDescriptor::PrimeField(p) => json!({"type": "fp", "p": p.to_string()}),
            RingDescriptor::Polynomial { base, vars } => {
                json!({"type": "poly", "base": base.name(), "vars": vars})
            }
            RingDescriptor::Localization { base, f } => {
                json!({"type": "localization", "base": base.to_json(), "f": base.format(f)})
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for text in [
            r#"{"type":"int"}"#,
            r#"{"type":"intmod","n":6}"#,
            r#"{"type":"poly","base":"Q","vars":["x","y"]}"#,
            r#"{"type":"poly","base":"F5","vars":["t"]}"#,
            r#"{"type":"localization","base":{"type":"int"},"f":"2"}"#,
        ] {
            let v: Value = serde_json::from_str(text).unwrap();
            let r = RingDescriptor::from_json(&v).unwrap();
            assert_eq!(RingDescriptor::from_json(&r.to_json()).unwrap(), r);
        }
        let bad: Value = serde_json::from_str(r#"{"type":"intmod","n":1}"#).unwrap();
        assert!(RingDescriptor::from_json(&bad).is_err());
    }
}
