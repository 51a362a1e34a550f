//! JSON form of terms and presentations.
//!
//! A term is `{"or":[{"and":["a","b"]}, ...]}`; a plain string in the
//! textual syntax (`"a&b | c"`) is accepted on input as well.

use serde_json::{json, Value};

use super::{DLatticePresentation, LatticeTerm};
use crate::error::{Error, Result};

impl LatticeTerm {
    pub fn to_json(&self) -> Value {
        let clauses: Vec<Value> = self
            .clauses()
            .iter()
            .map(|c| json!({ "and": c.iter().collect::<Vec<_>>() }))
            .collect();
        json!({ "or": clauses })
    }

    pub fn from_json(v: &Value) -> Result<LatticeTerm> {
        if let Some(s) = v.as_str() {
            return s.parse();
        }
        let bad = || Error::Parse(format!("bad lattice term: {}", v));
        let clauses = v.get("or").and_then(Value::as_array).ok_or_else(bad)?;
        let mut out = Vec::new();
        for c in clauses {
            let names = c.get("and").and_then(Value::as_array).ok_or_else(bad)?;
            let set = names
                .iter()
                .map(|n| n.as_str().map(str::to_string).ok_or_else(bad))
                .collect::<Result<_>>()?;
            out.push(set);
        }
        Ok(LatticeTerm::from_clauses(out).normalize())
    }
}

impl DLatticePresentation {
    /// Reads `{"generators":[...],"relations":[[lhs,rhs],...]}`. Any
    /// `"orientation"` field is ignored here.
    pub fn from_json(v: &Value) -> Result<DLatticePresentation> {
        let gens = v
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("lattice needs a \"generators\" array".into()))?
            .iter()
            .map(|g| {
                g.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::Parse(format!("generator is not a string: {}", g)))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut rels = Vec::new();
        if let Some(rs) = v.get("relations") {
            let rs = rs
                .as_array()
                .ok_or_else(|| Error::Parse("\"relations\" must be an array".into()))?;
            for r in rs {
                match r.as_array().map(Vec::as_slice) {
                    Some([a, b]) => rels.push((LatticeTerm::from_json(a)?, LatticeTerm::from_json(b)?)),
                    _ => return Err(Error::Parse(format!("relation must be a pair: {}", r))),
                }
            }
        }
        DLatticePresentation::new(gens, rels)
    }

    pub fn to_json(&self) -> Result<Value> {
        let rels = self.relations().ok_or_else(|| {
            Error::Unsupported("an oracle-backed lattice has no relation list".into())
        })?;
        let rels: Vec<Value> = rels
            .iter()
            .map(|(a, b)| json!([a.to_json(), b.to_json()]))
            .collect();
        Ok(json!({ "generators": self.generators(), "relations": rels }))
    }
}
