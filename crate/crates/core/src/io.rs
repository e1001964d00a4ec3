//! JSON interchange: r-set files, map files and the report documents
//! written by the command-line tool.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::algebra::HomologyResult;
use crate::error::{Error, Result};
use crate::hom::HomPoset;
use crate::rset::{RMap, RSet};
use crate::sing::TruncatedSimplicialSet;
use crate::strong::Core;
use crate::Int;

/// `{"r": 2, "vertices": ["a", "b"], "relation": [["a", "b"]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RSetFile {
    pub r: usize,
    pub vertices: Vec<String>,
    pub relation: Vec<Vec<String>>,
}

impl RSetFile {
    pub fn from_rset(x: &RSet) -> Self {
        RSetFile {
            r: x.arity(),
            vertices: x.names().to_vec(),
            relation: x.tuples().iter().map(|t| x.tuple_names(t)).collect(),
        }
    }

    pub fn to_rset(&self) -> Result<RSet> {
        RSet::new(self.r, self.vertices.clone(), self.relation.clone())
    }
}

pub fn parse_rset(text: &str) -> Result<RSet> {
    serde_json::from_str::<RSetFile>(text)?.to_rset()
}

fn with_path<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

pub fn read_rset(path: &Path) -> Result<RSet> {
    with_path(path, std::fs::read_to_string(path).map_err(Error::from).and_then(|t| parse_rset(&t)))
}

pub fn rset_to_json(x: &RSet) -> Value {
    serde_json::to_value(RSetFile::from_rset(x)).expect("r-set files serialize")
}

/// A map as an object from domain vertex names to codomain vertex names.
pub fn map_to_json(f: &RMap, x: &RSet, y: &RSet) -> Value {
    Value::Object(
        f.named(x, y)
            .into_iter()
            .map(|(a, b)| (a.to_string(), Value::String(b.to_string())))
            .collect(),
    )
}

pub fn parse_map(text: &str, x: &RSet, y: &RSet) -> Result<RMap> {
    let object: Map<String, Value> = serde_json::from_str(text)?;
    let mut pairs = Vec::with_capacity(object.len());
    for (k, v) in &object {
        let Value::String(target) = v else {
            return Err(Error::Invalid(format!("image of `{k}` must be a vertex name")));
        };
        pairs.push((k.as_str(), target.as_str()));
    }
    let f = RMap::from_names(x, y, pairs)?;
    if !crate::rset::is_rmap(x, y, f.images())? {
        let witness = x
            .tuples()
            .iter()
            .find(|t| !y.contains(&t.iter().map(|&v| f.apply(v)).collect::<Vec<_>>()))
            .map(|t| x.tuple_names(t))
            .unwrap_or_default();
        return Err(Error::NotAMap(witness));
    }
    Ok(f)
}

pub fn read_map(path: &Path, x: &RSet, y: &RSet) -> Result<RMap> {
    with_path(path, std::fs::read_to_string(path).map_err(Error::from).and_then(|t| parse_map(&t, x, y)))
}

/// `{"elements": [{"v": ["w", ...]}, ...], "leq": [[i, j], ...]}`, listing
/// only the strict relations.
pub fn poset_to_json(poset: &HomPoset, x: &RSet, y: &RSet) -> Value {
    let elements: Vec<Value> = poset
        .elements()
        .iter()
        .map(|e| {
            Value::Object(
                e.named(x, y)
                    .into_iter()
                    .map(|(v, images)| (v, json!(images)))
                    .collect(),
            )
        })
        .collect();
    json!({ "elements": elements, "leq": poset.strict_pairs() })
}

pub fn sing_to_json(s: &TruncatedSimplicialSet) -> Value {
    let (x, y) = (s.source(), s.target());
    let simplices: Vec<Value> = (0..=s.dim_bound())
        .map(|n| {
            Value::Array(
                s.simplices(n)
                    .map(|simplex| {
                        Value::Array(s.simplex_maps(simplex).into_iter().map(|f| map_to_json(f, x, y)).collect())
                    })
                    .collect(),
            )
        })
        .collect();
    json!({ "dim_bound": s.dim_bound(), "counts": s.counts(), "simplices": simplices })
}

fn integer_json(t: &Int) -> Value {
    i64::try_from(t).map_or_else(|_| Value::String(t.to_string()), Value::from)
}

pub fn homology_to_json(h: &HomologyResult<Int>) -> Value {
    let groups: Vec<Value> = h
        .groups
        .iter()
        .map(|g| {
            json!({
                "degree": g.degree,
                "betti": g.betti,
                "torsion": g.torsion.iter().map(integer_json).collect::<Vec<_>>(),
                "trusted": g.trusted,
                "text": g.to_string(),
            })
        })
        .collect();
    json!({ "groups": groups })
}

pub fn core_to_json(c: &Core) -> Value {
    json!({ "core": rset_to_json(&c.core), "folds": c.folds })
}
