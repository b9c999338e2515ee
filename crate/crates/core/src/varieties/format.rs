//! JSON document format for varieties.
//!
//! ```json
//! {
//!   "name": "scroll:2,2", "n": 2, "r": 5, "is_cone": false, "degree": 4,
//!   "coords": [[{"c": "1", "e": [0, 0]}], [{"c": "1", "e": [1, 0]}], ...]
//! }
//! ```
//!
//! Coefficients are decimal strings so that any integer size round-trips.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::Variety;
use crate::error::{Error, Result};
use crate::polymap::{Poly, PolyMap, Term};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VarietyDoc {
    name: String,
    n: usize,
    r: usize,
    is_cone: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree: Option<u64>,
    coords: Vec<Vec<TermDoc>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    c: String,
    e: Vec<u32>,
}

pub fn save_variety(v: &Variety) -> String {
    let doc = VarietyDoc {
        name: v.name().to_string(),
        n: v.n(),
        r: v.r(),
        is_cone: v.is_cone(),
        degree: v.degree(),
        coords: v
            .map()
            .coords()
            .iter()
            .map(|p| {
                p.terms()
                    .iter()
                    .map(|t| TermDoc {
                        c: t.coeff.to_string(),
                        e: t.exps.clone(),
                    })
                    .collect()
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("document serializes");
    s.push('\n');
    s
}

pub fn load_variety(text: &str) -> Result<Variety> {
    let doc: VarietyDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    if doc.coords.len() != doc.r + 1 {
        return Err(Error::InvariantViolation(format!(
            "{} coordinates for r = {} (need r + 1)",
            doc.coords.len(),
            doc.r
        )));
    }
    let mut coords = Vec::with_capacity(doc.coords.len());
    for (i, poly) in doc.coords.into_iter().enumerate() {
        let mut terms = Vec::with_capacity(poly.len());
        for (j, t) in poly.into_iter().enumerate() {
            let coeff: BigInt = t.c.trim().parse().map_err(|_| Error::Parse {
                line: 0,
                column: 0,
                msg: format!("coords[{i}][{j}].c: `{}` is not a decimal integer", t.c),
            })?;
            if t.e.len() != doc.n {
                return Err(Error::InvariantViolation(format!(
                    "coords[{i}][{j}].e has {} exponents, n = {}",
                    t.e.len(),
                    doc.n
                )));
            }
            terms.push(Term { coeff, exps: t.e });
        }
        coords.push(Poly::from_terms(doc.n, terms)?);
    }
    let map = PolyMap::new(doc.name.clone(), doc.n, coords)?;
    Variety::new(doc.name, map, doc.is_cone, doc.degree)
}
