//! Versioned JSON reports.
//!
//! Serialization goes through `serde_json::Value`, whose maps are ordered, so
//! keys come out sorted. All numbers are integers; identical inputs give
//! byte-identical output.

use serde::Serialize;

use crate::secdim::{CheckResult, ComputeCfg, DimensionEstimate};
use crate::suite::SuiteLine;
use crate::varieties::{ValidationReport, Variety, VarietyInfo};

pub const SCHEMA: u32 = 1;
pub const TOOL: &str = "secantdim";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CfgEcho {
    pub prime: u64,
    pub seed: u64,
    pub trials: usize,
    pub retry_cap: usize,
    pub cross_check: bool,
}

impl From<&ComputeCfg> for CfgEcho {
    fn from(c: &ComputeCfg) -> Self {
        Self {
            prime: c.prime,
            seed: c.seed,
            trials: c.trials,
            retry_cap: c.retry_cap,
            cross_check: c.cross_check,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VarietyDescriptor {
    pub name: String,
    /// `builtin` or `file`.
    pub source: String,
    /// SHA-256 of the variety document, for file input.
    pub digest: Option<String>,
    pub n: usize,
    pub r: usize,
    pub is_cone: bool,
    pub degree: Option<u64>,
}

impl VarietyDescriptor {
    pub fn builtin(v: &Variety) -> Self {
        Self::new(v, "builtin", None)
    }

    pub fn file(v: &Variety, digest: String) -> Self {
        Self::new(v, "file", Some(digest))
    }

    fn new(v: &Variety, source: &str, digest: Option<String>) -> Self {
        Self {
            name: v.name().to_string(),
            source: source.to_string(),
            digest,
            n: v.n(),
            r: v.r(),
            is_cone: v.is_cone(),
            degree: v.degree(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    pub command: String,
    pub variety: Option<VarietyDescriptor>,
    pub config: CfgEcho,
    pub validation: Option<ValidationReport>,
    pub results: Vec<DimensionEstimate>,
    pub checks: Vec<CheckResult>,
    pub suite: Vec<SuiteLine>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str, cfg: &ComputeCfg) -> Self {
        Self {
            schema: SCHEMA,
            tool: TOOL.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            variety: None,
            config: cfg.into(),
            validation: None,
            results: Vec::new(),
            checks: Vec::new(),
            suite: Vec::new(),
            status: Status::Pass,
        }
    }

    pub fn to_json(&self) -> String {
        canonical_json(self)
    }
}

/// Machine form of the builtin catalog listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogListing {
    pub schema: u32,
    pub tool: String,
    pub varieties: Vec<VarietyInfo>,
}

impl CatalogListing {
    pub fn new(varieties: Vec<VarietyInfo>) -> Self {
        Self {
            schema: SCHEMA,
            tool: TOOL.to_string(),
            varieties,
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("report serializes");
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}
