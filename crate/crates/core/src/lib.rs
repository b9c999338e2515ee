//! Actual versus expected dimensions of secant varieties `S_k(X)`, secant
//! Grassmannians `G_k(X)` and Grassmannians of secant varieties
//! `G_{h,k}(X)` for parametrized projective varieties.
//!
//! Dimensions are generic ranks of exact Jacobians over a large prime field,
//! computed at random parameter points with forward-mode jets.

pub mod error;
pub mod exactfield;
pub mod exec;
pub mod linalg;
pub mod polymap;
pub mod report;
pub mod secdim;
pub mod suite;
pub mod varieties;

pub use error::{Error, Result};
pub use secdim::{
    check_inequalities, check_table, dimension_table, expdim_ghk, expdim_gk, expdim_sk, fiber_dim,
    grass_dim, grass_secant_dim, secant_dim, span_dim, CheckResult, ComputeCfg, DimTable,
    DimensionEstimate, Kind, Rule,
};
pub use varieties::{ValidationReport, Variety};
