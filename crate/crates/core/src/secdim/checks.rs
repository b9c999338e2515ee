//! Implication checks: known theorems relating the dimensions of `S_k`,
//! `G_k` and `G_{h,k}`, evaluated on computed values.
//!
//! A record fails only when its hypothesis holds and its conclusion does not.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{dimension_table, expdim_gk, fiber_dim_from, ComputeCfg, DimTable};
use crate::error::Result;
use crate::varieties::Variety;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `dim G_k = min{n(k+1), (r-k)(k+1)}` unconditionally.
    SpanMapExpected,
    /// Fiber `x > 0` for `G_{h,k}` forces `dim S_k <= n(k+1) + k - x - h`.
    DefectSecantBound,
    /// With `S_{k-1} != P^r`, `X` not a cone and `x > 0`:
    /// `dim S_k <= n(k+1) + k - x - 2h`.
    NonConeSecantBound,
    /// With `S_{k-1} != P^r` and `dim G_{h,k} < (k-h)(h+1) + n(k+1)`:
    /// `dim G_{h-1,k-1} < (k-h)h + nk`.
    DefectDescends,
    /// `dim G_{1,2} < 3n+2` and `dim S_1 = 2n < r` force a cone.
    ConeCriterion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub variety: String,
    pub rule: Rule,
    pub h: Option<usize>,
    pub k: Option<usize>,
    pub hypothesis_held: bool,
    pub conclusion_held: bool,
    /// The quantities substituted into the statement.
    pub details: BTreeMap<String, i64>,
}

impl CheckResult {
    pub fn failed(&self) -> bool {
        self.hypothesis_held && !self.conclusion_held
    }
}

fn record(
    x: &Variety,
    rule: Rule,
    h: Option<usize>,
    k: Option<usize>,
    hypothesis_held: bool,
    conclusion_held: bool,
    details: &[(&str, i64)],
) -> CheckResult {
    CheckResult {
        variety: x.name().to_string(),
        rule,
        h,
        k,
        hypothesis_held,
        conclusion_held,
        details: details.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
    }
}

/// Evaluates every rule on an already computed table. `is_cone` is trusted
/// metadata of the variety.
pub fn check_table(x: &Variety, t: &DimTable) -> Result<Vec<CheckResult>> {
    let n = x.n() as i64;
    let r = x.r() as i64;
    let mut out = Vec::new();

    for k in 0..=t.max_k {
        let exp = expdim_gk(x.n(), k, x.r()) as i64;
        let dim = t.g(k) as i64;
        out.push(record(
            x,
            Rule::SpanMapExpected,
            None,
            Some(k),
            true,
            dim == exp,
            &[("dim_G_k", dim), ("expdim_G_k", exp)],
        ));
    }

    for k in 2..=t.max_k {
        for h in 1..k {
            let (hi, ki) = (h as i64, k as i64);
            let ghk = t.ghk(h, k) as i64;
            let x_fib = fiber_dim_from(t.g(k), t.ghk(h, k), h, k)? as i64;
            let s_k = t.s(k) as i64;
            let s_prev = t.s(k - 1) as i64;

            let bound = n * (ki + 1) + ki - x_fib - hi;
            out.push(record(
                x,
                Rule::DefectSecantBound,
                Some(h),
                Some(k),
                x_fib > 0,
                s_k <= bound,
                &[("x", x_fib), ("dim_S_k", s_k), ("bound", bound)],
            ));

            let bound = n * (ki + 1) + ki - x_fib - 2 * hi;
            out.push(record(
                x,
                Rule::NonConeSecantBound,
                Some(h),
                Some(k),
                s_prev < r && !x.is_cone() && x_fib > 0,
                s_k <= bound,
                &[
                    ("x", x_fib),
                    ("dim_S_k_minus_1", s_prev),
                    ("is_cone", i64::from(x.is_cone())),
                    ("dim_S_k", s_k),
                    ("bound", bound),
                ],
            ));

            let free = (ki - hi) * (hi + 1) + n * (ki + 1);
            let lower = t.ghk(h - 1, k - 1) as i64;
            let lower_bound = (ki - hi) * hi + n * ki;
            out.push(record(
                x,
                Rule::DefectDescends,
                Some(h),
                Some(k),
                s_prev < r && ghk < free,
                lower < lower_bound,
                &[
                    ("dim_S_k_minus_1", s_prev),
                    ("dim_G_hk", ghk),
                    ("unconstrained_G_hk", free),
                    ("dim_G_h_minus_1_k_minus_1", lower),
                    ("bound", lower_bound),
                ],
            ));
        }
    }

    if t.max_k >= 2 {
        let g12 = t.ghk(1, 2) as i64;
        let s1 = t.s(1) as i64;
        out.push(record(
            x,
            Rule::ConeCriterion,
            Some(1),
            Some(2),
            g12 < 3 * n + 2 && s1 == 2 * n && 2 * n < r,
            x.is_cone(),
            &[
                ("dim_G_12", g12),
                ("dim_S_1", s1),
                ("is_cone", i64::from(x.is_cone())),
            ],
        ));
    }
    Ok(out)
}

/// Computes all needed dimensions for `k <= max_k` and evaluates every rule.
pub fn check_inequalities(x: &Variety, max_k: usize, cfg: &ComputeCfg) -> Result<Vec<CheckResult>> {
    let t = dimension_table(x, max_k, cfg)?;
    check_table(x, &t)
}
