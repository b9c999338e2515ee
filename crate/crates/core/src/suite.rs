//! Fixed verification suite for surfaces in P^5.
//!
//! Lines in 3-secant planes: the Veronese surface and a general projection
//! of the cubic Veronese fill `G(1,5)` (`dim G_{1,2} = 8`), while the quartic
//! scrolls and cones fall short. The exact value 7 was established by the
//! rational tangent-space oracle in `tests/oracle/` before being frozen here.

use serde::Serialize;

use crate::error::Result;
use crate::exec;
use crate::secdim::{check_table, dimension_table, CheckResult, ComputeCfg, DimTable};
use crate::varieties::{parse_selector, Variety};

pub const FIXTURES: [&str; 6] = [
    "veronese:2,2",
    "proj-veronese:2,3",
    "scroll:2,2",
    "scroll:3,1",
    "scroll:4,0",
    "cone-rnc4",
];

/// Largest `k` used when evaluating the implication checks on fixtures.
pub const SUITE_MAX_K: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "<")]
    Lt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Quantity {
    Secant(usize),
    GrassSecant(usize, usize),
    Violations,
}

impl Quantity {
    fn label(&self) -> String {
        match self {
            Quantity::Secant(k) => format!("dim S_{k}"),
            Quantity::GrassSecant(h, k) => format!("dim G_{{{h},{k}}}"),
            Quantity::Violations => "implication violations".into(),
        }
    }
}

struct Expectation {
    variety: &'static str,
    quantity: Quantity,
    relation: Relation,
    expected: i64,
}

const fn line(variety: &'static str, quantity: Quantity, expected: i64) -> Expectation {
    Expectation {
        variety,
        quantity,
        relation: Relation::Eq,
        expected,
    }
}

const EXPECTATIONS: [Expectation; 15] = [
    line("veronese:2,2", Quantity::GrassSecant(1, 2), 8),
    line("proj-veronese:2,3", Quantity::GrassSecant(1, 2), 8),
    line("scroll:2,2", Quantity::GrassSecant(1, 2), 7),
    line("scroll:3,1", Quantity::GrassSecant(1, 2), 7),
    line("scroll:4,0", Quantity::GrassSecant(1, 2), 7),
    line("cone-rnc4", Quantity::GrassSecant(1, 2), 7),
    line("veronese:2,2", Quantity::Secant(1), 4),
    line("scroll:2,2", Quantity::Secant(1), 5),
    line("scroll:2,2", Quantity::Secant(2), 5),
    line("veronese:2,2", Quantity::Violations, 0),
    line("proj-veronese:2,3", Quantity::Violations, 0),
    line("scroll:2,2", Quantity::Violations, 0),
    line("scroll:3,1", Quantity::Violations, 0),
    line("scroll:4,0", Quantity::Violations, 0),
    line("cone-rnc4", Quantity::Violations, 0),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteLine {
    pub variety: String,
    pub quantity: String,
    pub relation: Relation,
    pub expected: i64,
    pub actual: i64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub lines: Vec<SuiteLine>,
    /// Check records per fixture, in fixture order.
    pub checks: Vec<(String, Vec<CheckResult>)>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }
}

/// Runs the suite. Fixtures named in `mislabel_cone` get their cone flag
/// flipped before the checks run (negative-path testing).
pub fn run_suite(cfg: &ComputeCfg, mislabel_cone: &[String]) -> Result<SuiteOutcome> {
    let fixtures: Vec<Variety> = FIXTURES
        .iter()
        .map(|sel| {
            parse_selector(sel).map(|v| {
                let flip = mislabel_cone.iter().any(|m| m == sel);
                let cone = v.is_cone() ^ flip;
                v.with_cone_flag(cone)
            })
        })
        .collect::<Result<_>>()?;
    let tables: Vec<(DimTable, Vec<CheckResult>)> = exec::map(cfg.exec, &fixtures, |x| {
        let t = dimension_table(x, SUITE_MAX_K, cfg)?;
        let checks = check_table(x, &t)?;
        Ok((t, checks))
    })
    .into_iter()
    .collect::<Result<_>>()?;

    let lines = EXPECTATIONS
        .iter()
        .map(|e| {
            let i = FIXTURES
                .iter()
                .position(|f| *f == e.variety)
                .expect("expectation names a fixture");
            let (t, checks) = &tables[i];
            let actual = match e.quantity {
                Quantity::Secant(k) => t.s(k) as i64,
                Quantity::GrassSecant(h, k) => t.ghk(h, k) as i64,
                Quantity::Violations => checks.iter().filter(|c| c.failed()).count() as i64,
            };
            let passed = match e.relation {
                Relation::Eq => actual == e.expected,
                Relation::Lt => actual < e.expected,
            };
            SuiteLine {
                variety: e.variety.to_string(),
                quantity: e.quantity.label(),
                relation: e.relation,
                expected: e.expected,
                actual,
                passed,
            }
        })
        .collect();
    let checks = FIXTURES
        .iter()
        .map(|s| s.to_string())
        .zip(tables.into_iter().map(|(_, c)| c))
        .collect();
    Ok(SuiteOutcome { lines, checks })
}
