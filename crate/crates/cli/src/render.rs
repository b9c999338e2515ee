//! Plain-text tables.

use std::fmt::Write;

use secant_core::report::Report;
use secant_core::varieties::VarietyInfo;

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let _ = write!(s, "{cell:<w$}");
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

pub fn catalog(rows: &[VarietyInfo]) -> String {
    let rows: Vec<Vec<String>> = rows
        .iter()
        .map(|v| {
            vec![
                v.name.clone(),
                v.n.to_string(),
                v.r.to_string(),
                v.degree.map_or("-".into(), |d| d.to_string()),
                if v.is_cone { "yes" } else { "no" }.into(),
            ]
        })
        .collect();
    table(&["name", "n", "r", "degree", "cone"], &rows)
}

fn heading(r: &Report) -> String {
    let mut s = String::new();
    if let Some(v) = &r.variety {
        let _ = writeln!(s, "variety {} (n={}, r={}, {})", v.name, v.n, v.r, v.source);
        if let Some(d) = &v.digest {
            let _ = writeln!(s, "sha256  {d}");
        }
    }
    let c = &r.config;
    let _ = writeln!(
        s,
        "prime {}  seed {}  trials {}{}",
        c.prime,
        c.seed,
        c.trials,
        if c.cross_check { "  cross-check" } else { "" }
    );
    s
}

fn results(r: &Report) -> String {
    let exact = r.config.cross_check;
    let rows: Vec<Vec<String>> = r
        .results
        .iter()
        .map(|e| {
            let trials: Vec<String> = e.trial_dims.iter().map(|d| d.to_string()).collect();
            let mut row = vec![
                e.label(),
                e.dim.to_string(),
                e.expdim.to_string(),
                e.defect.to_string(),
                trials.join(","),
            ];
            if exact {
                row.push(e.exact_dim.map_or("-".into(), |d| d.to_string()));
            }
            row
        })
        .collect();
    let mut header = vec!["quantity", "dim", "expdim", "defect", "trials"];
    if exact {
        header.push("exact");
    }
    table(&header, &rows)
}

pub fn dims(r: &Report) -> String {
    heading(r) + &results(r)
}

fn checks(r: &Report, only_failed: bool) -> String {
    let rows: Vec<Vec<String>> = r
        .checks
        .iter()
        .filter(|c| !only_failed || c.failed())
        .map(|c| {
            let idx = |i: Option<usize>| i.map_or("-".into(), |v| v.to_string());
            let status = if !c.hypothesis_held {
                "vacuous"
            } else if c.conclusion_held {
                "holds"
            } else {
                "VIOLATED"
            };
            let details: Vec<String> = c.details.iter().map(|(k, v)| format!("{k}={v}")).collect();
            vec![
                c.variety.clone(),
                format!("{:?}", c.rule),
                idx(c.h),
                idx(c.k),
                status.into(),
                details.join(" "),
            ]
        })
        .collect();
    table(&["variety", "rule", "h", "k", "status", "details"], &rows)
}

pub fn scan(r: &Report) -> String {
    let mut s = heading(r);
    if let Some(v) = &r.validation {
        let _ = writeln!(
            s,
            "immersive rank {}/{}  span P^{} of P^{}  {}",
            v.immersive_rank,
            v.expected_immersive_rank,
            v.span_dim,
            v.expected_span_dim,
            if v.is_valid() { "valid" } else { "INVALID" }
        );
    }
    if !r.results.is_empty() {
        s.push('\n');
        s += &results(r);
        s.push('\n');
        s += &checks(r, false);
    }
    s
}

pub fn suite(r: &Report) -> String {
    let mut s = heading(r);
    let rows: Vec<Vec<String>> = r
        .suite
        .iter()
        .map(|l| {
            let rel = match l.relation {
                secant_core::suite::Relation::Eq => "=",
                secant_core::suite::Relation::Lt => "<",
            };
            vec![
                l.variety.clone(),
                l.quantity.clone(),
                rel.into(),
                l.expected.to_string(),
                l.actual.to_string(),
                if l.passed { "ok" } else { "MISMATCH" }.into(),
            ]
        })
        .collect();
    s.push('\n');
    s += &table(
        &["variety", "quantity", "rel", "expected", "actual", "status"],
        &rows,
    );
    let failed = r.suite.iter().filter(|l| !l.passed).count();
    if r.checks.iter().any(|c| c.failed()) {
        s.push_str("\nviolated checks\n");
        s += &checks(r, true);
    }
    let _ = writeln!(
        s,
        "\n{}: {}/{} lines match",
        if failed == 0 { "pass" } else { "FAIL" },
        r.suite.len() - failed,
        r.suite.len()
    );
    s
}
