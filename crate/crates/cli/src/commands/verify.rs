use intermean_core::lab::{sized_grid, verify_part, PartReport, DEFAULT_T_POINTS};
use intermean_core::SymmetricCoordinate;
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::output::{jnum, num, Report, Table};
use crate::range::parse_values;

fn coord_json(c: SymmetricCoordinate) -> (Value, Value) {
    (jnum(c.t()), jnum(c.complement()))
}

pub fn run(part: Option<u8>, s_spec: Option<&str>, grid: Option<usize>) -> Result<Report> {
    let parts: Vec<u8> = match part {
        Some(p @ 1..=8) => vec![p],
        Some(_) => return Err(CliError::Usage("--part must be between 1 and 8".into())),
        None => (1..=8).collect(),
    };
    let s_values = s_spec.map(parse_values).transpose()?;
    let t_grid = sized_grid(grid.unwrap_or(DEFAULT_T_POINTS));

    let mut table = Table::new(&["part", "kind", "description", "s_lo", "s_hi", "s", "t", "complement", "lhs", "rhs", "count", "ok"]);
    let mut results = Vec::new();
    let mut witnesses = Vec::new();
    let mut passed = true;
    for p in parts {
        let report = verify_part(p, s_values.as_deref(), &t_grid)?;
        passed &= report.passed();
        add_rows(&mut table, &report);
        results.push(part_json(&report));
        for w in &report.witnesses {
            let (t, c) = coord_json(w.coord);
            witnesses.push(json!({
                "part": p, "description": w.description, "s": jnum(w.s), "t": t, "complement": c,
                "lhs": jnum(w.lhs), "rhs": jnum(w.rhs), "limit": w.limit.map(jnum), "found": w.found,
            }));
        }
    }
    let mut report = Report::new("verify", table, Value::Array(results));
    report.witnesses = Value::Array(witnesses);
    report.passed = passed;
    Ok(report)
}

fn part_json(report: &PartReport) -> Value {
    let claims: Vec<Value> = report
        .claims
        .iter()
        .map(|c| {
            let violations: Vec<Value> = c
                .violations
                .iter()
                .map(|v| {
                    let (t, comp) = coord_json(v.coord);
                    json!({ "s": jnum(v.s), "t": t, "complement": comp, "lhs": jnum(v.lhs), "rhs": jnum(v.rhs) })
                })
                .collect();
            json!({
                "description": c.description,
                "comparison": c.comparison.map(|k| k.label()),
                "s_range": [jnum(c.s_range.0), jnum(c.s_range.1)],
                "checked": c.checked,
                "violation_count": c.violation_count,
                "worst_normalized_violation": jnum(c.worst),
                "violations": violations,
                "passed": c.passed(),
            })
        })
        .collect();
    json!({ "part": report.part, "passed": report.passed(), "claims": claims })
}

fn add_rows(table: &mut Table, report: &PartReport) {
    let p = report.part.to_string();
    for c in &report.claims {
        table.push(vec![
            p.clone(),
            "claim".into(),
            c.description.clone(),
            num(c.s_range.0),
            num(c.s_range.1),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            c.violation_count.to_string(),
            c.passed().to_string(),
        ]);
        for v in &c.violations {
            table.push(vec![
                p.clone(),
                "violation".into(),
                c.description.clone(),
                String::new(),
                String::new(),
                num(v.s),
                num(v.coord.t()),
                num(v.coord.complement()),
                num(v.lhs),
                num(v.rhs),
                String::new(),
                "false".into(),
            ]);
        }
    }
    for w in &report.witnesses {
        table.push(vec![
            p.clone(),
            "witness".into(),
            w.description.clone(),
            String::new(),
            String::new(),
            num(w.s),
            num(w.coord.t()),
            num(w.coord.complement()),
            num(w.lhs),
            num(w.rhs),
            String::new(),
            w.found.to_string(),
        ]);
    }
}
