use intermean_core::lab::{solve_threshold_on, standard_grid, standard_thresholds, tau, tau_root, DEFAULT_INNER_POINTS, DEFAULT_TOLERANCE};
use intermean_core::MeanKind;
use serde_json::{json, Map, Value};

use crate::error::Result;
use crate::output::{jnum, num, Report, Table};

pub fn run(tol: Option<f64>, grid: Option<usize>) -> Result<Report> {
    let tol = tol.unwrap_or(DEFAULT_TOLERANCE);
    let inner = standard_grid(grid.unwrap_or(DEFAULT_INNER_POINTS));
    let mut table = Table::new(&[
        "boundary",
        "target",
        "side",
        "bracket_lo",
        "bracket_hi",
        "critical_s",
        "witness_t",
        "witness_complement",
        "tolerance",
        "iterations",
    ]);
    let mut results = Map::new();
    let mut witnesses = Vec::new();
    let mut passed = true;
    for (cmp, initial) in standard_thresholds() {
        let label = cmp.label();
        let mut entry = json!({
            "target": cmp.target.symbol(),
            "side": cmp.side.as_str(),
            "initial_bracket": [jnum(initial.0), jnum(initial.1)],
            "tolerance": jnum(tol),
        });
        match solve_threshold_on(cmp, initial, tol, &inner) {
            Ok(r) => {
                let fail_end = if r.hold_end == r.bracket.0 { r.bracket.1 } else { r.bracket.0 };
                let fields = entry.as_object_mut().expect("entry is an object");
                fields.insert("bracket".into(), json!([jnum(r.bracket.0), jnum(r.bracket.1)]));
                fields.insert("critical_s".into(), jnum(r.critical_s));
                fields.insert("witness_t".into(), jnum(r.witness.t()));
                fields.insert("witness_complement".into(), jnum(r.witness.complement()));
                fields.insert("iterations".into(), json!(r.iterations));
                if cmp.target == MeanKind::Identric && cmp.side == intermean_core::lab::Side::Lower {
                    let root = tau_root()?;
                    fields.insert("tau_root".into(), jnum(root));
                    fields.insert("tau_at_critical_s".into(), jnum(tau(r.critical_s)?));
                }
                table.push(vec![
                    label.clone(),
                    cmp.target.symbol().into(),
                    cmp.side.as_str().into(),
                    num(r.bracket.0),
                    num(r.bracket.1),
                    num(r.critical_s),
                    num(r.witness.t()),
                    num(r.witness.complement()),
                    num(tol),
                    r.iterations.to_string(),
                ]);
                witnesses.push(json!({
                    "boundary": label,
                    "s": jnum(fail_end),
                    "t": jnum(r.witness.t()),
                    "complement": jnum(r.witness.complement()),
                    "normalized_violation": jnum(r.witness_violation),
                }));
            }
            Err(e) => {
                passed = false;
                entry.as_object_mut().expect("entry is an object").insert("error".into(), json!(e.to_string()));
                table.push(vec![
                    label.clone(),
                    cmp.target.symbol().into(),
                    cmp.side.as_str().into(),
                    num(initial.0),
                    num(initial.1),
                    "nan".into(),
                    "nan".into(),
                    "nan".into(),
                    num(tol),
                    "0".into(),
                ]);
            }
        }
        results.insert(label, entry);
    }
    let mut report = Report::new("thresholds", table, Value::Object(results));
    report.witnesses = Value::Array(witnesses);
    report.passed = passed;
    Ok(report)
}
