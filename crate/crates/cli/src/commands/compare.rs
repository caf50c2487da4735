use intermean_core::classical::mean;
use intermean_core::lambda::lambda;
use intermean_core::{MeanKind, OrderParameter, PositivePair};
use serde_json::json;

use crate::error::Result;
use crate::output::{jnum, num, Report, Table};
use crate::range::parse_values;

struct Row {
    name: String,
    s: Option<f64>,
    value: f64,
    branch: Option<&'static str>,
}

pub fn run(a: f64, b: f64, s_specs: &[String]) -> Result<Report> {
    let pair = PositivePair::new(a, b)?;
    let mut rows: Vec<Row> =
        MeanKind::ALL.iter().map(|&k| Row { name: k.symbol().to_string(), s: None, value: mean(k, pair), branch: None }).collect();
    for spec in s_specs {
        for s in parse_values(spec)? {
            let v = lambda(OrderParameter::new(s)?, pair);
            rows.push(Row { name: "lambda".into(), s: Some(s), value: v.value, branch: Some(v.branch.as_str()) });
        }
    }
    rows.sort_by(|x, y| x.value.total_cmp(&y.value));

    let mut table = Table::new(&["mean", "s", "value"]);
    for r in &rows {
        table.push(vec![r.name.clone(), r.s.map(num).unwrap_or_default(), num(r.value)]);
    }
    let results = rows
        .iter()
        .map(|r| match r.s {
            Some(s) => json!({ "mean": r.name, "s": jnum(s), "value": jnum(r.value), "branch": r.branch }),
            None => json!({ "mean": r.name, "value": jnum(r.value) }),
        })
        .collect();
    Ok(Report::new("compare", table, serde_json::Value::Array(results)))
}
