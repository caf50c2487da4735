use intermean_core::classical::ratio_to_a;
use intermean_core::lambda::lambda_ratio_to_a;
use intermean_core::{MeanKind, OrderParameter, SymmetricCoordinate};
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::output::{jnum, num, Report, Table};
use crate::range::parse_values;

pub const HEADER: [&str; 8] = ["s", "t", "lambda_over_A", "H_over_A", "G_over_A", "L_over_A", "I_over_A", "S_over_A"];
const DEFAULT_T_POINTS: usize = 100;
const COLUMNS: [MeanKind; 5] = [MeanKind::Harmonic, MeanKind::Geometric, MeanKind::Logarithmic, MeanKind::Identric, MeanKind::Gini];

pub fn run(s_spec: &str, t_spec: Option<&str>, grid: Option<usize>) -> Result<Report> {
    let s_values = parse_values(s_spec)?;
    let t_values = match t_spec {
        Some(spec) => parse_values(spec)?,
        None => parse_values(&format!("0:0.99:{}", grid.unwrap_or(DEFAULT_T_POINTS).max(2)))?,
    };
    let coords = t_values
        .iter()
        .map(|&t| SymmetricCoordinate::new(t).map_err(|_| CliError::Usage(format!("t = {t} is outside [0, 1)"))))
        .collect::<Result<Vec<_>>>()?;

    let mut table = Table::new(&HEADER);
    let mut results = Vec::new();
    for &s in &s_values {
        let order = OrderParameter::new(s)?;
        for &c in &coords {
            let lam = lambda_ratio_to_a(order, c);
            let others: Vec<f64> = COLUMNS.iter().map(|&k| ratio_to_a(k, c)).collect();
            let mut row = vec![num(s), num(c.t()), num(lam)];
            row.extend(others.iter().map(|&v| num(v)));
            table.push(row);
            results.push(json!({
                "s": jnum(s), "t": jnum(c.t()), "lambda_over_A": jnum(lam),
                "H_over_A": jnum(others[0]), "G_over_A": jnum(others[1]), "L_over_A": jnum(others[2]),
                "I_over_A": jnum(others[3]), "S_over_A": jnum(others[4]),
            }));
        }
    }
    Ok(Report::new("scan", table, Value::Array(results)))
}
