use intermean_core::lab::SeriesTable;
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::output::{jnum, num, Report, Table};

pub fn run(n_max: usize) -> Result<Report> {
    if n_max < 2 {
        return Err(CliError::Usage("--n must be at least 2".into()));
    }
    let table_data = SeriesTable::new(n_max, n_max);
    let mut table = Table::new(&["n", "c_n_convolution", "c_n_closed", "d_n", "agree"]);
    let mut results = Vec::new();
    let mut passed = true;
    for n in 0..=n_max {
        let (conv, closed, d) = (table_data.c_convolution(n), table_data.c_closed(n), table_data.d(n));
        let agree = table_data.agrees(n);
        passed &= agree && closed <= 0.0 && d <= 0.0;
        table.push(vec![n.to_string(), num(conv), num(closed), num(d), agree.to_string()]);
        results.push(json!({
            "n": n,
            "c_n_convolution": jnum(conv),
            "c_n_closed": jnum(closed),
            "c_n_exact": table_data.c_closed_exact(n).to_string(),
            "d_n": jnum(d),
            "agree": agree,
        }));
    }
    let mut report = Report::new("series", table, Value::Array(results));
    report.passed = passed;
    Ok(report)
}
