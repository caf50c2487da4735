//! Cross-validation of `λ_s / A` against 60-digit reference values
//! (`tests/data/gen_lambda_reference.py`).

use intermean_core::lambda::{lambda_ratio_to_a, ln_lambda_ratio_to_a};
use intermean_core::{OrderParameter, SymmetricCoordinate};

const TABLE: &str = include_str!("data/lambda_reference.csv");

struct Row {
    s: f64,
    coord: SymmetricCoordinate,
    ratio: f64,
    ln_gap: f64,
}

fn rows() -> Vec<Row> {
    TABLE
        .lines()
        .skip(1)
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            let s: f64 = f[0].parse().unwrap();
            let t: f64 = f[1].parse().unwrap();
            let c: f64 = f[2].parse().unwrap();
            let coord = if c < 0.5 { SymmetricCoordinate::from_complement(c).unwrap() } else { SymmetricCoordinate::new(t).unwrap() };
            Row { s, coord, ratio: f[3].parse().unwrap(), ln_gap: f[4].parse().unwrap() }
        })
        .collect()
}

#[test]
fn ratio_matches_reference_everywhere() {
    let mut worst = (0.0f64, 0.0, 0.0);
    for row in rows() {
        let s = OrderParameter::new(row.s).unwrap();
        let got = lambda_ratio_to_a(s, row.coord);
        let err = ((got - row.ratio) / row.ratio).abs();
        // log-space evaluation carries an absolute error proportional to |ln D_s|
        let tol = 4e-15 * row.ln_gap.abs().max(8.0);
        assert!(
            err <= tol,
            "s = {}, t = {}, 1-t = {:e}: got {got:e}, want {:e} (rel {err:e})",
            row.s,
            row.coord.t(),
            row.coord.complement(),
            row.ratio
        );
        if err > worst.0 {
            worst = (err, row.s, row.coord.t());
        }
    }
    println!("worst relative error {:e} at s = {}, t = {}", worst.0, worst.1, worst.2);
}

#[test]
fn log_ratio_matches_reference() {
    for row in rows() {
        let s = OrderParameter::new(row.s).unwrap();
        let got = ln_lambda_ratio_to_a(s, row.coord);
        let want = libm::log(row.ratio);
        let scale = row.ln_gap.abs().max(8.0);
        assert!((got - want).abs() <= 4e-15 * scale, "s = {}, t = {}: {got:e} vs {want:e}", row.s, row.coord.t());
    }
}
