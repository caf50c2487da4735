//! Value lists on the command line: `x`, `x,y,z` or `lo:hi:n` (n evenly
//! spaced points including both ends).

use crate::error::{CliError, Result};

pub fn parse_values(spec: &str) -> Result<Vec<f64>> {
    let bad = || CliError::Usage(format!("malformed range `{spec}` (expected x, x,y,... or lo:hi:n)"));
    let parse = |s: &str| s.trim().parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad);
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let (lo, hi) = (parse(parts[0])?, parse(parts[1])?);
        let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
        if n == 0 || lo > hi || (n == 1 && lo != hi) {
            return Err(bad());
        }
        if n == 1 {
            return Ok(vec![lo]);
        }
        return Ok((0..n).map(|i| if i + 1 == n { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 }).collect());
    }
    spec.split(',').map(parse).collect()
}
