//! Distribution specs for the `moments` command and their samplers.

use intermean_core::jensen::MomentReport;
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution as _;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Distribution {
    Uniform {
        lo: f64,
        hi: f64,
    },
    /// Finitely many atoms with positive weights (not necessarily normalized).
    Discrete {
        points: Vec<f64>,
        weights: Vec<f64>,
    },
}

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

fn number(s: &str, spec: &str) -> Result<f64> {
    s.trim().parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| usage(format!("bad number `{s}` in distribution `{spec}`")))
}

impl std::str::FromStr for Distribution {
    type Err = CliError;

    fn from_str(spec: &str) -> Result<Self> {
        let (kind, body) = spec.split_once(':').ok_or_else(|| usage(format!("unknown distribution `{spec}`")))?;
        let fields: Vec<&str> = body.split(',').collect();
        match kind {
            "uniform" => {
                if fields.len() != 2 {
                    return Err(usage("uniform needs `uniform:lo,hi`".into()));
                }
                let (lo, hi) = (number(fields[0], spec)?, number(fields[1], spec)?);
                if lo >= hi {
                    return Err(usage("uniform needs lo < hi".into()));
                }
                Ok(Distribution::Uniform { lo, hi })
            }
            "two-point" => {
                if !(2..=3).contains(&fields.len()) {
                    return Err(usage("two-point needs `two-point:x0,x1[,p1]`".into()));
                }
                let p = if fields.len() == 3 { number(fields[2], spec)? } else { 0.5 };
                if !(p > 0.0 && p < 1.0) {
                    return Err(usage("two-point probability must lie in (0, 1)".into()));
                }
                Ok(Distribution::Discrete { points: vec![number(fields[0], spec)?, number(fields[1], spec)?], weights: vec![1.0 - p, p] })
            }
            "discrete" => {
                let mut points = Vec::new();
                let mut weights = Vec::new();
                for f in fields {
                    let (x, w) = match f.split_once('@') {
                        Some((x, w)) => (number(x, spec)?, number(w, spec)?),
                        None => (number(f, spec)?, 1.0),
                    };
                    if !(w > 0.0) {
                        return Err(usage("discrete weights must be positive".into()));
                    }
                    points.push(x);
                    weights.push(w);
                }
                Ok(Distribution::Discrete { points, weights })
            }
            "constant" => {
                if fields.len() != 1 {
                    return Err(usage("constant needs `constant:c`".into()));
                }
                Ok(Distribution::Discrete { points: vec![number(fields[0], spec)?], weights: vec![1.0] })
            }
            _ => Err(usage(format!("unknown distribution `{kind}`"))),
        }
    }
}

impl Distribution {
    /// Exact moments.
    pub fn exact_report(&self) -> Result<MomentReport> {
        match self {
            &Distribution::Uniform { lo, hi } => {
                let mean = 0.5 * (lo + hi);
                let second = (lo * lo + lo * hi + hi * hi) / 3.0;
                let third = (lo + hi) * (lo * lo + hi * hi) / 4.0;
                let variance = (hi - lo) * (hi - lo) / 12.0;
                Ok(MomentReport::new(mean, second, third, variance, lo, hi)?)
            }
            Distribution::Discrete { points, weights } => Ok(MomentReport::from_distribution(points, weights)?),
        }
    }

    /// Empirical moments of `draws` samples from a ChaCha8 stream seeded with `seed`.
    pub fn sampled_report(&self, draws: usize, seed: u64) -> Result<MomentReport> {
        if draws == 0 {
            return Err(usage("--draws must be at least 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let samples: Vec<f64> = match self {
            &Distribution::Uniform { lo, hi } => (0..draws).map(|_| lo + (hi - lo) * rng.random::<f64>()).collect(),
            Distribution::Discrete { points, weights } => {
                let index = WeightedIndex::new(weights).map_err(|e| usage(format!("bad weights: {e}")))?;
                (0..draws).map(|_| points[index.sample(&mut rng)]).collect()
            }
        };
        Ok(MomentReport::from_samples(&samples)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs() {
        assert_eq!("uniform:0,1".parse::<Distribution>().unwrap(), Distribution::Uniform { lo: 0.0, hi: 1.0 });
        assert_eq!(
            "two-point:0,1".parse::<Distribution>().unwrap(),
            Distribution::Discrete { points: vec![0.0, 1.0], weights: vec![0.5, 0.5] }
        );
        assert_eq!(
            "discrete:1@2,3".parse::<Distribution>().unwrap(),
            Distribution::Discrete { points: vec![1.0, 3.0], weights: vec![2.0, 1.0] }
        );
        for bad in ["normal:0,1", "uniform:1,0", "uniform:0", "two-point:0,1,1.5", "discrete:1@-1", "constant:x", "nocolon"] {
            assert!(bad.parse::<Distribution>().is_err(), "{bad}");
        }
    }

    #[test]
    fn uniform_exact_moments() {
        let r = Distribution::Uniform { lo: 0.0, hi: 1.0 }.exact_report().unwrap();
        assert_eq!((r.mean, r.second_moment, r.third_moment), (0.5, 1.0 / 3.0, 0.25));
        assert_eq!(r.variance, 1.0 / 12.0);
    }

    #[test]
    fn sampling_is_reproducible() {
        let d = Distribution::Uniform { lo: 0.0, hi: 1.0 };
        assert_eq!(d.sampled_report(1000, 7).unwrap(), d.sampled_report(1000, 7).unwrap());
        assert_ne!(d.sampled_report(1000, 7).unwrap(), d.sampled_report(1000, 8).unwrap());
    }
}
