//! One module per subcommand; each returns a [`Report`] and its default format.

mod compare;
mod moments;
mod scan;
mod series;
mod thresholds;
mod verify;

use crate::cli::{Cli, Command};
use crate::error::Result;
use crate::output::{Format, Report};

pub fn dispatch(cli: &Cli) -> Result<(Report, Format)> {
    match &cli.command {
        Command::Compare { a, b, s } => Ok((compare::run(*a, *b, s)?, Format::Csv)),
        Command::Scan { s, t } => Ok((scan::run(s, t.as_deref(), cli.grid)?, Format::Csv)),
        Command::Thresholds => Ok((thresholds::run(cli.tol, cli.grid)?, Format::Json)),
        Command::Series { n } => Ok((series::run(*n)?, Format::Csv)),
        Command::Verify { part, s } => Ok((verify::run(*part, s.as_deref(), cli.grid)?, Format::Json)),
        Command::Moments { dist, draws, analytic } => Ok((moments::run(dist, *draws, *analytic, cli.seed)?, Format::Json)),
    }
}
