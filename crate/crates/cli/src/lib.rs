//! Command-line front end for `intermean-core`.
//!
//! Every command builds a [`output::Report`], written as CSV or JSON. Exit
//! codes: 0 on success, 1 when a verification fails, 2 on usage or domain
//! errors.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod commands;
pub mod distribution;
pub mod error;
pub mod output;
pub mod range;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};

use clap::Parser;

use cli::Cli;
use error::{CliError, Result};

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let to_stdout = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            if to_stdout {
                let _ = stdout.write_all(rendered.as_bytes());
                return 0;
            }
            let _ = stderr.write_all(rendered.as_bytes());
            return 2;
        }
    };
    match execute(&cli, stdout) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<bool> {
    if let Some(tol) = cli.tol {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(CliError::Usage("--tol must be a positive number".into()));
        }
    }
    if cli.grid == Some(0) {
        return Err(CliError::Usage("--grid must be at least 1".into()));
    }
    let (report, default_format) = commands::dispatch(cli)?;
    let format = cli.format.unwrap_or(default_format);
    match &cli.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            report.write(format, &mut file)?;
            file.flush()?;
        }
        None => report.write(format, stdout)?,
    }
    Ok(report.passed)
}
