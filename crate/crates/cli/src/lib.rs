//! Command-line front end: JSON file formats, command dispatch and reports.
//!
//! Exit codes: 0 when every verdict holds or a construction succeeded, 1 when
//! a mathematical check fails (the report carries the witness), 2 for
//! malformed input or usage errors.

pub mod commands;
pub mod formats;
pub mod report;

use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use commands::{emit_fixture_corpus, Cli, Command};
pub use formats::{parse_algebra, CliError};
pub use report::{Item, Report};

/// Runs one invocation; `args` excludes the program name.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("hjl".to_string()).chain(args.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{text}");
                0
            } else {
                let _ = write!(err, "{text}");
                2
            };
        }
    };
    let echo: Vec<&str> = args.iter().map(String::as_str).filter(|a| *a != "--json").collect();
    match commands::execute(&cli, echo.join(" ")) {
        Ok(report) => {
            let _ = write!(out, "{}", report.render(cli.json));
            report.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
