//! Library side of the `snc-milnor` command: input parsing and schema
//! validation, report construction, rendering and the `verify` suite.

pub mod input;
pub mod render;
pub mod report;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable file, malformed JSON or a schema violation.
    #[error("{0}")]
    Usage(String),
    /// Well-formed input that the mathematics rejects.
    #[error(transparent)]
    Math(#[from] snc_milnor::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Math(snc_milnor::Error::Internal(_)) => 1,
            CliError::Math(_) => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
}

/// Read, validate and evaluate an input file for `mode`.
pub fn run_file(path: &std::path::Path, mode: input::Mode) -> Result<report::ReportDocument, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let (doc, echo) = input::parse_input(&text, mode)?;
    Ok(report::build_report(&doc, echo)?)
}

pub fn format_report(r: &report::ReportDocument, format: Format, color: bool) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
        Format::Table => render::render_table(r, color),
    }
}
