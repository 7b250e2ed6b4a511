//! The output document shared by every subcommand.

use std::fmt;

use chromastat::rational::{approx, exact};
use chromastat::Rational;
use clap::ValueEnum;
use serde::{Serialize, Serializer};

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Exact `p/q` string plus an advisory decimal.
#[derive(Debug, Clone, PartialEq)]
pub struct Exact(pub Rational);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            exact: String,
            approx: f64,
        }
        Repr {
            exact: exact(&self.0),
            approx: approx(&self.0),
        }
        .serialize(s)
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&exact(&self.0))
    }
}

impl From<&Rational> for Exact {
    fn from(r: &Rational) -> Self {
        Exact(r.clone())
    }
}

#[derive(Debug, Serialize)]
pub struct CommandEcho {
    pub name: &'static str,
    pub args: serde_json::Map<String, serde_json::Value>,
}

#[derive(Debug, Serialize)]
pub struct Document<'a, T: Serialize> {
    pub schema_version: &'static str,
    pub command: &'a CommandEcho,
    pub warnings: &'a [String],
    pub results: &'a T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorKind {
    Input,
    ResourceCap,
}

impl ErrorKind {
    pub fn exit_code(self) -> u8 {
        match self {
            ErrorKind::Input => 2,
            ErrorKind::ResourceCap => 3,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl fmt::Display) -> Self {
        Self {
            kind: ErrorKind::Input,
            message: message.to_string(),
        }
    }

    pub fn cap(message: impl fmt::Display) -> Self {
        Self {
            kind: ErrorKind::ResourceCap,
            message: message.to_string(),
        }
    }
}

impl From<chromastat::EngineError> for CliError {
    fn from(e: chromastat::EngineError) -> Self {
        match e {
            chromastat::EngineError::TooLarge { .. } => CliError::cap(e),
            _ => CliError::input(e),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorDocument<'a> {
    pub schema_version: &'static str,
    pub command: &'a CommandEcho,
    pub error: &'a CliError,
}

/// Per-command rendering for the non-JSON formats.
pub trait Render: Serialize {
    fn text(&self, warnings: &[String]) -> String;
    fn csv(&self) -> Result<String, CliError>;
}

pub fn render<T: Render>(format: Format, echo: &CommandEcho, warnings: &[String], results: &T) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let doc = Document {
                schema_version: SCHEMA_VERSION,
                command: echo,
                warnings,
                results,
            };
            Ok(serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n")
        }
        Format::Csv => results.csv(),
        Format::Text => Ok(results.text(warnings)),
    }
}

pub fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, CliError> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    writer.write_record(header).map_err(CliError::input)?;
    for row in rows {
        writer.write_record(&row).map_err(CliError::input)?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::input(e.error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
