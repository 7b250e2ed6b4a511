use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use chromastat::{Family, SearchConfig};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

mod commands;
mod output;

use output::{CliError, CommandEcho, ErrorDocument, Format, SCHEMA_VERSION};

/// Environment variable overriding the engine's vertex cap.
pub const MAX_N_ENV: &str = "CHROMASTAT_MAX_N";

#[derive(Debug, Parser)]
#[command(name = "chromastat", version, about = "Chromatic mean and variance of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Chromatic number, coloring-sum extremes and their statistics.
    Stats(StatsArgs),
    /// Write a family member as DIMACS or an edge list.
    Gen(GenArgs),
    /// Cross-check the engine against the brute-force oracle.
    Verify(VerifyArgs),
    /// Compare engine output with the closed forms, derived and published.
    Report(ReportArgs),
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SourceArgs {
    /// Graph file, DIMACS or edge list (detected from a leading `p` line).
    #[arg(long, conflicts_with_all = ["family", "n", "parts"])]
    pub input: Option<PathBuf>,
    #[arg(long, value_parser = parse_family)]
    pub family: Option<Family>,
    /// Vertex count for complete, path, cycle, wheel and star.
    #[arg(long)]
    pub n: Option<usize>,
    /// Part sizes for complete-bipartite and complete-multipartite.
    #[arg(long, value_delimiter = ',')]
    pub parts: Vec<usize>,
}

#[derive(Debug, Args, Serialize)]
pub struct StatsArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_enum, default_value = "text")]
    #[serde(skip)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    Dimacs,
    EdgeList,
}

#[derive(Debug, Args, Serialize)]
pub struct GenArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub parts: Vec<usize>,
    /// Output path; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "dimacs")]
    pub format: GraphFormat,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    /// Largest order checked, for families and random graphs alike.
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    /// Random connected graphs per order.
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Raise the oracle's vertex cap (exponential running time).
    #[arg(long, default_value_t = chromastat::oracle::DEFAULT_ORACLE_CAP)]
    pub oracle_cap: usize,
    #[arg(long, value_enum, default_value = "text")]
    #[serde(skip)]
    pub format: Format,
}

#[derive(Debug, Args, Serialize)]
pub struct ReportArgs {
    /// Comma-separated family names, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub families: Vec<String>,
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "text")]
    #[serde(skip)]
    pub format: Format,
}

pub struct Context {
    pub format: Format,
    pub echo: CommandEcho,
    pub config: SearchConfig,
}

pub struct Outcome {
    pub rendered: String,
    pub exit: u8,
}

fn echo<T: Serialize>(name: &'static str, args: &T) -> CommandEcho {
    let args = match serde_json::to_value(args) {
        Ok(serde_json::Value::Object(map)) => map,
        _ => serde_json::Map::new(),
    };
    CommandEcho { name, args }
}

fn search_config() -> Result<SearchConfig, CliError> {
    match std::env::var(MAX_N_ENV) {
        Ok(raw) => raw
            .trim()
            .parse()
            .ok()
            .filter(|&n: &usize| n > 0)
            .map(SearchConfig::with_max_vertices)
            .ok_or(())
            .map_err(|_| CliError::input(format!("{MAX_N_ENV} must be a positive integer, got `{raw}`"))),
        Err(_) => Ok(SearchConfig::default()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (format, echo) = match &cli.command {
        Command::Stats(a) => (a.format, echo("stats", a)),
        Command::Gen(a) => (Format::Text, echo("gen", a)),
        Command::Verify(a) => (a.format, echo("verify", a)),
        Command::Report(a) => (a.format, echo("report", a)),
    };
    let config = match search_config() {
        Ok(config) => config,
        Err(e) => return finish(format, Err((e, echo))),
    };
    let ctx = Context { format, echo, config };
    let outcome = match &cli.command {
        Command::Stats(a) => commands::stats::run(a, &ctx),
        Command::Gen(a) => commands::gen::run(a),
        Command::Verify(a) => commands::verify::run(a, &ctx),
        Command::Report(a) => commands::report::run(a, &ctx),
    };
    finish(format, outcome.map_err(|e| (e, ctx.echo)))
}

fn finish(format: Format, result: Result<Outcome, (CliError, CommandEcho)>) -> ExitCode {
    match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.rendered.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.exit)
        }
        Err((error, echo)) => {
            if format == Format::Json {
                let doc = ErrorDocument {
                    schema_version: SCHEMA_VERSION,
                    command: &echo,
                    error: &error,
                };
                println!("{}", serde_json::to_string_pretty(&doc).expect("documents serialize"));
            }
            eprintln!("error: {}", error.message);
            ExitCode::from(error.kind.exit_code())
        }
    }
}
