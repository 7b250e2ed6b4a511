use std::fmt::Write;

use chromastat::rational::approx;
use chromastat::stats::{pmf, Classification, ExtremeStats};
use chromastat::{summarize, validate, Diagnostics};
use serde::Serialize;

use super::{load_graph, GraphSource};
use crate::output::{csv_table, render, CliError, Exact, Render};
use crate::{Context, Outcome, StatsArgs};

#[derive(Debug, Serialize)]
pub struct GraphInfo {
    #[serde(flatten)]
    pub source: GraphSource,
    #[serde(flatten)]
    pub diagnostics: Diagnostics,
}

#[derive(Debug, Serialize)]
pub struct ExtremeReport {
    pub omega: u64,
    pub mean: Exact,
    pub variance: Exact,
    pub pmf: Vec<Exact>,
    /// Class sizes by color, `theta[i - 1]` for color `i`.
    pub theta: Vec<usize>,
    /// Vertices by color, in input labels.
    pub classes: Vec<Vec<usize>>,
    pub classification: Classification,
    pub optimal_partition_count: u64,
    pub optimal_size_multisets: Vec<Vec<usize>>,
    pub tied_variances: Vec<Exact>,
    pub variance_ambiguous: bool,
}

impl ExtremeReport {
    fn new(stats: &ExtremeStats, offset: usize) -> Self {
        let dist = pmf(&stats.witness);
        Self {
            omega: stats.omega,
            mean: (&stats.mean).into(),
            variance: (&stats.variance).into(),
            pmf: dist.probabilities().iter().map(Exact::from).collect(),
            theta: stats.witness.theta(),
            classes: stats
                .witness
                .classes_by_color()
                .into_iter()
                .map(|c| c.into_iter().map(|v| v + offset).collect())
                .collect(),
            classification: stats.classification,
            optimal_partition_count: stats.optimal_partition_count,
            optimal_size_multisets: stats.optimal_size_multisets.clone(),
            tied_variances: stats.tied_variances.iter().map(Exact::from).collect(),
            variance_ambiguous: stats.variance_ambiguous(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct StatsResults {
    pub graph: GraphInfo,
    pub chi: usize,
    pub omega_min: u64,
    pub omega_max: u64,
    pub mean_chi: Exact,
    pub var_chi: Exact,
    pub mean_chi_plus: Exact,
    pub var_chi_plus: Exact,
    pub chi_coloring: ExtremeReport,
    pub chi_plus_coloring: ExtremeReport,
}

fn classification_name(c: &Classification) -> String {
    match c {
        Classification::Uniform { k } => format!("uniform({k})"),
        Classification::TwoPoint => "two-point".into(),
        Classification::Other => "other".into(),
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

impl Render for StatsResults {
    fn text(&self, warnings: &[String]) -> String {
        let mut out = String::new();
        for w in warnings {
            writeln!(out, "warning: {w}").unwrap();
        }
        let g = &self.graph;
        writeln!(
            out,
            "graph: {} ({} vertices, {} edges, {})",
            g.source.name,
            g.diagnostics.vertices,
            g.diagnostics.edges,
            if g.diagnostics.connected { "connected" } else { "disconnected" }
        )
        .unwrap();
        writeln!(out, "chromatic number: {}", self.chi).unwrap();
        for (label, e) in [("chi", &self.chi_coloring), ("chi+", &self.chi_plus_coloring)] {
            writeln!(out, "{label}:").unwrap();
            writeln!(out, "  coloring sum: {}", e.omega).unwrap();
            writeln!(out, "  mean: {} ({:.6})", e.mean, approx(&e.mean.0)).unwrap();
            writeln!(out, "  variance: {} ({:.6})", e.variance, approx(&e.variance.0)).unwrap();
            writeln!(out, "  pmf: [{}]", join(&e.pmf)).unwrap();
            writeln!(out, "  distribution: {}", classification_name(&e.classification)).unwrap();
            let classes: Vec<String> = e.classes.iter().map(|c| format!("{{{}}}", join(c))).collect();
            writeln!(out, "  classes by color: {}", classes.join(" ")).unwrap();
            if e.variance_ambiguous {
                writeln!(out, "  note: optimal colorings with variances [{}] exist", join(&e.tied_variances)).unwrap();
            }
        }
        out
    }

    fn csv(&self) -> Result<String, CliError> {
        let int = |name: &str, v: u64| vec![name.to_string(), v.to_string(), v.to_string()];
        let rat = |name: &str, v: &Exact| {
            vec![name.to_string(), v.to_string(), approx(&v.0).to_string()]
        };
        let rows = vec![
            int("chi", self.chi as u64),
            int("omega_min", self.omega_min),
            int("omega_max", self.omega_max),
            rat("mean_chi", &self.mean_chi),
            rat("var_chi", &self.var_chi),
            rat("mean_chi_plus", &self.mean_chi_plus),
            rat("var_chi_plus", &self.var_chi_plus),
        ];
        csv_table(&["statistic", "exact", "approx"], rows)
    }
}

pub fn run(args: &StatsArgs, ctx: &Context) -> Result<Outcome, CliError> {
    let (graph, source) = load_graph(&args.source)?;
    let diagnostics = validate(&graph);
    let mut warnings = Vec::new();
    if !diagnostics.connected {
        warnings.push(format!(
            "graph is disconnected ({} components); statistics are computed over the whole vertex set",
            diagnostics.components
        ));
    }
    let summary = summarize(&graph, &ctx.config)?;
    let offset = source.label_offset;
    let results = StatsResults {
        graph: GraphInfo { source, diagnostics },
        chi: summary.chi,
        omega_min: summary.omega_min(),
        omega_max: summary.omega_max(),
        mean_chi: summary.mean_chi().into(),
        var_chi: summary.var_chi().into(),
        mean_chi_plus: summary.mean_chi_plus().into(),
        var_chi_plus: summary.var_chi_plus().into(),
        chi_coloring: ExtremeReport::new(&summary.min, offset),
        chi_plus_coloring: ExtremeReport::new(&summary.max, offset),
    };
    Ok(Outcome {
        rendered: render(ctx.format, &ctx.echo, &warnings, &results)?,
        exit: 0,
    })
}
