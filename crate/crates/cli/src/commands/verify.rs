use std::collections::BTreeSet;
use std::fmt::Write;

use chromastat::closed_forms::{closed_form, family_instances, Variant};
use chromastat::graph::random_connected;
use chromastat::oracle::{oracle_summary, OracleConfig, OracleSummary};
use chromastat::stats::Classification;
use chromastat::{generate_family, summarize, validate, ChromaticSummary, Family, FamilySpec, Graph, Objective};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::output::{csv_table, render, CliError, Render};
use crate::{Context, Outcome, VerifyArgs};

#[derive(Debug, Serialize)]
pub struct Pair {
    pub engine: u64,
    pub oracle: u64,
}

impl Pair {
    fn agree(&self) -> bool {
        self.engine == self.oracle
    }
}

#[derive(Debug, Serialize)]
pub struct Case {
    pub case: String,
    pub n: usize,
    pub edges: usize,
    pub chi: Pair,
    pub omega_min: Pair,
    pub omega_max: Pair,
    pub size_multisets_match: bool,
    pub variances_match: bool,
    /// Derived closed form equals the engine; absent for random graphs.
    pub closed_form_match: Option<bool>,
    pub pass: bool,
}

/// A regular graph whose chi-witness is not uniform.
#[derive(Debug, Serialize)]
pub struct RegularNonUniform {
    pub case: String,
    pub degree: usize,
    pub chi: usize,
    pub theta: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct VerifyResults {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<Case>,
    pub regular_non_uniform: Vec<RegularNonUniform>,
}

fn compare(name: String, graph: &Graph, summary: &ChromaticSummary, oracle: &OracleSummary, spec: Option<&FamilySpec>) -> Case {
    let sizes = |v: &[Vec<usize>]| v.iter().cloned().collect::<BTreeSet<_>>();
    let size_multisets_match = sizes(&summary.min.optimal_size_multisets) == oracle.min_size_multisets
        && sizes(&summary.max.optimal_size_multisets) == oracle.max_size_multisets;
    let variances_match = summary.min.tied_variances.iter().cloned().collect::<BTreeSet<_>>() == oracle.min_variances
        && summary.max.tied_variances.iter().cloned().collect::<BTreeSet<_>>() == oracle.max_variances;
    let closed_form_match = spec.map(|spec| {
        [(Objective::Min, &summary.min), (Objective::Max, &summary.max)]
            .into_iter()
            .all(|(objective, stats)| match closed_form(spec, objective, Variant::Derived) {
                Ok(f) => f.mean == stats.mean && f.variance == stats.variance && f.chi == summary.chi,
                Err(_) => false,
            })
    });
    let chi = Pair {
        engine: summary.chi as u64,
        oracle: oracle.chi as u64,
    };
    let omega_min = Pair {
        engine: summary.omega_min(),
        oracle: oracle.omega_min,
    };
    let omega_max = Pair {
        engine: summary.omega_max(),
        oracle: oracle.omega_max,
    };
    let pass = chi.agree()
        && omega_min.agree()
        && omega_max.agree()
        && size_multisets_match
        && variances_match
        && closed_form_match != Some(false);
    Case {
        case: name,
        n: graph.order(),
        edges: graph.size(),
        chi,
        omega_min,
        omega_max,
        size_multisets_match,
        variances_match,
        closed_form_match,
        pass,
    }
}

/// Edge probability for trial `t` of `trials`, sweeping 0.1..0.9.
fn sweep_probability(t: usize, trials: usize) -> f64 {
    0.1 + 0.8 * (t as f64 + 0.5) / trials as f64
}

pub fn run(args: &VerifyArgs, ctx: &Context) -> Result<Outcome, CliError> {
    if args.max_n > args.oracle_cap {
        return Err(CliError::input(format!(
            "--max-n {} exceeds the oracle cap {}; raise it with --oracle-cap",
            args.max_n, args.oracle_cap
        )));
    }
    if args.max_n > ctx.config.max_vertices {
        return Err(CliError::cap(format!(
            "--max-n {} exceeds the engine cap {}",
            args.max_n, ctx.config.max_vertices
        )));
    }
    let oracle_config = OracleConfig {
        max_vertices: args.oracle_cap,
    };
    let mut instances: Vec<(String, Graph, Option<FamilySpec>)> = Vec::new();
    for family in Family::ALL {
        for spec in family_instances(family, args.max_n) {
            let graph = generate_family(&spec).map_err(CliError::input)?;
            instances.push((spec.to_string(), graph, Some(spec)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for n in 1..=args.max_n {
        for t in 0..args.trials {
            let p = sweep_probability(t, args.trials);
            let graph = random_connected(n, p, &mut rng);
            instances.push((format!("random(n={n},p={p:.3},trial={t})"), graph, None));
        }
    }

    let mut cases = Vec::with_capacity(instances.len());
    let mut regular_non_uniform = Vec::new();
    for (name, graph, spec) in instances {
        let summary = summarize(&graph, &ctx.config)?;
        let oracle = oracle_summary(&graph, &oracle_config).map_err(CliError::cap)?;
        let diagnostics = validate(&graph);
        if let Some(degree) = diagnostics.regular_degree {
            if degree > 0 && !matches!(summary.min.classification, Classification::Uniform { .. }) {
                regular_non_uniform.push(RegularNonUniform {
                    case: name.clone(),
                    degree,
                    chi: summary.chi,
                    theta: summary.min.witness.theta(),
                });
            }
        }
        cases.push(compare(name, &graph, &summary, &oracle, spec.as_ref()));
    }
    let passed = cases.iter().filter(|c| c.pass).count();
    let results = VerifyResults {
        total: cases.len(),
        passed,
        failed: cases.len() - passed,
        cases,
        regular_non_uniform,
    };
    Ok(Outcome {
        rendered: render(ctx.format, &ctx.echo, &[], &results)?,
        exit: if results.failed == 0 { 0 } else { 4 },
    })
}

impl Render for VerifyResults {
    fn text(&self, _warnings: &[String]) -> String {
        let mut out = String::new();
        for c in &self.cases {
            writeln!(
                out,
                "{} {}  chi {}/{}  omega_min {}/{}  omega_max {}/{}",
                if c.pass { "PASS" } else { "FAIL" },
                c.case,
                c.chi.engine,
                c.chi.oracle,
                c.omega_min.engine,
                c.omega_min.oracle,
                c.omega_max.engine,
                c.omega_max.oracle
            )
            .unwrap();
        }
        if !self.regular_non_uniform.is_empty() {
            writeln!(out, "regular graphs with a non-uniform chi-witness:").unwrap();
            for r in &self.regular_non_uniform {
                writeln!(out, "  {} (degree {}, chi {}, theta {:?})", r.case, r.degree, r.chi, r.theta).unwrap();
            }
        }
        writeln!(out, "{} cases: {} passed, {} failed", self.total, self.passed, self.failed).unwrap();
        out
    }

    fn csv(&self) -> Result<String, CliError> {
        let rows = self.cases.iter().map(|c| {
            vec![
                c.case.clone(),
                c.n.to_string(),
                c.edges.to_string(),
                c.chi.engine.to_string(),
                c.chi.oracle.to_string(),
                c.omega_min.engine.to_string(),
                c.omega_min.oracle.to_string(),
                c.omega_max.engine.to_string(),
                c.omega_max.oracle.to_string(),
                c.size_multisets_match.to_string(),
                c.variances_match.to_string(),
                c.closed_form_match.map_or(String::new(), |b| b.to_string()),
                c.pass.to_string(),
            ]
        });
        csv_table(
            &[
                "case", "n", "edges", "chi_engine", "chi_oracle", "omega_min_engine", "omega_min_oracle",
                "omega_max_engine", "omega_max_oracle", "size_multisets_match", "variances_match",
                "closed_form_match", "pass",
            ],
            rows,
        )
    }
}
