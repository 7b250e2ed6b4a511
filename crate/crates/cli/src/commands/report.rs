use std::fmt::Write;

use chromastat::closed_forms::{discrepancy_report, family_instances, OrderingRow, ReportRow};
use chromastat::{Family, Objective};
use serde::Serialize;

use crate::output::{csv_table, render, CliError, Exact, Render};
use crate::{Context, Outcome, ReportArgs};

#[derive(Debug, Serialize)]
pub struct Row {
    pub instance: String,
    pub family: Family,
    pub n: usize,
    /// `chi` (minimum coloring sum) or `chi-plus` (maximum).
    pub extreme: &'static str,
    pub statistic: chromastat::closed_forms::Statistic,
    pub engine: Option<Exact>,
    pub derived: Option<Exact>,
    pub published: Option<Exact>,
    pub derived_matches: Option<bool>,
    pub published_matches: Option<bool>,
    pub flagged: bool,
    pub notes: Vec<String>,
    pub skipped: Option<String>,
}

fn extreme_name(o: Objective) -> &'static str {
    match o {
        Objective::Min => "chi",
        Objective::Max => "chi-plus",
    }
}

impl From<&ReportRow> for Row {
    fn from(r: &ReportRow) -> Self {
        Self {
            instance: r.spec.to_string(),
            family: r.spec.family(),
            n: r.spec.order(),
            extreme: extreme_name(r.objective),
            statistic: r.statistic,
            engine: r.engine.as_ref().map(Exact::from),
            derived: r.derived.as_ref().map(Exact::from),
            published: r.published.as_ref().map(Exact::from),
            derived_matches: r.derived_matches(),
            published_matches: r.published_matches(),
            flagged: r.flagged(),
            notes: r.notes.clone(),
            skipped: r.skipped.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Counterexample {
    /// Class sizes in color order.
    pub theta: Vec<usize>,
    pub variance: Exact,
}

#[derive(Debug, Serialize)]
pub struct Ordering {
    pub instance: String,
    pub labelings_checked: u64,
    pub mean_ordering_holds: bool,
    pub variance_ordering_holds: bool,
    pub var_chi: Exact,
    pub var_chi_plus: Exact,
    pub variance_above_chi_plus: Option<Counterexample>,
    pub variance_below_chi: Option<Counterexample>,
}

impl From<&OrderingRow> for Ordering {
    fn from(o: &OrderingRow) -> Self {
        let ce = |c: &Option<(Vec<usize>, chromastat::Rational)>| {
            c.as_ref().map(|(theta, v)| Counterexample {
                theta: theta.clone(),
                variance: v.into(),
            })
        };
        Self {
            instance: o.spec.to_string(),
            labelings_checked: o.labelings_checked,
            mean_ordering_holds: o.mean_ordering_holds,
            variance_ordering_holds: o.variance_above_chi_plus.is_none() && o.variance_below_chi.is_none(),
            var_chi: (&o.chi_variance).into(),
            var_chi_plus: (&o.chi_plus_variance).into(),
            variance_above_chi_plus: ce(&o.variance_above_chi_plus),
            variance_below_chi: ce(&o.variance_below_chi),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ReportResults {
    pub rows: Vec<Row>,
    pub ordering: Vec<Ordering>,
    pub derived_mismatches: usize,
    pub flagged: usize,
    pub skipped: usize,
}

fn opt(e: &Option<Exact>) -> String {
    e.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)
}

impl Render for ReportResults {
    fn text(&self, _warnings: &[String]) -> String {
        let mut out = String::new();
        writeln!(out, "{:<28} {:<8} {:<8} {:>12} {:>12} {:>12}  flags", "instance", "extreme", "stat", "engine", "derived", "published").unwrap();
        for r in &self.rows {
            let stat = match r.statistic {
                chromastat::closed_forms::Statistic::Mean => "mean",
                chromastat::closed_forms::Statistic::Variance => "variance",
            };
            let mut flags = Vec::new();
            if let Some(reason) = &r.skipped {
                flags.push(format!("skipped: {reason}"));
            }
            if r.derived_matches == Some(false) {
                flags.push("DERIVED MISMATCH".to_string());
            }
            if r.flagged {
                flags.push("published value flagged".to_string());
            }
            flags.extend(r.notes.iter().cloned());
            writeln!(
                out,
                "{:<28} {:<8} {:<8} {:>12} {:>12} {:>12}  {}",
                r.instance,
                r.extreme,
                stat,
                opt(&r.engine),
                opt(&r.derived),
                opt(&r.published),
                flags.join("; ")
            )
            .unwrap();
        }
        let failures: Vec<&Ordering> = self.ordering.iter().filter(|o| !o.variance_ordering_holds || !o.mean_ordering_holds).collect();
        writeln!(out).unwrap();
        writeln!(out, "ordering over all labelings: {} instances checked", self.ordering.len()).unwrap();
        for o in &self.ordering {
            if !o.mean_ordering_holds {
                writeln!(out, "  {}: mean ordering FAILS", o.instance).unwrap();
            }
        }
        for o in failures {
            if let Some(c) = &o.variance_above_chi_plus {
                writeln!(out, "  {}: labeling theta {:?} has variance {} > chi+ variance {}", o.instance, c.theta, c.variance, o.var_chi_plus).unwrap();
            }
            if let Some(c) = &o.variance_below_chi {
                writeln!(out, "  {}: labeling theta {:?} has variance {} < chi variance {}", o.instance, c.theta, c.variance, o.var_chi).unwrap();
            }
        }
        writeln!(
            out,
            "{} rows: {} derived mismatches, {} published values flagged, {} skipped",
            self.rows.len(),
            self.derived_mismatches,
            self.flagged,
            self.skipped
        )
        .unwrap();
        out
    }

    fn csv(&self) -> Result<String, CliError> {
        let b = |v: Option<bool>| v.map_or(String::new(), |b| b.to_string());
        let e = |v: &Option<Exact>| v.as_ref().map_or(String::new(), ToString::to_string);
        let rows = self.rows.iter().map(|r| {
            vec![
                r.instance.clone(),
                r.family.to_string(),
                r.n.to_string(),
                r.extreme.to_string(),
                serde_json::to_value(r.statistic).unwrap().as_str().unwrap().to_string(),
                e(&r.engine),
                e(&r.derived),
                e(&r.published),
                b(r.derived_matches),
                b(r.published_matches),
                r.flagged.to_string(),
                r.notes.join("; "),
                r.skipped.clone().unwrap_or_default(),
            ]
        });
        csv_table(
            &[
                "instance", "family", "n", "extreme", "statistic", "engine", "derived", "published",
                "derived_matches", "published_matches", "flagged", "notes", "skipped",
            ],
            rows,
        )
    }
}

pub fn run(args: &ReportArgs, ctx: &Context) -> Result<Outcome, CliError> {
    let mut families = Vec::new();
    for name in &args.families {
        if name.trim() == "all" {
            families.extend(Family::ALL);
        } else {
            families.push(name.parse::<Family>().map_err(CliError::input)?);
        }
    }
    families.dedup();
    let specs: Vec<_> = families
        .iter()
        .flat_map(|&f| family_instances(f, args.n_max))
        .collect();
    let report = discrepancy_report(&specs, &ctx.config);
    let results = ReportResults {
        rows: report.rows.iter().map(Row::from).collect(),
        ordering: report.ordering.iter().map(Ordering::from).collect(),
        derived_mismatches: report.derived_mismatches(),
        flagged: report.flagged(),
        skipped: report.rows.iter().filter(|r| r.skipped.is_some()).count(),
    };
    Ok(Outcome {
        rendered: render(ctx.format, &ctx.echo, &[], &results)?,
        exit: if results.derived_mismatches == 0 { 0 } else { 4 },
    })
}
