//! Closed-form chi- and chi+-chromatic mean and variance for the standard
//! families.
//!
//! Two variants are kept side by side. `Derived` values follow from the
//! forced class sizes of each family and are checked against the engine and
//! the oracle. `Published` values reproduce the formulas as they were
//! originally stated, several of which disagree with their own derivations;
//! the report below puts all three sources next to each other.

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{EngineError, Objective, SearchConfig};
use crate::graph::{generate_family, Family, FamilySpec, GraphError};
use crate::rational::{integer, ratio, Rational};
use crate::stats::{check_ordering, summarize, variance_ceiling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Derived,
    Published,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error(transparent)]
    Family(#[from] GraphError),
    #[error("the uniform result needs equal part sizes, got {0:?}")]
    Unbalanced(Vec<usize>),
    #[error("no published {objective:?} formula for {family}")]
    NotPublished { family: Family, objective: Objective },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFormulaResult {
    pub spec: FamilySpec,
    pub objective: Objective,
    pub variant: Variant,
    pub chi: usize,
    pub mean: Rational,
    pub variance: Rational,
    pub notes: Vec<String>,
}

impl FamilyFormulaResult {
    /// Values no distribution on `1..=chi` can take.
    pub fn is_infeasible(&self) -> bool {
        self.variance < Rational::zero()
            || self.variance > variance_ceiling(self.chi)
            || self.mean < integer(1)
            || self.mean > integer(self.chi as i64)
    }
}

fn family_chi(spec: &FamilySpec) -> usize {
    match *spec {
        FamilySpec::Complete(n) => n,
        FamilySpec::Path(1) => 1,
        FamilySpec::Path(_) | FamilySpec::CompleteBipartite(..) | FamilySpec::Star(_) => 2,
        FamilySpec::Cycle(n) => 2 + n % 2,
        FamilySpec::Wheel(n) => 3 + (n + 1) % 2,
        FamilySpec::CompleteMultipartite(ref parts) => parts.len(),
    }
}

fn derived(spec: &FamilySpec, objective: Objective) -> Result<(Rational, Rational, Vec<String>), FormulaError> {
    let plus = objective == Objective::Max;
    let mut notes = Vec::new();
    let (mean, var) = match *spec {
        FamilySpec::Complete(n) => {
            let n = n as i64;
            (ratio(n + 1, 2), ratio(n * n - 1, 12))
        }
        FamilySpec::Path(1) => {
            notes.push("single vertex: one class".into());
            (integer(1), integer(0))
        }
        FamilySpec::Path(n) | FamilySpec::Cycle(n) if n % 2 == 0 => (ratio(3, 2), ratio(1, 4)),
        FamilySpec::Path(n) => {
            let n = n as i64;
            let mean = if plus { ratio(3 * n + 1, 2 * n) } else { ratio(3 * n - 1, 2 * n) };
            (mean, ratio(n * n - 1, 4 * n * n))
        }
        FamilySpec::Cycle(n) => {
            let n = n as i64;
            let mean = if plus { ratio(5 * n - 3, 2 * n) } else { ratio(3 * n + 3, 2 * n) };
            (mean, ratio(n * n + 8 * n - 9, 4 * n * n))
        }
        FamilySpec::Wheel(n) if n % 2 == 1 => {
            let n = n as i64;
            let mean = if plus { ratio(5 * n - 3, 2 * n) } else { ratio(3 * n + 3, 2 * n) };
            (mean, ratio(n * n + 8 * n - 9, 4 * n * n))
        }
        FamilySpec::Wheel(n) => {
            let n = n as i64;
            let mean = if plus { ratio(7 * n - 8, 2 * n) } else { ratio(3 * n + 8, 2 * n) };
            (mean, ratio(n * n + 32 * n - 64, 4 * n * n))
        }
        FamilySpec::CompleteBipartite(..) | FamilySpec::Star(_) => {
            let parts = spec.parts().unwrap();
            let (big, small) = (parts[0].max(parts[1]) as i64, parts[0].min(parts[1]) as i64);
            let n = big + small;
            let mean = if plus { integer(1) + ratio(big, n) } else { integer(1) + ratio(small, n) };
            (mean, ratio(big * small, n * n))
        }
        FamilySpec::CompleteMultipartite(ref parts) => {
            if parts.iter().any(|&p| p != parts[0]) {
                return Err(FormulaError::Unbalanced(parts.clone()));
            }
            let k = parts.len() as i64;
            (ratio(k + 1, 2), ratio(k * k - 1, 12))
        }
    };
    Ok((mean, var, notes))
}

fn published(spec: &FamilySpec, objective: Objective) -> Result<(Rational, Rational, Vec<String>), FormulaError> {
    let plus = objective == Objective::Max;
    let mut notes = Vec::new();
    let (mean, var) = match *spec {
        FamilySpec::Complete(n) => {
            let n = n as i64;
            (ratio(n + 1, 2), ratio(n * n - 1, 12))
        }
        FamilySpec::Path(n) | FamilySpec::Cycle(n) if n % 2 == 0 => (ratio(3, 2), ratio(1, 4)),
        FamilySpec::Path(n) => {
            let n = n as i64;
            if plus {
                notes.push("stated mean (3n-1)/(2n); its derivation gives (3n+1)/(2n)".into());
            }
            (ratio(3 * n - 1, 2 * n), ratio(n * n - 1, 4 * n * n))
        }
        FamilySpec::Cycle(n) => {
            let n = n as i64;
            if plus {
                (ratio(5 * n - 3, 2 * n), ratio(n * n + 8 * n - 9, 4 * n * n))
            } else {
                notes.push("stated variance (n^2-8n+9)/(4n^2); its derivation gives (n^2+8n-9)/(4n^2)".into());
                (ratio(3 * n + 3, 2 * n), ratio(n * n - 8 * n + 9, 4 * n * n))
            }
        }
        FamilySpec::Wheel(n) if n % 2 == 1 => {
            let n = n as i64;
            if plus {
                notes.push("stated variance (n^2+30n-31)/(4n^2); its derivation gives (n^2+8n-9)/(4n^2)".into());
                (ratio(5 * n - 3, 2 * n), ratio(n * n + 30 * n - 31, 4 * n * n))
            } else {
                (ratio(3 * n + 3, 2 * n), ratio(n * n + 8 * n - 9, 4 * n * n))
            }
        }
        FamilySpec::Wheel(n) => {
            let n = n as i64;
            notes.push(if plus {
                "stated mean (3n+1)/(2n+2); its derivation gives (7n-8)/(2n)".into()
            } else {
                "stated mean (3n+1)/(2n+2); its derivation gives (3n+8)/(2n)".into()
            });
            (ratio(3 * n + 1, 2 * n + 2), ratio(n * n + 32 * n - 64, 4 * n * n))
        }
        FamilySpec::CompleteBipartite(..) | FamilySpec::Star(_) => {
            if plus {
                return Err(FormulaError::NotPublished {
                    family: spec.family(),
                    objective,
                });
            }
            let parts = spec.parts().unwrap();
            let (m1, m2) = (parts[0].max(parts[1]) as i64, parts[0].min(parts[1]) as i64);
            let n = m1 + m2;
            if m1 == m2 {
                (ratio(3, 2), ratio(1, 4))
            } else {
                (
                    integer(1) + ratio(m2, n),
                    ratio((n - 1) * m1 + 2 * (2 * n - 1) * m2, n * n),
                )
            }
        }
        FamilySpec::CompleteMultipartite(ref parts) => {
            let k = parts.len() as i64;
            if parts.iter().any(|&p| p != parts[0]) {
                notes.push("uniform claim applied to unequal parts".into());
            }
            (ratio(k + 1, 2), ratio(k * k - 1, 12))
        }
    };
    Ok((mean, var, notes))
}

/// Closed form for one extreme: `Objective::Min` is the chi-chromatic
/// value, `Objective::Max` the chi+-chromatic one.
pub fn closed_form(spec: &FamilySpec, objective: Objective, variant: Variant) -> Result<FamilyFormulaResult, FormulaError> {
    spec.check()?;
    let (mean, variance, mut notes) = match variant {
        Variant::Derived => derived(spec, objective)?,
        Variant::Published => published(spec, objective)?,
    };
    let chi = family_chi(spec);
    if variance < Rational::zero() {
        notes.push("negative variance".into());
    } else if variance > variance_ceiling(chi) {
        notes.push(format!("variance exceeds the maximum (k-1)^2/4 for k = {chi}"));
    }
    Ok(FamilyFormulaResult {
        spec: spec.clone(),
        objective,
        variant,
        chi,
        mean,
        variance,
        notes,
    })
}

pub fn closed_form_chi(spec: &FamilySpec, variant: Variant) -> Result<FamilyFormulaResult, FormulaError> {
    closed_form(spec, Objective::Min, variant)
}

pub fn closed_form_chi_plus(spec: &FamilySpec, variant: Variant) -> Result<FamilyFormulaResult, FormulaError> {
    closed_form(spec, Objective::Max, variant)
}

/// Class sizes in label order for a family member, computed from the
/// structure rather than the formulas. Used to cross-check [`closed_form`].
pub fn family_theta(spec: &FamilySpec, objective: Objective) -> Vec<i64> {
    let mut theta: Vec<i64> = match *spec {
        FamilySpec::Complete(n) => vec![1; n],
        FamilySpec::Path(1) => vec![1],
        FamilySpec::Path(n) | FamilySpec::Cycle(n) if n % 2 == 0 => vec![n as i64 / 2; 2],
        FamilySpec::Path(n) => vec![(n as i64 + 1) / 2, n as i64 / 2],
        FamilySpec::Cycle(n) => vec![(n as i64 - 1) / 2, (n as i64 - 1) / 2, 1],
        FamilySpec::Wheel(n) if n % 2 == 1 => vec![(n as i64 - 1) / 2, (n as i64 - 1) / 2, 1],
        FamilySpec::Wheel(n) => vec![(n as i64 - 2) / 2, (n as i64 - 2) / 2, 1, 1],
        FamilySpec::CompleteBipartite(..) | FamilySpec::Star(_) | FamilySpec::CompleteMultipartite(_) => {
            spec.parts().unwrap().into_iter().map(|p| p as i64).collect()
        }
    };
    theta.sort_unstable_by(|a, b| b.cmp(a));
    if objective == Objective::Max {
        theta.reverse();
    }
    theta
}

/// Members of `family` with at most `n_max` vertices. Multipartite
/// families are swept over all part-size combinations that have a derived
/// closed form (balanced parts for `CompleteMultipartite`).
pub fn family_instances(family: Family, n_max: usize) -> Vec<FamilySpec> {
    match family {
        Family::Complete => (1..=n_max).map(FamilySpec::Complete).collect(),
        Family::Path => (1..=n_max).map(FamilySpec::Path).collect(),
        Family::Cycle => (3..=n_max).map(FamilySpec::Cycle).collect(),
        Family::Wheel => (4..=n_max).map(FamilySpec::Wheel).collect(),
        Family::Star => (2..=n_max).map(FamilySpec::Star).collect(),
        Family::CompleteBipartite => (2..=n_max)
            .flat_map(|n| (1..=n / 2).map(move |small| FamilySpec::CompleteBipartite(n - small, small)))
            .collect(),
        Family::CompleteMultipartite => (2..=n_max)
            .flat_map(|k| (1..=n_max / k).map(move |m| FamilySpec::CompleteMultipartite(vec![m; k])))
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Mean,
    Variance,
}

/// One statistic of one family member from all three sources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub spec: FamilySpec,
    pub objective: Objective,
    pub statistic: Statistic,
    /// `None` when the engine refused the instance.
    pub engine: Option<Rational>,
    pub derived: Option<Rational>,
    pub published: Option<Rational>,
    pub notes: Vec<String>,
    pub skipped: Option<String>,
}

impl ReportRow {
    pub fn derived_matches(&self) -> Option<bool> {
        Some(self.engine.as_ref()? == self.derived.as_ref()?)
    }

    pub fn published_matches(&self) -> Option<bool> {
        Some(self.engine.as_ref()? == self.published.as_ref()?)
    }

    /// A published value is present and wrong, or infeasible on its face.
    pub fn flagged(&self) -> bool {
        self.published_matches() == Some(false) || self.notes.iter().any(|n| n.starts_with("published:"))
    }
}

/// Outcome of the mean/variance ordering check for one family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingRow {
    pub spec: FamilySpec,
    pub labelings_checked: u64,
    pub mean_ordering_holds: bool,
    /// `(theta in color order, variance)` of a labeling above the chi+ variance.
    pub variance_above_chi_plus: Option<(Vec<usize>, Rational)>,
    pub variance_below_chi: Option<(Vec<usize>, Rational)>,
    pub chi_variance: Rational,
    pub chi_plus_variance: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiscrepancyReport {
    pub rows: Vec<ReportRow>,
    pub ordering: Vec<OrderingRow>,
}

impl DiscrepancyReport {
    pub fn derived_mismatches(&self) -> usize {
        self.rows.iter().filter(|r| r.derived_matches() == Some(false)).count()
    }

    pub fn flagged(&self) -> usize {
        self.rows.iter().filter(|r| r.flagged()).count()
    }
}

/// Largest order for which every labeling of every chi-partition is checked.
pub const ORDERING_CHECK_MAX_N: usize = 7;

pub fn discrepancy_report(specs: &[FamilySpec], config: &SearchConfig) -> DiscrepancyReport {
    let mut report = DiscrepancyReport::default();
    for spec in specs {
        let graph = match generate_family(spec) {
            Ok(g) => g,
            Err(e) => {
                push_skipped(&mut report, spec, e.to_string());
                continue;
            }
        };
        let summary = match summarize(&graph, config) {
            Ok(s) => s,
            Err(e @ EngineError::TooLarge { .. }) => {
                push_skipped(&mut report, spec, e.to_string());
                continue;
            }
            Err(e) => panic!("unexpected engine failure on {spec}: {e}"),
        };
        for (objective, stats) in [(Objective::Min, &summary.min), (Objective::Max, &summary.max)] {
            let derived = closed_form(spec, objective, Variant::Derived).ok();
            let published = closed_form(spec, objective, Variant::Published).ok();
            for statistic in [Statistic::Mean, Statistic::Variance] {
                let pick = |r: &FamilyFormulaResult| match statistic {
                    Statistic::Mean => r.mean.clone(),
                    Statistic::Variance => r.variance.clone(),
                };
                let engine = match statistic {
                    Statistic::Mean => stats.mean.clone(),
                    Statistic::Variance => stats.variance.clone(),
                };
                let mut notes = Vec::new();
                if let Some(p) = &published {
                    notes.extend(p.notes.iter().filter(|n| relevant(n, statistic)).map(|n| format!("published: {n}")));
                }
                if statistic == Statistic::Variance && stats.variance_ambiguous() {
                    notes.push("tied optima have different variances".into());
                }
                report.rows.push(ReportRow {
                    spec: spec.clone(),
                    objective,
                    statistic,
                    engine: Some(engine),
                    derived: derived.as_ref().map(pick),
                    published: published.as_ref().map(pick),
                    notes,
                    skipped: None,
                });
            }
        }
        if graph.order() <= ORDERING_CHECK_MAX_N {
            let check = check_ordering(&graph, &summary, config).expect("instance already admitted");
            report.ordering.push(OrderingRow {
                spec: spec.clone(),
                labelings_checked: check.labelings_checked,
                mean_ordering_holds: check.mean_ordering_holds(),
                variance_above_chi_plus: check.variance_above_chi_plus.map(|(l, v)| (l.theta(), v)),
                variance_below_chi: check.variance_below_chi.map(|(l, v)| (l.theta(), v)),
                chi_variance: summary.min.variance.clone(),
                chi_plus_variance: summary.max.variance.clone(),
            });
        }
    }
    report
}

fn relevant(note: &str, statistic: Statistic) -> bool {
    match statistic {
        Statistic::Mean => note.contains("mean"),
        Statistic::Variance => note.contains("variance"),
    }
}

fn push_skipped(report: &mut DiscrepancyReport, spec: &FamilySpec, reason: String) {
    for objective in [Objective::Min, Objective::Max] {
        for statistic in [Statistic::Mean, Statistic::Variance] {
            report.rows.push(ReportRow {
                spec: spec.clone(),
                objective,
                statistic,
                engine: None,
                derived: None,
                published: None,
                notes: Vec::new(),
                skipped: Some(reason.clone()),
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

/// Mean and variance from class sizes already in label order.
    fn from_theta(theta: &[i64]) -> (Rational, Rational) {
        let n: i64 = theta.iter().sum();
        let first: i64 = theta.iter().zip(1..).map(|(t, i)| i * t).sum();
        let second: i64 = theta.iter().zip(1..).map(|(t, i)| i * i * t).sum();
        (ratio(first, n), ratio(n * second - first * first, n * n))
    }

    fn chi(spec: FamilySpec, variant: Variant) -> FamilyFormulaResult {
        closed_form_chi(&spec, variant).unwrap()
    }

    fn plus(spec: FamilySpec, variant: Variant) -> FamilyFormulaResult {
        closed_form_chi_plus(&spec, variant).unwrap()
    }

    #[test]
    fn examples() {
        let k6 = chi(FamilySpec::Complete(6), Variant::Derived);
        assert_eq!((k6.mean, k6.variance), (ratio(7, 2), ratio(35, 12)));

        assert_eq!(chi(FamilySpec::Cycle(5), Variant::Derived).variance, ratio(14, 25));
        let printed = chi(FamilySpec::Cycle(5), Variant::Published);
        assert_eq!(printed.variance, ratio(-6, 100));
        assert!(printed.is_infeasible());
        assert!(printed.notes.iter().any(|n| n == "negative variance"));

        let star = chi(FamilySpec::CompleteBipartite(1, 3), Variant::Derived);
        assert_eq!((star.mean, star.variance), (ratio(5, 4), ratio(3, 16)));
        let printed = chi(FamilySpec::CompleteBipartite(1, 3), Variant::Published);
        assert_eq!(printed.variance, ratio(23, 16));
        assert!(printed.is_infeasible());

        assert_eq!(plus(FamilySpec::Cycle(5), Variant::Derived).mean, ratio(11, 5));
        assert_eq!(plus(FamilySpec::Path(5), Variant::Derived).mean, ratio(8, 5));
        assert_eq!(plus(FamilySpec::Path(5), Variant::Published).mean, ratio(7, 5));
        assert_eq!(plus(FamilySpec::Wheel(6), Variant::Derived).mean, ratio(17, 6));
        assert_eq!(plus(FamilySpec::Wheel(6), Variant::Published).mean, ratio(19, 14));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            closed_form_chi(&FamilySpec::CompleteMultipartite(vec![1, 2]), Variant::Derived),
            Err(FormulaError::Unbalanced(_))
        ));
        assert!(closed_form_chi(&FamilySpec::CompleteMultipartite(vec![1, 2]), Variant::Published).is_ok());
        assert!(matches!(
            closed_form_chi(&FamilySpec::Cycle(2), Variant::Derived),
            Err(FormulaError::Family(_))
        ));
        assert!(matches!(
            closed_form_chi_plus(&FamilySpec::Star(4), Variant::Published),
            Err(FormulaError::NotPublished { .. })
        ));
    }

    #[test]
    fn formulas_match_structural_class_sizes() {
        for family in Family::ALL {
            for spec in family_instances(family, 40) {
                for objective in [Objective::Min, Objective::Max] {
                    let r = closed_form(&spec, objective, Variant::Derived).unwrap();
                    let (mean, var) = from_theta(&family_theta(&spec, objective));
                    assert_eq!((&r.mean, &r.variance), (&mean, &var), "{spec} {objective:?}");
                    assert!(!r.is_infeasible(), "{spec}");
                    assert!(r.notes.iter().all(|n| !n.contains("variance")), "{spec} {:?}", r.notes);
                }
            }
        }
    }

    #[test]
    fn complete_and_even_symmetry() {
        for n in 1..30 {
            let spec = FamilySpec::Complete(n);
            let (a, b) = (chi(spec.clone(), Variant::Derived), plus(spec, Variant::Derived));
            assert_eq!((a.mean, a.variance), (b.mean, b.variance));
        }
        for n in (4..30).step_by(2) {
            for spec in [FamilySpec::Path(n), FamilySpec::Cycle(n)] {
                let (a, b) = (chi(spec.clone(), Variant::Derived), plus(spec, Variant::Derived));
                assert_eq!((a.mean, a.variance), (b.mean, b.variance));
            }
        }
    }

    #[test]
    fn instance_sweeps() {
        assert_eq!(family_instances(Family::Cycle, 5), vec![FamilySpec::Cycle(3), FamilySpec::Cycle(4), FamilySpec::Cycle(5)]);
        assert_eq!(family_instances(Family::CompleteBipartite, 4).len(), 1 + 1 + 2);
        assert!(family_instances(Family::CompleteMultipartite, 6).contains(&FamilySpec::CompleteMultipartite(vec![2, 2, 2])));
        assert!(family_instances(Family::Wheel, 3).is_empty());
    }

    #[test]
    fn report_small_cycles() {
        let specs = family_instances(Family::Cycle, 9);
        let report = discrepancy_report(&specs, &SearchConfig::default());
        assert_eq!(report.derived_mismatches(), 0);
        for row in &report.rows {
            let odd = matches!(row.spec, FamilySpec::Cycle(n) if n % 2 == 1);
            let printed_var_wrong = odd && row.objective == Objective::Min && row.statistic == Statistic::Variance;
            assert_eq!(row.flagged(), printed_var_wrong, "{row:?}");
        }
        let c5 = report.ordering.iter().find(|o| o.spec == FamilySpec::Cycle(5)).unwrap();
        assert!(c5.mean_ordering_holds);
        assert_eq!(c5.variance_above_chi_plus, Some((vec![2, 1, 2], ratio(4, 5))));
    }

    #[test]
    fn report_skips_refused_instances() {
        let report = discrepancy_report(&[FamilySpec::Path(6)], &SearchConfig::with_max_vertices(5));
        assert_eq!(report.rows.len(), 4);
        assert!(report.rows.iter().all(|r| r.skipped.is_some() && r.engine.is_none()));
    }
}
