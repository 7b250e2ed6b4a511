//! Exact distribution statistics of labeled colorings.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{
    chromatic_number, enumerate_chi_partitions, labelings, max_sum_coloring, min_sum_coloring,
    EngineError, LabeledColoring, SearchConfig, SumExtremeResult,
};
use crate::graph::Graph;
use crate::rational::{integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("moment order must be at least 1, got {0}")]
    MomentOrder(u32),
    #[error("class sizes must all be positive")]
    EmptyClass,
}

/// The p.m.f. `p(i) = theta(i) / n` over color indices `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoringDistribution {
    theta: Vec<usize>,
    n: usize,
}

impl ColoringDistribution {
    /// `theta[i - 1]` is the size of the class colored `i`.
    pub fn from_theta(theta: &[usize]) -> Result<Self, StatsError> {
        if theta.is_empty() || theta.contains(&0) {
            return Err(StatsError::EmptyClass);
        }
        Ok(Self {
            n: theta.iter().sum(),
            theta: theta.to_vec(),
        })
    }

    pub fn k(&self) -> usize {
        self.theta.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    /// `p(i)` for `i` in `1..=k`; zero elsewhere.
    pub fn probability(&self, i: usize) -> Rational {
        match i.checked_sub(1).and_then(|j| self.theta.get(j)) {
            Some(&t) => Rational::new(BigInt::from(t), BigInt::from(self.n)),
            None => Rational::zero(),
        }
    }

    pub fn probabilities(&self) -> Vec<Rational> {
        (1..=self.k()).map(|i| self.probability(i)).collect()
    }

    /// Same class sizes with colors reversed (`i -> k + 1 - i`).
    pub fn reversed(&self) -> Self {
        let mut theta = self.theta.clone();
        theta.reverse();
        Self { theta, n: self.n }
    }
}

pub fn pmf(coloring: &LabeledColoring) -> ColoringDistribution {
    ColoringDistribution::from_theta(&coloring.theta()).expect("colorings are surjective")
}

pub fn mean(dist: &ColoringDistribution) -> Rational {
    moment(dist, 1).expect("order 1 is valid")
}

/// `sum_i i^r p(i)`.
pub fn moment(dist: &ColoringDistribution, r: u32) -> Result<Rational, StatsError> {
    if r < 1 {
        return Err(StatsError::MomentOrder(r));
    }
    let total: BigInt = dist
        .theta
        .iter()
        .enumerate()
        .map(|(j, &t)| BigInt::from(j + 1).pow(r) * BigInt::from(t))
        .sum();
    Ok(Rational::new(total, BigInt::from(dist.n)))
}

/// Second moment minus the squared mean.
pub fn variance(dist: &ColoringDistribution) -> Rational {
    let mu = mean(dist);
    moment(dist, 2).expect("order 2 is valid") - &mu * &mu
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Classification {
    /// Discrete uniform on `1..=k`.
    Uniform { k: usize },
    /// Two colors with unequal class sizes.
    TwoPoint,
    Other,
}

/// Uniform takes precedence: an equal two-class split reports `Uniform { k: 2 }`.
pub fn classify(dist: &ColoringDistribution) -> Classification {
    if dist.theta.iter().all(|&t| t == dist.theta[0]) {
        Classification::Uniform { k: dist.k() }
    } else if dist.k() == 2 {
        Classification::TwoPoint
    } else {
        Classification::Other
    }
}

/// Mean and variance of one extreme, with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremeStats {
    pub omega: u64,
    pub mean: Rational,
    pub variance: Rational,
    pub witness: LabeledColoring,
    pub classification: Classification,
    pub optimal_partition_count: u64,
    pub optimal_size_multisets: Vec<Vec<usize>>,
    /// Distinct variances over all optimal size multisets, ascending.
    pub tied_variances: Vec<Rational>,
}

impl ExtremeStats {
    fn from_result(result: SumExtremeResult) -> Self {
        let dist = pmf(&result.coloring);
        let mut tied_variances: Vec<Rational> = result
            .optimal_size_multisets
            .iter()
            .map(|sizes| {
                let mut theta = sizes.clone();
                if result.objective == crate::coloring::Objective::Max {
                    theta.reverse();
                }
                variance(&ColoringDistribution::from_theta(&theta).expect("nonempty classes"))
            })
            .collect();
        tied_variances.sort();
        tied_variances.dedup();
        Self {
            omega: result.omega,
            mean: mean(&dist),
            variance: variance(&dist),
            classification: classify(&dist),
            witness: result.coloring,
            optimal_partition_count: result.optimal_partition_count,
            optimal_size_multisets: result.optimal_size_multisets,
            tied_variances,
        }
    }

    /// Another optimal coloring has a different variance than the witness.
    pub fn variance_ambiguous(&self) -> bool {
        self.tied_variances.len() > 1
    }
}

/// chi- and chi+-chromatic statistics of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticSummary {
    pub n: usize,
    pub chi: usize,
    pub min: ExtremeStats,
    pub max: ExtremeStats,
}

impl ChromaticSummary {
    pub fn omega_min(&self) -> u64 {
        self.min.omega
    }
    pub fn omega_max(&self) -> u64 {
        self.max.omega
    }
    pub fn mean_chi(&self) -> &Rational {
        &self.min.mean
    }
    pub fn var_chi(&self) -> &Rational {
        &self.min.variance
    }
    pub fn mean_chi_plus(&self) -> &Rational {
        &self.max.mean
    }
    pub fn var_chi_plus(&self) -> &Rational {
        &self.max.variance
    }
}

pub fn summarize(graph: &Graph, config: &SearchConfig) -> Result<ChromaticSummary, EngineError> {
    let min = min_sum_coloring(graph, config)?;
    let max = max_sum_coloring(graph, config)?;
    Ok(ChromaticSummary {
        n: graph.order(),
        chi: min.chi,
        min: ExtremeStats::from_result(min),
        max: ExtremeStats::from_result(max),
    })
}

/// Result of comparing every labeling of every chi-partition against the
/// two extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingCheck {
    pub labelings_checked: u64,
    /// Labelings whose mean falls outside `[mean_chi, mean_chi_plus]`.
    pub mean_violations: Vec<LabeledColoring>,
    /// Labeling of largest variance when it exceeds the chi+ variance.
    pub variance_above_chi_plus: Option<(LabeledColoring, Rational)>,
    /// Labeling of smallest variance when it is below the chi variance.
    pub variance_below_chi: Option<(LabeledColoring, Rational)>,
}

impl OrderingCheck {
    pub fn mean_ordering_holds(&self) -> bool {
        self.mean_violations.is_empty()
    }

    pub fn variance_ordering_holds(&self) -> bool {
        self.variance_above_chi_plus.is_none() && self.variance_below_chi.is_none()
    }
}

/// Exhaustive over `chi!` labelings per partition; intended for small graphs.
pub fn check_ordering(
    graph: &Graph,
    summary: &ChromaticSummary,
    config: &SearchConfig,
) -> Result<OrderingCheck, EngineError> {
    let chi = chromatic_number(graph, config)?;
    let mut check = OrderingCheck {
        labelings_checked: 0,
        mean_violations: Vec::new(),
        variance_above_chi_plus: None,
        variance_below_chi: None,
    };
    let mut highest: Option<(LabeledColoring, Rational)> = None;
    let mut lowest: Option<(LabeledColoring, Rational)> = None;
    for partition in enumerate_chi_partitions(graph, chi, config)? {
        for labeled in labelings(&partition) {
            check.labelings_checked += 1;
            let dist = pmf(&labeled);
            let mu = mean(&dist);
            if mu < summary.min.mean || mu > summary.max.mean {
                check.mean_violations.push(labeled.clone());
            }
            let var = variance(&dist);
            if highest.as_ref().is_none_or(|(_, v)| var > *v) {
                highest = Some((labeled.clone(), var.clone()));
            }
            if lowest.as_ref().is_none_or(|(_, v)| var < *v) {
                lowest = Some((labeled, var));
            }
        }
    }
    check.variance_above_chi_plus = highest.filter(|(_, v)| *v > summary.max.variance);
    check.variance_below_chi = lowest.filter(|(_, v)| *v < summary.min.variance);
    Ok(check)
}

/// Largest variance any distribution on `1..=k` can have: `(k - 1)^2 / 4`.
pub fn variance_ceiling(k: usize) -> Rational {
    let d = integer(k as i64 - 1);
    &d * &d / integer(4)
}
