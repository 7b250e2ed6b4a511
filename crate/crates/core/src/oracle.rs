//! Brute-force reference for chi and the coloring-sum extremes.
//!
//! Nothing here touches the search engine: colorings are produced by a plain
//! base-k counter over vertex indices and filtered for properness and
//! surjectivity. Exponential by construction, so it is capped.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use thiserror::Error;

use crate::coloring::{coloring_sum, LabeledColoring};
use crate::graph::Graph;
use crate::rational::Rational;

pub const DEFAULT_ORACLE_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle cap exceeded: {n} vertices, cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("color count {k} must lie in 1..={n}")]
    ColorCount { k: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_vertices: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_ORACLE_CAP,
        }
    }
}

/// Raw counter: `digits[v]` is the 0-based color of vertex `v`, vertex 0 is
/// the least significant digit.
struct Counter<'g> {
    graph: &'g Graph,
    k: usize,
    digits: Vec<usize>,
    first: bool,
}

impl Counter<'_> {
    fn advance(&mut self) -> bool {
        if self.first {
            self.first = false;
            return true;
        }
        for d in &mut self.digits {
            *d += 1;
            if *d < self.k {
                return true;
            }
            *d = 0;
        }
        false
    }

    /// Next proper surjective assignment, colors in `1..=k`.
    fn next_valid(&mut self) -> Option<Vec<usize>> {
        while self.advance() {
            let proper = self
                .graph
                .edges()
                .iter()
                .all(|&(u, v)| self.digits[u] != self.digits[v]);
            if proper && (0..self.k).all(|c| self.digits.contains(&c)) {
                return Some(self.digits.iter().map(|d| d + 1).collect());
            }
        }
        None
    }
}

/// Every proper surjective coloring `V -> {1..k}`, exactly once.
pub struct Colorings<'g> {
    counter: Counter<'g>,
}

impl Iterator for Colorings<'_> {
    type Item = LabeledColoring;

    fn next(&mut self) -> Option<LabeledColoring> {
        let colors = self.counter.next_valid()?;
        Some(LabeledColoring::from_colors(self.counter.graph, &colors).expect("checked proper and onto"))
    }
}

fn counter<'g>(graph: &'g Graph, k: usize, config: &OracleConfig) -> Result<Counter<'g>, OracleError> {
    let n = graph.order();
    if n > config.max_vertices {
        return Err(OracleError::TooLarge {
            n,
            cap: config.max_vertices,
        });
    }
    if k == 0 || k > n {
        return Err(OracleError::ColorCount { k, n });
    }
    Ok(Counter {
        graph,
        k,
        digits: vec![0; n],
        first: true,
    })
}

pub fn enumerate_colorings<'g>(
    graph: &'g Graph,
    k: usize,
    config: &OracleConfig,
) -> Result<Colorings<'g>, OracleError> {
    Ok(Colorings {
        counter: counter(graph, k, config)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleSummary {
    pub chi: usize,
    pub omega_min: u64,
    pub omega_max: u64,
    /// Class-size multisets (non-increasing) of the colorings attaining each extreme.
    pub min_size_multisets: BTreeSet<Vec<usize>>,
    pub max_size_multisets: BTreeSet<Vec<usize>>,
    /// Variances of the colorings attaining each extreme.
    pub min_variances: BTreeSet<Rational>,
    pub max_variances: BTreeSet<Rational>,
    /// Number of proper surjective chi-colorings.
    pub coloring_count: u64,
}

fn direct_variance(colors: &[usize]) -> Rational {
    let n = colors.len() as i64;
    let first: i64 = colors.iter().map(|&c| c as i64).sum();
    let second: i64 = colors.iter().map(|&c| (c * c) as i64).sum();
    Rational::new(BigInt::from(n * second - first * first), BigInt::from(n * n))
}

struct Extreme {
    omega: u64,
    sizes: BTreeSet<Vec<usize>>,
    variances: BTreeSet<Rational>,
}

impl Extreme {
    fn offer(slot: &mut Option<Extreme>, omega: u64, colors: &[usize], k: usize, better: fn(u64, u64) -> bool) {
        if slot.as_ref().is_none_or(|e| better(omega, e.omega)) {
            *slot = Some(Extreme {
                omega,
                sizes: BTreeSet::new(),
                variances: BTreeSet::new(),
            });
        }
        let e = slot.as_mut().unwrap();
        if e.omega == omega {
            let mut sizes = vec![0; k];
            for &c in colors {
                sizes[c - 1] += 1;
            }
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            e.sizes.insert(sizes);
            e.variances.insert(direct_variance(colors));
        }
    }
}

/// Tries k = 1, 2, ... until a proper surjective coloring exists, then scans
/// all of them at that k.
pub fn oracle_summary(graph: &Graph, config: &OracleConfig) -> Result<OracleSummary, OracleError> {
    for k in 1..=graph.order() {
        let mut counter = counter(graph, k, config)?;
        let mut count = 0u64;
        let mut low: Option<Extreme> = None;
        let mut high: Option<Extreme> = None;
        while let Some(colors) = counter.next_valid() {
            count += 1;
            let coloring = LabeledColoring::from_colors(graph, &colors).expect("checked proper and onto");
            let omega = coloring_sum(&coloring);
            Extreme::offer(&mut low, omega, &colors, k, |a, b| a < b);
            Extreme::offer(&mut high, omega, &colors, k, |a, b| a > b);
        }
        if let (Some(low), Some(high)) = (low, high) {
            return Ok(OracleSummary {
                chi: k,
                omega_min: low.omega,
                omega_max: high.omega,
                min_size_multisets: low.sizes,
                max_size_multisets: high.sizes,
                min_variances: low.variances,
                max_variances: high.variances,
                coloring_count: count,
            });
        }
    }
    unreachable!("n colors always suffice")
}
