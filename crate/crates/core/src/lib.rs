//! Statistics of the color-class distribution of chromatic colorings.
//!
//! For a graph `G` with chromatic number `chi`, every proper coloring using
//! exactly `chi` colors induces a distribution `f(i) = theta(i) / n` over the
//! color indices. Among those colorings, the ones of minimum and maximum
//! coloring sum define the chi- and chi+-chromatic mean and variance. This
//! crate computes them exactly, evaluates closed forms for the standard
//! families, and carries a brute-force oracle for cross-checking.

pub mod closed_forms;
pub mod coloring;
pub mod graph;
pub mod oracle;
pub mod rational;
pub mod stats;

#[cfg(test)]
mod test_graphs;

pub use coloring::{
    chromatic_number, clique_lower_bound, coloring_sum, enumerate_chi_partitions, greedy_dsatur,
    label_for_max, label_for_min, max_sum_coloring, min_sum_coloring, ColorPartition,
    ColoringError, EngineError, LabeledColoring, Objective, SearchConfig, SumExtremeResult,
};
pub use graph::{generate_family, validate, Diagnostics, Family, FamilySpec, Graph, GraphError};
pub use rational::Rational;
pub use stats::{summarize, ChromaticSummary, Classification, ColoringDistribution};
