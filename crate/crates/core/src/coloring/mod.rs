//! Proper colorings with exactly chi(G) colors and the search for their
//! coloring-sum extremes.

mod bounds;
mod chromatic;
mod partitions;
mod search;

use std::cmp::Reverse;

use thiserror::Error;

use crate::graph::Graph;

pub use bounds::{clique_lower_bound, greedy_dsatur};
pub use chromatic::chromatic_number;
pub use partitions::{enumerate_chi_partitions, ChiPartitions};
pub use search::{max_sum_coloring, min_sum_coloring, Objective, SumExtremeResult};

pub const DEFAULT_MAX_VERTICES: usize = 64;

/// Limits for the exact search. There is no heuristic fallback: an instance
/// above the cap is refused.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_vertices: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl SearchConfig {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        Self { max_vertices }
    }

    pub(crate) fn admit(&self, graph: &Graph) -> Result<(), EngineError> {
        if graph.order() > self.max_vertices {
            Err(EngineError::TooLarge {
                n: graph.order(),
                cap: self.max_vertices,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("instance too large: {n} vertices exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("k = {k} requested but the chromatic number is {chi}")]
    WrongColorCount { k: usize, chi: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("expected {expected} entries, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("vertex {0} is not covered by any class")]
    Uncovered(usize),
    #[error("vertex {0} appears more than once")]
    Repeated(usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("color classes must be nonempty")]
    EmptyClass,
    #[error("edge ({0}, {1}) joins two vertices of the same class")]
    Improper(usize, usize),
    #[error("labels must be a bijection onto 1..={0}")]
    NotBijective(usize),
}

/// A partition of the vertex set into nonempty independent sets, in canonical
/// order: classes by size descending, ties by smallest member ascending.
///
/// The derived ordering compares class lists lexicographically and is the
/// tie-break among equally good partitions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorPartition {
    classes: Vec<Vec<usize>>,
    n: usize,
}

impl ColorPartition {
    /// Validates `classes` against `graph` and canonicalizes them.
    pub fn new(graph: &Graph, classes: Vec<Vec<usize>>) -> Result<Self, ColoringError> {
        let n = graph.order();
        let mut owner = vec![None; n];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(ColoringError::EmptyClass);
            }
            for &v in class {
                let slot = owner.get_mut(v).ok_or(ColoringError::OutOfRange(v))?;
                if slot.replace(c).is_some() {
                    return Err(ColoringError::Repeated(v));
                }
            }
        }
        if let Some(v) = owner.iter().position(Option::is_none) {
            return Err(ColoringError::Uncovered(v));
        }
        if let Some(&(u, v)) = graph.edges().iter().find(|&&(u, v)| owner[u] == owner[v]) {
            return Err(ColoringError::Improper(u, v));
        }
        Ok(Self::canonical(n, classes))
    }

    /// Groups vertices by color; `colors[v]` is any value, equal values share a class.
    pub fn from_colors(graph: &Graph, colors: &[usize]) -> Result<Self, ColoringError> {
        if colors.len() != graph.order() {
            return Err(ColoringError::WrongLength {
                expected: graph.order(),
                found: colors.len(),
            });
        }
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes.retain(|c| !c.is_empty());
        Self::new(graph, classes)
    }

    pub(crate) fn canonical(n: usize, mut classes: Vec<Vec<usize>>) -> Self {
        for class in &mut classes {
            class.sort_unstable();
        }
        classes.sort_by_key(|c| (Reverse(c.len()), c[0]));
        Self { classes, n }
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Class sizes in canonical (non-increasing) order.
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// A partition together with a bijection from its classes to colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledColoring {
    partition: ColorPartition,
    /// `labels[j]` is the color of `partition.classes()[j]`.
    labels: Vec<usize>,
}

impl LabeledColoring {
    pub fn new(partition: ColorPartition, labels: Vec<usize>) -> Result<Self, ColoringError> {
        let k = partition.k();
        let mut seen = vec![false; k + 1];
        if labels.len() != k {
            return Err(ColoringError::NotBijective(k));
        }
        for &l in &labels {
            if l == 0 || l > k || std::mem::replace(&mut seen[l], true) {
                return Err(ColoringError::NotBijective(k));
            }
        }
        Ok(Self { partition, labels })
    }

    /// Builds a coloring from per-vertex colors in `1..=k`; every color in
    /// `1..=max` must be used.
    pub fn from_colors(graph: &Graph, colors: &[usize]) -> Result<Self, ColoringError> {
        let k = colors.iter().copied().max().unwrap_or(0);
        if colors.contains(&0) {
            return Err(ColoringError::NotBijective(k));
        }
        let mut used = vec![false; k];
        for &c in colors {
            used[c - 1] = true;
        }
        if used.contains(&false) {
            return Err(ColoringError::NotBijective(k));
        }
        let zero_based: Vec<usize> = colors.iter().map(|c| c - 1).collect();
        let partition = ColorPartition::from_colors(graph, &zero_based)?;
        let labels = partition
            .classes()
            .iter()
            .map(|class| colors[class[0]])
            .collect();
        Self::new(partition, labels)
    }

    pub fn partition(&self) -> &ColorPartition {
        &self.partition
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn k(&self) -> usize {
        self.partition.k()
    }

    pub fn order(&self) -> usize {
        self.partition.order()
    }

    /// `theta()[i - 1]` is the number of vertices colored `i`.
    pub fn theta(&self) -> Vec<usize> {
        let mut theta = vec![0; self.k()];
        for (class, &label) in self.partition.classes().iter().zip(&self.labels) {
            theta[label - 1] = class.len();
        }
        theta
    }

    /// Per-vertex colors in `1..=k`.
    pub fn colors(&self) -> Vec<usize> {
        let mut colors = vec![0; self.order()];
        for (class, &label) in self.partition.classes().iter().zip(&self.labels) {
            for &v in class {
                colors[v] = label;
            }
        }
        colors
    }

    /// Vertex sets by color: entry `i - 1` holds the vertices colored `i`.
    pub fn classes_by_color(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k()];
        for (class, &label) in self.partition.classes().iter().zip(&self.labels) {
            out[label - 1] = class.clone();
        }
        out
    }

    pub fn is_proper_for(&self, graph: &Graph) -> bool {
        let colors = self.colors();
        colors.len() == graph.order() && graph.edges().iter().all(|&(u, v)| colors[u] != colors[v])
    }
}

/// The coloring sum: color indices weighted by class sizes.
pub fn coloring_sum(coloring: &LabeledColoring) -> u64 {
    coloring
        .theta()
        .iter()
        .enumerate()
        .map(|(i, &t)| (i as u64 + 1) * t as u64)
        .sum()
}

/// Color 1 to the largest class, 2 to the next, and so on.
pub fn label_for_min(partition: &ColorPartition) -> LabeledColoring {
    LabeledColoring {
        labels: (1..=partition.k()).collect(),
        partition: partition.clone(),
    }
}

/// Color 1 to the smallest class, up to `k` for the largest.
pub fn label_for_max(partition: &ColorPartition) -> LabeledColoring {
    LabeledColoring {
        labels: (1..=partition.k()).rev().collect(),
        partition: partition.clone(),
    }
}

/// Every one of the `k!` labelings of `partition`, in lexicographic order of
/// the label vector.
pub fn labelings(partition: &ColorPartition) -> impl Iterator<Item = LabeledColoring> + '_ {
    let k = partition.k();
    let mut next: Option<Vec<usize>> = Some((1..=k).collect());
    std::iter::from_fn(move || {
        let current = next.take()?;
        next = next_permutation(&current);
        Some(LabeledColoring {
            partition: partition.clone(),
            labels: current,
        })
    })
}

fn next_permutation(p: &[usize]) -> Option<Vec<usize>> {
    let mut p = p.to_vec();
    let i = (1..p.len()).rev().find(|&i| p[i - 1] < p[i])?;
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1])?;
    p.swap(i - 1, j);
    p[i..].reverse();
    Some(p)
}
