use std::collections::BTreeSet;

use serde::Serialize;

use super::{chromatic_number, label_for_max, label_for_min, ColorPartition, EngineError, LabeledColoring, SearchConfig};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Min,
    Max,
}

impl Objective {
    /// Coloring sum of the best labeling of a partition with these class sizes.
    fn score(self, sizes: &mut [usize]) -> u64 {
        match self {
            Objective::Min => sizes.sort_unstable_by(|a, b| b.cmp(a)),
            Objective::Max => sizes.sort_unstable(),
        }
        sizes
            .iter()
            .enumerate()
            .map(|(i, &s)| (i as u64 + 1) * s as u64)
            .sum()
    }

    fn improves(self, candidate: u64, incumbent: u64) -> bool {
        match self {
            Objective::Min => candidate < incumbent,
            Objective::Max => candidate > incumbent,
        }
    }

    fn label(self, partition: &ColorPartition) -> LabeledColoring {
        match self {
            Objective::Min => label_for_min(partition),
            Objective::Max => label_for_max(partition),
        }
    }
}

/// Best coloring sum over all proper colorings using exactly chi(G) colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumExtremeResult {
    pub objective: Objective,
    pub chi: usize,
    /// Witness on the lexicographically least optimal canonical partition.
    pub coloring: LabeledColoring,
    pub omega: u64,
    pub optimal_partition_count: u64,
    /// Distinct class-size multisets (non-increasing) among the optima.
    pub optimal_size_multisets: Vec<Vec<usize>>,
}

impl SumExtremeResult {
    /// True when optima with different class sizes exist, so the witness
    /// variance is not the only possible one.
    pub fn size_multiset_ambiguous(&self) -> bool {
        self.optimal_size_multisets.len() > 1
    }
}

pub fn min_sum_coloring(graph: &Graph, config: &SearchConfig) -> Result<SumExtremeResult, EngineError> {
    extreme(graph, config, Objective::Min)
}

pub fn max_sum_coloring(graph: &Graph, config: &SearchConfig) -> Result<SumExtremeResult, EngineError> {
    extreme(graph, config, Objective::Max)
}

fn extreme(graph: &Graph, config: &SearchConfig, objective: Objective) -> Result<SumExtremeResult, EngineError> {
    let chi = chromatic_number(graph, config)?;
    let mut search = Search::new(graph, chi, objective);
    search.dfs(0, 0);
    let witness = search.witness.expect("a chi-coloring exists");
    Ok(SumExtremeResult {
        objective,
        chi,
        coloring: objective.label(&witness),
        omega: search.best.unwrap(),
        optimal_partition_count: search.count,
        optimal_size_multisets: search.multisets.into_iter().collect(),
    })
}

/// Branch and bound over partitions into exactly `k` classes.
///
/// Vertices are placed in a fixed degree-descending order and may only open
/// the next unused class, so each unordered partition is reached once. Ties
/// with the incumbent are never pruned: the optimum count, the size
/// multisets and the least canonical witness are all exact.
struct Search<'g> {
    graph: &'g Graph,
    k: usize,
    objective: Objective,
    order: Vec<usize>,
    words: usize,
    rows: Vec<u64>,
    masks: Vec<u64>,
    sizes: Vec<usize>,
    class_of: Vec<usize>,
    scratch: Vec<usize>,
    best: Option<u64>,
    count: u64,
    multisets: BTreeSet<Vec<usize>>,
    witness: Option<ColorPartition>,
}

impl<'g> Search<'g> {
    fn new(graph: &'g Graph, k: usize, objective: Objective) -> Self {
        let n = graph.order();
        let words = n.div_ceil(64);
        let mut rows = vec![0u64; n * words];
        for &(u, v) in graph.edges() {
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
        Self {
            graph,
            k,
            objective,
            order,
            words,
            rows,
            masks: vec![0; k * words],
            sizes: vec![0; k],
            class_of: vec![usize::MAX; n],
            scratch: Vec::with_capacity(k),
            best: None,
            count: 0,
            multisets: BTreeSet::new(),
            witness: None,
        }
    }

    /// Lower bound on the min-labeled sum of any completion: unopened classes
    /// get one vertex each, and every further vertex adds at least 1 (put in
    /// the largest class it costs exactly 1).
    fn min_sum_bound(&mut self, opened: usize, remaining: usize) -> u64 {
        let need = self.k - opened;
        self.scratch.clear();
        self.scratch.extend_from_slice(&self.sizes[..opened]);
        self.scratch.extend(std::iter::repeat_n(1, need));
        let mut scratch = std::mem::take(&mut self.scratch);
        let base = Objective::Min.score(&mut scratch);
        self.scratch = scratch;
        base + (remaining - need) as u64
    }

    fn pruned(&mut self, opened: usize, remaining: usize) -> bool {
        let Some(best) = self.best else { return false };
        let lower = self.min_sum_bound(opened, remaining);
        match self.objective {
            Objective::Min => lower > best,
            // Reversing the labels of a partition maps its min-labeled sum s
            // to (k + 1) n - s, which turns the lower bound into an upper one.
            Objective::Max => ((self.k + 1) * self.graph.order()) as u64 - lower < best,
        }
    }

    fn conflicts(&self, v: usize, c: usize) -> bool {
        let row = &self.rows[v * self.words..(v + 1) * self.words];
        let mask = &self.masks[c * self.words..(c + 1) * self.words];
        row.iter().zip(mask).any(|(a, b)| a & b != 0)
    }

    fn toggle(&mut self, v: usize, c: usize) {
        self.masks[c * self.words + v / 64] ^= 1 << (v % 64);
    }

    fn dfs(&mut self, pos: usize, opened: usize) {
        let n = self.graph.order();
        if pos == n {
            self.leaf();
            return;
        }
        let remaining = n - pos;
        if self.pruned(opened, remaining) {
            return;
        }
        let v = self.order[pos];
        for c in 0..self.k.min(opened + 1) {
            let now_open = opened.max(c + 1);
            if remaining - 1 < self.k - now_open || self.conflicts(v, c) {
                continue;
            }
            self.toggle(v, c);
            self.sizes[c] += 1;
            self.class_of[v] = c;
            self.dfs(pos + 1, now_open);
            self.class_of[v] = usize::MAX;
            self.sizes[c] -= 1;
            self.toggle(v, c);
        }
    }

    fn leaf(&mut self) {
        let mut sizes = self.sizes.clone();
        let value = self.objective.score(&mut sizes);
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.class_of.iter().enumerate() {
            classes[c].push(v);
        }
        let partition = ColorPartition::canonical(self.graph.order(), classes);
        match self.best {
            Some(best) if value == best => {
                self.count += 1;
                self.multisets.insert(sizes);
                if self.witness.as_ref().is_none_or(|w| partition < *w) {
                    self.witness = Some(partition);
                }
            }
            Some(best) if !self.objective.improves(value, best) => {}
            _ => {
                self.best = Some(value);
                self.count = 1;
                self.multisets = BTreeSet::from([sizes]);
                self.witness = Some(partition);
            }
        }
    }
}
