use super::{chromatic_number, ColorPartition, EngineError, SearchConfig};
use crate::graph::Graph;

/// Streams every partition of the vertices into exactly `k = chi(G)`
/// independent sets, each once, in canonical form.
pub fn enumerate_chi_partitions<'g>(
    graph: &'g Graph,
    k: usize,
    config: &SearchConfig,
) -> Result<ChiPartitions<'g>, EngineError> {
    let chi = chromatic_number(graph, config)?;
    if k != chi {
        return Err(EngineError::WrongColorCount { k, chi });
    }
    Ok(ChiPartitions::new(graph, k))
}

/// Iterative backtracking over vertices in index order. Vertex `v` may join
/// any class already opened by a smaller vertex or open the next one, so each
/// unordered partition has exactly one assignment sequence.
pub struct ChiPartitions<'g> {
    graph: &'g Graph,
    k: usize,
    class_of: Vec<usize>,
    /// Next class to try at each depth.
    cursor: Vec<usize>,
    /// Classes opened by vertices `< depth`.
    opened: Vec<usize>,
    depth: usize,
    done: bool,
}

impl<'g> ChiPartitions<'g> {
    pub(crate) fn new(graph: &'g Graph, k: usize) -> Self {
        let n = graph.order();
        Self {
            graph,
            k,
            class_of: vec![usize::MAX; n],
            cursor: vec![0; n + 1],
            opened: vec![0; n + 1],
            depth: 0,
            done: k == 0 || k > n,
        }
    }

    fn fits(&self, v: usize, c: usize) -> bool {
        self.graph
            .neighbors(v)
            .iter()
            .take_while(|&&u| u < v)
            .all(|&u| self.class_of[u] != c)
    }
}

impl Iterator for ChiPartitions<'_> {
    type Item = ColorPartition;

    fn next(&mut self) -> Option<ColorPartition> {
        let n = self.graph.order();
        loop {
            if self.done {
                return None;
            }
            let d = self.depth;
            if d == n {
                self.depth -= 1;
                let mut classes = vec![Vec::new(); self.k];
                for (v, &c) in self.class_of.iter().enumerate() {
                    classes[c].push(v);
                }
                return Some(ColorPartition::canonical(n, classes));
            }
            let opened = self.opened[d];
            let limit = self.k.min(opened + 1);
            let remaining_after = n - d - 1;
            let pick = (self.cursor[d]..limit).find(|&c| {
                let now_open = opened.max(c + 1);
                remaining_after >= self.k - now_open && self.fits(d, c)
            });
            match pick {
                Some(c) => {
                    self.class_of[d] = c;
                    self.cursor[d] = c + 1;
                    self.opened[d + 1] = opened.max(c + 1);
                    self.cursor[d + 1] = 0;
                    self.depth += 1;
                }
                None => {
                    self.class_of[d] = usize::MAX;
                    if d == 0 {
                        self.done = true;
                    } else {
                        self.depth -= 1;
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, FamilySpec};
    use std::collections::BTreeSet;

    fn partitions(spec: FamilySpec, k: usize) -> Vec<ColorPartition> {
        let g = generate_family(&spec).unwrap();
        enumerate_chi_partitions(&g, k, &SearchConfig::default())
            .unwrap()
            .collect()
    }

    /// Every surjective proper 3-coloring of C5, grouped by the partition it
    /// induces; computed by scanning all 3^5 assignments.
    fn c5_partitions_by_brute_force() -> BTreeSet<ColorPartition> {
        let g = generate_family(&FamilySpec::Cycle(5)).unwrap();
        let mut out = BTreeSet::new();
        for code in 0..3usize.pow(5) {
            let colors: Vec<usize> = (0..5).map(|v| code / 3usize.pow(v as u32) % 3).collect();
            let proper = g.edges().iter().all(|&(u, v)| colors[u] != colors[v]);
            let onto = (0..3).all(|c| colors.contains(&c));
            if proper && onto {
                out.insert(ColorPartition::from_colors(&g, &colors).unwrap());
            }
        }
        out
    }

    #[test]
    fn c5_has_five_partitions() {
        let found = partitions(FamilySpec::Cycle(5), 3);
        let expected = c5_partitions_by_brute_force();
        assert_eq!(expected.len(), 5);
        assert_eq!(found.len(), 5);
        assert_eq!(found.iter().cloned().collect::<BTreeSet<_>>(), expected);
        assert!(found.iter().all(|p| p.sizes() == vec![2, 2, 1]));
    }

    #[test]
    fn forced_partitions() {
        let k3 = partitions(FamilySpec::Complete(3), 3);
        assert_eq!(k3.len(), 1);
        assert_eq!(k3[0].classes(), &[vec![0], vec![1], vec![2]]);

        let p4 = partitions(FamilySpec::Path(4), 2);
        assert_eq!(p4.len(), 1);
        assert_eq!(p4[0].classes(), &[vec![0, 2], vec![1, 3]]);

        let k1 = partitions(FamilySpec::Complete(1), 1);
        assert_eq!(k1.len(), 1);
    }

    #[test]
    fn wrong_k_rejected() {
        let g = generate_family(&FamilySpec::Cycle(5)).unwrap();
        assert!(matches!(
            enumerate_chi_partitions(&g, 4, &SearchConfig::default()),
            Err(EngineError::WrongColorCount { k: 4, chi: 3 })
        ));
    }

    #[test]
    fn every_partition_is_valid_and_distinct() {
        let g = generate_family(&FamilySpec::Wheel(8)).unwrap();
        let all: Vec<_> = enumerate_chi_partitions(&g, 4, &SearchConfig::default())
            .unwrap()
            .collect();
        let distinct: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), distinct.len());
        for p in &all {
            assert_eq!(p.k(), 4);
            assert_eq!(&ColorPartition::new(&g, p.classes().to_vec()).unwrap(), p);
        }
        // hub alone; the rim C7 has (2^7 - 2) / 3! = 21 partitions into three classes
        assert_eq!(all.len(), 21);
    }
}
