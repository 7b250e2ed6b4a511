use super::{clique_lower_bound, greedy_dsatur, EngineError, SearchConfig};
use crate::graph::Graph;

/// Exact chromatic number, searched between the clique and DSATUR bounds.
pub fn chromatic_number(graph: &Graph, config: &SearchConfig) -> Result<usize, EngineError> {
    config.admit(graph)?;
    let lower = clique_lower_bound(graph);
    let upper = greedy_dsatur(graph).k();
    Ok((lower..upper).find(|&k| is_colorable(graph, k)).unwrap_or(upper))
}

/// Backtracking k-colorability test with DSATUR branching. A vertex may only
/// open the next unused color, which removes color-permutation symmetry.
pub(crate) fn is_colorable(graph: &Graph, k: usize) -> bool {
    let mut state = Dsatur {
        graph,
        k,
        colors: vec![usize::MAX; graph.order()],
        // counts[v * k + c]: neighbors of v currently holding color c
        counts: vec![0; graph.order() * k],
        saturation: vec![0; graph.order()],
    };
    state.solve(0, 0)
}

struct Dsatur<'g> {
    graph: &'g Graph,
    k: usize,
    colors: Vec<usize>,
    counts: Vec<u32>,
    saturation: Vec<usize>,
}

impl Dsatur<'_> {
    fn solve(&mut self, colored: usize, used: usize) -> bool {
        let n = self.graph.order();
        if colored == n {
            return true;
        }
        let v = (0..n)
            .filter(|&v| self.colors[v] == usize::MAX)
            .max_by_key(|&v| (self.saturation[v], self.graph.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        if self.saturation[v] >= self.k {
            return false;
        }
        for c in 0..self.k.min(used + 1) {
            if self.counts[v * self.k + c] > 0 {
                continue;
            }
            self.assign(v, c, true);
            if self.solve(colored + 1, used.max(c + 1)) {
                return true;
            }
            self.assign(v, c, false);
        }
        false
    }

    fn assign(&mut self, v: usize, c: usize, on: bool) {
        self.colors[v] = if on { c } else { usize::MAX };
        for &w in self.graph.neighbors(v) {
            let slot = &mut self.counts[w * self.k + c];
            if on {
                *slot += 1;
                if *slot == 1 {
                    self.saturation[w] += 1;
                }
            } else {
                *slot -= 1;
                if *slot == 0 {
                    self.saturation[w] -= 1;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, FamilySpec};

    fn chi(spec: FamilySpec) -> usize {
        chromatic_number(&generate_family(&spec).unwrap(), &SearchConfig::default()).unwrap()
    }

    #[test]
    fn complete_graphs() {
        for n in 1..=8 {
            assert_eq!(chi(FamilySpec::Complete(n)), n);
        }
    }

    #[test]
    fn wheels_paths_cycles() {
        for n in 4..=12 {
            assert_eq!(chi(FamilySpec::Wheel(n)), if n % 2 == 1 { 3 } else { 4 });
        }
        assert_eq!(chi(FamilySpec::Path(7)), 2);
        assert_eq!(chi(FamilySpec::Path(1)), 1);
        assert_eq!(chi(FamilySpec::Cycle(9)), 3);
        assert_eq!(chi(FamilySpec::Cycle(10)), 2);
    }

    #[test]
    fn dsatur_is_not_always_optimal_but_search_is() {
        // Crown-like graph where greedy order can be fooled; chi is 2 since it is bipartite.
        let g = Graph::new(8, [(0, 5), (0, 7), (2, 1), (2, 7), (4, 1), (4, 3), (6, 3), (6, 5)]).unwrap();
        assert_eq!(chromatic_number(&g, &SearchConfig::default()).unwrap(), 2);
        // Grötzsch graph: triangle-free with chi = 4.
        let grotzsch = Graph::new(
            11,
            [
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 1), (5, 4), (6, 0), (6, 2), (7, 1), (7, 3), (8, 2), (8, 4), (9, 3), (9, 0),
                (10, 5), (10, 6), (10, 7), (10, 8), (10, 9),
            ],
        )
        .unwrap();
        assert_eq!(clique_lower_bound(&grotzsch), 2);
        assert_eq!(chromatic_number(&grotzsch, &SearchConfig::default()).unwrap(), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let g = generate_family(&FamilySpec::Path(10)).unwrap();
        assert_eq!(
            chromatic_number(&g, &SearchConfig::with_max_vertices(9)),
            Err(EngineError::TooLarge { n: 10, cap: 9 })
        );
    }
}
