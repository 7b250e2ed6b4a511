use super::LabeledColoring;
use crate::graph::Graph;

/// DSATUR greedy coloring. The next vertex maximizes (saturation, degree) and
/// ties go to the lowest index; it receives the smallest free color.
pub fn greedy_dsatur(graph: &Graph) -> LabeledColoring {
    let n = graph.order();
    let mut colors = vec![0usize; n];
    // neighbor_colors[v][c] is set when some neighbor of v has color c + 1
    let mut neighbor_colors = vec![vec![false; n + 1]; n];
    let mut saturation = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by_key(|&v| (saturation[v], graph.degree(v), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let c = (0..n).find(|&c| !neighbor_colors[v][c]).unwrap() + 1;
        colors[v] = c;
        for &w in graph.neighbors(v) {
            if !neighbor_colors[w][c - 1] {
                neighbor_colors[w][c - 1] = true;
                saturation[w] += 1;
            }
        }
    }
    LabeledColoring::from_colors(graph, &colors).expect("greedy colors are proper and contiguous")
}

/// Size of the largest clique found by greedy growth from every start vertex.
pub fn clique_lower_bound(graph: &Graph) -> usize {
    let n = graph.order();
    let mut best = 1;
    for start in 0..n {
        let mut clique = vec![start];
        let mut candidates: Vec<usize> = graph.neighbors(start).to_vec();
        while !candidates.is_empty() {
            let &pick = candidates
                .iter()
                .max_by_key(|&&v| (candidates.iter().filter(|&&w| graph.has_edge(v, w)).count(), std::cmp::Reverse(v)))
                .unwrap();
            clique.push(pick);
            candidates.retain(|&w| w != pick && graph.has_edge(pick, w));
        }
        best = best.max(clique.len());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, FamilySpec};

    fn colors_used(spec: FamilySpec) -> usize {
        let g = generate_family(&spec).unwrap();
        let c = greedy_dsatur(&g);
        assert!(c.is_proper_for(&g));
        c.k()
    }

    #[test]
    fn dsatur_examples() {
        assert_eq!(colors_used(FamilySpec::Complete(4)), 4);
        assert_eq!(colors_used(FamilySpec::Cycle(6)), 2);
        assert_eq!(colors_used(FamilySpec::Cycle(5)), 3);
        assert_eq!(colors_used(FamilySpec::Path(1)), 1);
    }

    #[test]
    fn dsatur_is_deterministic() {
        let g = generate_family(&FamilySpec::Wheel(9)).unwrap();
        assert_eq!(greedy_dsatur(&g), greedy_dsatur(&g));
    }

    #[test]
    fn clique_examples() {
        let bound = |spec| clique_lower_bound(&generate_family(&spec).unwrap());
        assert_eq!(bound(FamilySpec::Complete(5)), 5);
        assert_eq!(bound(FamilySpec::Path(4)), 2);
        assert_eq!(bound(FamilySpec::CompleteBipartite(1, 5)), 2);
        assert_eq!(bound(FamilySpec::Wheel(6)), 3);
        assert_eq!(bound(FamilySpec::Path(1)), 1);
    }
}
