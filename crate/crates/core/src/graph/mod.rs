//! Simple undirected graphs on dense vertex indices `0..n`.

mod family;
mod io;
mod random;

use std::collections::BTreeSet;
use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

pub use family::{generate_family, Family, FamilySpec};
pub use io::{
    detect_format, parse_auto, parse_dimacs, parse_edge_list, write_dimacs, write_edge_list,
    InputFormat,
};
pub use random::random_connected;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: missing `p edge N M` line before edges")]
    MissingProblemLine { line: usize },
    #[error("input has no `p edge N M` line")]
    NoProblemLine,
    #[error("line {line}: duplicate problem line")]
    DuplicateProblemLine { line: usize },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    EdgeOutOfRange { line: usize, vertex: u64, n: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoopLine { line: usize, vertex: u64 },
    #[error("line {line}: declared vertex count {declared} is smaller than {required}")]
    DeclaredTooSmall {
        line: usize,
        declared: usize,
        required: usize,
    },
    #[error("invalid {family} parameters: {reason}")]
    InvalidFamily { family: Family, reason: String },
}

/// An immutable simple undirected graph.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl Graph {
    /// Builds a graph, collapsing duplicate edges in either orientation.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        let mut matrix = vec![false; n * n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges,
            adjacency,
            matrix,
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, std::iter::empty())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    /// True when no edge joins two members of `set`.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Structural facts used for CLI warnings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub components: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Common degree when the graph is regular.
    pub regular_degree: Option<usize>,
}

pub fn validate(graph: &Graph) -> Diagnostics {
    let components = graph.components().len();
    let degrees = (0..graph.order()).map(|v| graph.degree(v));
    let min_degree = degrees.clone().min().unwrap_or(0);
    let max_degree = degrees.max().unwrap_or(0);
    Diagnostics {
        vertices: graph.order(),
        edges: graph.size(),
        connected: components == 1,
        components,
        min_degree,
        max_degree,
        regular_degree: (min_degree == max_degree).then_some(min_degree),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedups_both_orientations() {
        let g = Graph::new(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::empty(0), Err(GraphError::Empty));
    }

    #[test]
    fn diagnostics() {
        let c5 = generate_family(&FamilySpec::Cycle(5)).unwrap();
        let d = validate(&c5);
        assert!(d.connected);
        assert_eq!(d.components, 1);
        assert_eq!(d.regular_degree, Some(2));

        let two = Graph::empty(2).unwrap();
        let d = validate(&two);
        assert!(!d.connected);
        assert_eq!(d.components, 2);

        let k1 = Graph::empty(1).unwrap();
        let d = validate(&k1);
        assert!(d.connected);
        assert_eq!(d.components, 1);
    }

    #[test]
    fn independence() {
        let p3 = generate_family(&FamilySpec::Path(3)).unwrap();
        assert!(p3.is_independent(&[0, 2]));
        assert!(!p3.is_independent(&[0, 1]));
        assert!(p3.is_independent(&[]));
    }
}
