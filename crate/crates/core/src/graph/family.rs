use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{Graph, GraphError};

/// Names of the supported graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Complete,
    Path,
    Cycle,
    Wheel,
    CompleteBipartite,
    CompleteMultipartite,
    Star,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Complete,
        Family::Path,
        Family::Cycle,
        Family::Wheel,
        Family::CompleteBipartite,
        Family::CompleteMultipartite,
        Family::Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Wheel => "wheel",
            Family::CompleteBipartite => "complete-bipartite",
            Family::CompleteMultipartite => "complete-multipartite",
            Family::Star => "star",
        }
    }

    /// Whether the family is parameterized by part sizes rather than `n`.
    pub fn takes_parts(self) -> bool {
        matches!(self, Family::CompleteBipartite | Family::CompleteMultipartite)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

/// A member of one of the standard families.
///
/// `Wheel(n)` has `n` vertices in total: a hub joined to a rim cycle on
/// `n - 1` vertices. `Star(n)` is `K_{1,n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilySpec {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    Wheel(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Star(usize),
}

impl FamilySpec {
    /// Builds a spec from a family name plus either `n` or part sizes.
    pub fn from_parts(family: Family, n: Option<usize>, parts: &[usize]) -> Result<Self, GraphError> {
        let invalid = |reason: &str| GraphError::InvalidFamily {
            family,
            reason: reason.to_string(),
        };
        let spec = if family.takes_parts() {
            if parts.is_empty() {
                return Err(invalid("part sizes are required"));
            }
            match family {
                Family::CompleteBipartite => match parts {
                    [a, b] => FamilySpec::CompleteBipartite(*a, *b),
                    _ => return Err(invalid("exactly two part sizes are required")),
                },
                _ => FamilySpec::CompleteMultipartite(parts.to_vec()),
            }
        } else {
            let n = n.ok_or_else(|| invalid("a vertex count is required"))?;
            match family {
                Family::Complete => FamilySpec::Complete(n),
                Family::Path => FamilySpec::Path(n),
                Family::Cycle => FamilySpec::Cycle(n),
                Family::Wheel => FamilySpec::Wheel(n),
                Family::Star => FamilySpec::Star(n),
                Family::CompleteBipartite | Family::CompleteMultipartite => unreachable!(),
            }
        };
        spec.check()?;
        Ok(spec)
    }

    pub fn family(&self) -> Family {
        match self {
            FamilySpec::Complete(_) => Family::Complete,
            FamilySpec::Path(_) => Family::Path,
            FamilySpec::Cycle(_) => Family::Cycle,
            FamilySpec::Wheel(_) => Family::Wheel,
            FamilySpec::CompleteBipartite(..) => Family::CompleteBipartite,
            FamilySpec::CompleteMultipartite(_) => Family::CompleteMultipartite,
            FamilySpec::Star(_) => Family::Star,
        }
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Complete(n)
            | FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Star(n) => *n,
            FamilySpec::CompleteBipartite(a, b) => a + b,
            FamilySpec::CompleteMultipartite(parts) => parts.iter().sum(),
        }
    }

    /// Part sizes for the multipartite families (a star is `(1, n-1)`).
    pub fn parts(&self) -> Option<Vec<usize>> {
        match self {
            FamilySpec::CompleteBipartite(a, b) => Some(vec![*a, *b]),
            FamilySpec::CompleteMultipartite(parts) => Some(parts.clone()),
            FamilySpec::Star(n) => Some(vec![1, n.saturating_sub(1)]),
            _ => None,
        }
    }

    /// Checks the family-specific minimum parameters.
    pub fn check(&self) -> Result<(), GraphError> {
        let fail = |reason: String| {
            Err(GraphError::InvalidFamily {
                family: self.family(),
                reason,
            })
        };
        match self {
            FamilySpec::Complete(n) | FamilySpec::Path(n) if *n < 1 => fail(format!("n = {n}, need n >= 1")),
            FamilySpec::Cycle(n) if *n < 3 => fail(format!("n = {n}, need n >= 3")),
            FamilySpec::Wheel(n) if *n < 4 => fail(format!("n = {n}, need n >= 4")),
            FamilySpec::Star(n) if *n < 2 => fail(format!("n = {n}, need n >= 2")),
            FamilySpec::CompleteBipartite(a, b) if *a < 1 || *b < 1 => {
                fail(format!("parts ({a}, {b}), need both >= 1"))
            }
            FamilySpec::CompleteMultipartite(parts) if parts.len() < 2 => {
                fail(format!("{} parts, need at least 2", parts.len()))
            }
            FamilySpec::CompleteMultipartite(parts) if parts.contains(&0) => {
                fail("every part needs at least one vertex".to_string())
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parts() {
            Some(parts) if self.family().takes_parts() => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}({})", self.family(), parts.join(","))
            }
            _ => write!(f, "{}({})", self.family(), self.order()),
        }
    }
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    let mut owner = Vec::new();
    for (p, &size) in parts.iter().enumerate() {
        owner.extend(std::iter::repeat_n(p, size));
    }
    let n = owner.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = edges.filter(|&(u, v)| owner[u] != owner[v]).collect();
    Graph::new(n, edges)
}

/// Generates the graph described by `spec`.
///
/// Part blocks are laid out consecutively; the wheel hub is vertex 0 and the
/// rim is `1..n` in cyclic order.
pub fn generate_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.check()?;
    match *spec {
        FamilySpec::Complete(n) => complete_multipartite(&vec![1; n]),
        FamilySpec::Path(n) => Graph::new(n, (1..n).map(|v| (v - 1, v))),
        FamilySpec::Cycle(n) => Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))),
        FamilySpec::Wheel(n) => {
            let rim = n - 1;
            let spokes = (1..n).map(|v| (0, v));
            let ring = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
            Graph::new(n, spokes.chain(ring))
        }
        FamilySpec::CompleteBipartite(a, b) => complete_multipartite(&[a, b]),
        FamilySpec::CompleteMultipartite(ref parts) => complete_multipartite(parts),
        FamilySpec::Star(n) => complete_multipartite(&[1, n - 1]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_four_is_k4() {
        let w4 = generate_family(&FamilySpec::Wheel(4)).unwrap();
        let k4 = generate_family(&FamilySpec::Complete(4)).unwrap();
        assert_eq!(w4, k4);
    }

    #[test]
    fn wheel_degrees() {
        for n in 5..12 {
            let w = generate_family(&FamilySpec::Wheel(n)).unwrap();
            assert_eq!(w.order(), n);
            assert_eq!(w.size(), 2 * (n - 1));
            assert_eq!(w.degree(0), n - 1);
            assert!((1..n).all(|v| w.degree(v) == 3));
        }
    }

    #[test]
    fn small_families() {
        let star = generate_family(&FamilySpec::CompleteBipartite(1, 3)).unwrap();
        assert_eq!((star.order(), star.size()), (4, 3));
        assert_eq!(star, generate_family(&FamilySpec::Star(4)).unwrap());

        let c5 = generate_family(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!((c5.order(), c5.size()), (5, 5));
        assert!((0..5).all(|v| c5.degree(v) == 2));

        let p1 = generate_family(&FamilySpec::Path(1)).unwrap();
        assert_eq!((p1.order(), p1.size()), (1, 0));

        let k1 = generate_family(&FamilySpec::Complete(1)).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));

        let k23 = generate_family(&FamilySpec::CompleteBipartite(2, 3)).unwrap();
        assert_eq!((k23.order(), k23.size()), (5, 6));
    }

    #[test]
    fn balanced_multipartite_is_regular() {
        for k in 2..5 {
            for m in 1..4 {
                let g = generate_family(&FamilySpec::CompleteMultipartite(vec![m; k])).unwrap();
                assert!((0..g.order()).all(|v| g.degree(v) == (k - 1) * m));
            }
        }
    }

    #[test]
    fn minimums_enforced() {
        let bad = [
            FamilySpec::Complete(0),
            FamilySpec::Path(0),
            FamilySpec::Cycle(2),
            FamilySpec::Wheel(3),
            FamilySpec::Star(1),
            FamilySpec::CompleteBipartite(0, 2),
            FamilySpec::CompleteMultipartite(vec![3]),
            FamilySpec::CompleteMultipartite(vec![2, 0]),
        ];
        for spec in bad {
            assert!(
                matches!(generate_family(&spec), Err(GraphError::InvalidFamily { .. })),
                "{spec:?}"
            );
        }
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>(), Ok(f));
        }
        assert_eq!("complete_bipartite".parse(), Ok(Family::CompleteBipartite));
        assert!("petersen".parse::<Family>().is_err());
    }

    #[test]
    fn from_parts() {
        assert_eq!(
            FamilySpec::from_parts(Family::Wheel, Some(5), &[]).unwrap(),
            FamilySpec::Wheel(5)
        );
        assert_eq!(
            FamilySpec::from_parts(Family::CompleteBipartite, None, &[2, 3]).unwrap(),
            FamilySpec::CompleteBipartite(2, 3)
        );
        assert!(FamilySpec::from_parts(Family::CompleteBipartite, None, &[2]).is_err());
        assert!(FamilySpec::from_parts(Family::Path, None, &[]).is_err());
        assert_eq!(FamilySpec::Wheel(5).to_string(), "wheel(5)");
        assert_eq!(
            FamilySpec::CompleteMultipartite(vec![2, 2, 2]).to_string(),
            "complete-multipartite(2,2,2)"
        );
    }
}
