use crate::graph::Graph;

/// Nine vertices, chi = 3, where class sizes (4,4,1) and (5,2,2) both reach
/// the minimum sum 15. Found by a brute-force scan of random graphs.
pub(crate) fn tied_sizes() -> Graph {
    Graph::new(
        9,
        [
            (0, 3), (0, 7), (1, 3), (1, 7), (1, 8), (2, 7), (2, 8),
            (3, 8), (4, 5), (4, 6), (4, 7), (5, 8), (6, 8),
        ],
    )
    .unwrap()
}
