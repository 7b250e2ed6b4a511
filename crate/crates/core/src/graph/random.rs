use rand::seq::SliceRandom;
use rand::Rng;

use super::Graph;

/// Random connected graph on `n` vertices.
///
/// A random spanning tree guarantees connectivity; every remaining pair is
/// then added independently with probability `p`.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    assert!(n >= 1, "random_connected needs n >= 1");
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.random_range(0..i)];
        edges.push((parent, order[i]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are in range and loop-free")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn connected_and_seeded() {
        for n in 1..10 {
            for p in [0.0, 0.3, 1.0] {
                let a = random_connected(n, p, &mut ChaCha8Rng::seed_from_u64(7));
                let b = random_connected(n, p, &mut ChaCha8Rng::seed_from_u64(7));
                assert_eq!(a, b);
                assert_eq!(a.components().len(), 1);
                if p == 1.0 {
                    assert_eq!(a.size(), n * (n - 1) / 2);
                }
            }
        }
    }
}
