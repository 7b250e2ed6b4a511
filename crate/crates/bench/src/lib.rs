//! Fixed benchmark instances.

use chromastat::graph::random_connected;
use chromastat::{generate_family, FamilySpec, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn family(spec: FamilySpec) -> Graph {
    generate_family(&spec).expect("benchmark families are valid")
}

/// Seeded sparse connected graphs, one per requested order.
pub fn sparse_random(orders: &[usize], seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    orders
        .iter()
        .map(|&n| random_connected(n, 2.0 / n as f64, &mut rng))
        .collect()
}
