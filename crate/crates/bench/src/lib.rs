//! Seeded corpora shared by the criterion benches.

use bitrans_core::reduce::{random_bi_instance, random_hypergraph, RandomParams};
use bitrans_core::{BiInstance, Hypergraph};

pub const SEED: u64 = 0x5eed;

/// Ten random hypergraphs on `n` vertices with `n` edges of density 0.3.
pub fn hypergraphs(n: usize) -> Vec<Hypergraph> {
    (0..10)
        .map(|k| random_hypergraph(n, n, 0.3, SEED + k).expect("valid parameters"))
        .collect()
}

/// Ten random red/blue instances on `n` vertices.
pub fn bi_instances(n: usize) -> Vec<BiInstance> {
    let params = RandomParams {
        vertices: n,
        red_edges: n / 2 + 1,
        blue_edges: n / 2 + 1,
        density: 0.3,
    };
    (0..10)
        .map(|k| random_bi_instance(&params, SEED + k).expect("valid parameters"))
        .collect()
}
