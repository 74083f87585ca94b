//! Test corpora of small graphs for oracle comparisons.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::multigraph::{MultiGraph, Vertex};

/// Every labelled simple graph on `0..=max_n` vertices. There are
/// `2^(n choose 2)` of them for each `n`.
pub fn simple_graphs(max_n: u32) -> Vec<MultiGraph> {
    simple_graphs_with_edge_limit(max_n, usize::MAX)
}

/// As [`simple_graphs`], keeping only graphs with at most `max_edges` edges.
pub fn simple_graphs_with_edge_limit(max_n: u32, max_edges: usize) -> Vec<MultiGraph> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let pairs: Vec<(Vertex, Vertex)> =
            (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
        for mask in 0u64..(1u64 << pairs.len()) {
            if mask.count_ones() as usize > max_edges {
                continue;
            }
            let chosen = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
            out.push(MultiGraph::new(n, chosen).expect("pairs lie in 1..=n"));
        }
    }
    out
}

/// `count` pseudo-random multigraphs with `1..=max_n` vertices and
/// `0..=max_edges` edges; loops and parallel edges occur freely. The same
/// seed always yields the same list.
pub fn random_multigraphs(count: usize, max_n: u32, max_edges: usize, seed: u64) -> Vec<MultiGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let m = rng.gen_range(0..=max_edges);
            let edges: Vec<(Vertex, Vertex)> =
                (0..m).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n))).collect();
            MultiGraph::new(n, edges).expect("endpoints drawn from 1..=n")
        })
        .collect()
}
