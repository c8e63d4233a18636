//! Seeded random graphs for the property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph: each pair joined with probability `p`.
pub fn gnp<R: Rng>(rng: &mut R, order: usize, p: f64) -> Graph {
    Graph::from_fn(order, |_, _| rng.gen_bool(p))
}

/// Random labelled tree: vertex `v` attaches to a uniform earlier vertex,
/// then labels are shuffled.
pub fn random_tree<R: Rng>(rng: &mut R, order: usize) -> Graph {
    let mut perm: Vec<usize> = (0..order).collect();
    perm.shuffle(rng);
    let mut g = Graph::empty(order);
    for v in 1..order {
        let parent = rng.gen_range(0..v);
        g.add_edge(perm[v], perm[parent]);
    }
    g
}

/// Replaces some vertices of `base` by cliques of closed twins. Each vertex
/// is blown up to `1..=max_class` copies; the result's vertices are shuffled.
pub fn blow_up_twins<R: Rng>(rng: &mut R, base: &Graph, max_class: usize) -> Graph {
    let mut origin = Vec::new();
    for v in 0..base.order() {
        let copies = if rng.gen_bool(0.5) { rng.gen_range(1..=max_class.max(1)) } else { 1 };
        origin.extend(std::iter::repeat_n(v, copies));
    }
    origin.shuffle(rng);
    Graph::from_fn(origin.len(), |a, b| {
        origin[a] == origin[b] || base.has_edge(origin[a], origin[b])
    })
}

/// A random graph with planted closed-twin classes.
pub fn graph_with_twins<R: Rng>(rng: &mut R, base_order: usize, p: f64, max_class: usize) -> Graph {
    let base = gnp(rng, base_order, p);
    blow_up_twins(rng, &base, max_class)
}
