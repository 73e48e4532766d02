#![allow(dead_code)]

use domchrom::Digraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Connected, digon-free digraph on `n` vertices: a random spanning tree
/// plus each remaining pair with probability `density`, every edge given a
/// random direction, vertices shuffled.
pub fn random_connected_digraph(n: usize, density: f64, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut rng);
    edges.shuffle(&mut rng);
    let arcs = edges.into_iter().map(|(u, v)| {
        let (a, b) = (label[u], label[v]);
        if rng.gen() {
            (a, b)
        } else {
            (b, a)
        }
    });
    Digraph::new(n, arcs).expect("spanning tree plus extra pairs has no loops or digons")
}

/// `d` with vertex `v` renamed `perm[v]`.
pub fn relabel(d: &Digraph, perm: &[usize]) -> Digraph {
    Digraph::new(d.n(), d.arcs().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap()
}
