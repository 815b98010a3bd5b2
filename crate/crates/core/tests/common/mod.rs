#![allow(dead_code)]

use peo_core::matrix::int;
use peo_core::{Graph, SymmetricMatrix, Walk};
use rand::Rng;

/// Entries drawn uniformly from `0..levels`.
pub fn random_matrix(rng: &mut impl Rng, n: usize, levels: i64) -> SymmetricMatrix {
    SymmetricMatrix::from_fn(n, |_, _| int(rng.gen_range(0..levels))).unwrap()
}

/// Every matrix of size `n` with entries in `0..levels`.
pub fn all_matrices(n: usize, levels: i64) -> Vec<SymmetricMatrix> {
    let pairs = n * (n - 1) / 2;
    let total = (levels as usize).pow(pairs as u32);
    (0..total)
        .map(|mut code| {
            SymmetricMatrix::from_fn(n, |_, _| {
                let v = (code % levels as usize) as i64;
                code /= levels as usize;
                int(v)
            })
            .unwrap()
        })
        .collect()
}

/// Random graph with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Every walk over `0..n` with 1 to `max_len` steps and no immediate repeats.
pub fn walks_up_to(n: usize, max_len: usize) -> Vec<Walk> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for v in 0..n {
                if v != *w.last().unwrap() {
                    let mut e = w.clone();
                    e.push(v);
                    out.push(Walk::new(e.clone()).unwrap());
                    next.push(e);
                }
            }
        }
        frontier = next;
    }
    out
}
