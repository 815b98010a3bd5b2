use std::collections::VecDeque;

use crate::matrix::{level_decomposition, Graph, SymmetricMatrix};
use crate::ordering::{is_peo, LinearOrder, Verdict};

/// Maximum cardinality search: repeatedly visits the unvisited vertex with
/// the most visited neighbours, smallest index on ties. Returns the visit
/// order; its reverse is a PEO exactly when the graph is chordal.
pub fn mcs_order(g: &Graph) -> LinearOrder {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !visited[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        visited[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            weight[u] += 1;
        }
    }
    LinearOrder::new(order).expect("every vertex is visited once")
}

/// Decides chordality with one MCS sweep. A non-chordal graph yields an
/// induced cycle of length at least 4, listed without repeating its start.
pub fn is_chordal(g: &Graph) -> Verdict<Vec<usize>> {
    let pi = mcs_order(g).reversed();
    let adj = g.adjacency_matrix();
    let Some(t) = is_peo(&adj, &pi).expect("order matches graph").into_violation() else {
        return Verdict::Holds;
    };
    if let Some(c) = hole_through(g, t.x, t.y, t.z) {
        return Verdict::Violated(c);
    }
    for x in 0..g.n() {
        let nb = g.neighbors(x);
        for (k, &y) in nb.iter().enumerate() {
            for &z in &nb[k + 1..] {
                if !g.has_edge(y, z) {
                    if let Some(c) = hole_through(g, x, y, z) {
                        return Verdict::Violated(c);
                    }
                }
            }
        }
    }
    unreachable!("a graph without a perfect elimination ordering has an induced cycle")
}

/// Induced cycle `x, y, ..., z` from a shortest `y`-`z` path that avoids
/// every other neighbour of `x`.
fn hole_through(g: &Graph, x: usize, y: usize, z: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let blocked: Vec<bool> = (0..n).map(|v| v == x || (g.has_edge(x, v) && v != y && v != z)).collect();
    let mut prev = vec![usize::MAX; n];
    prev[y] = y;
    let mut queue = VecDeque::from([y]);
    while let Some(v) = queue.pop_front() {
        if v == z {
            break;
        }
        for &u in g.neighbors(v) {
            if !blocked[u] && prev[u] == usize::MAX {
                prev[u] = v;
                queue.push_back(u);
            }
        }
    }
    if prev[z] == usize::MAX {
        return None;
    }
    let mut path = vec![z];
    while *path.last().unwrap() != y {
        path.push(prev[*path.last().unwrap()]);
    }
    path.push(x);
    path.reverse();
    Some(path)
}

/// Whether `cycle` (listed without repeating the start) is an induced cycle
/// of length at least 4.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in cycle {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

/// Chordality of every level graph `G_1..G_L` (the complete `G_0` is skipped).
pub fn level_chordality(a: &SymmetricMatrix) -> Vec<bool> {
    match level_decomposition(a) {
        Ok(levels) => levels.levels.iter().skip(1).map(|g| is_chordal(g).holds()).collect(),
        Err(_) => Vec::new(),
    }
}
