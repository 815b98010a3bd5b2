use crate::error::{Error, Result};
use crate::matrix::WeightedGraph;
use crate::ordering::{LinearOrder, Verdict};

/// Whether every suffix `{π_i, ..., π_n}` induces an isometric weighted
/// subgraph. On failure returns the (0-based) position `i` where the first
/// non-isometric suffix starts.
pub fn is_distance_preserving_order(wg: &WeightedGraph, pi: &LinearOrder) -> Result<Verdict<usize>> {
    let n = wg.n();
    if pi.len() != n {
        return Err(Error::OrderMismatch { order: pi.len(), n });
    }
    let all: Vec<usize> = (0..n).collect();
    let full = wg.distances_within(&all);
    for i in 1..n {
        let suffix = &pi.as_slice()[i..];
        let d = wg.distances_within(suffix);
        for (a, &u) in suffix.iter().enumerate() {
            for (b, &v) in suffix.iter().enumerate().skip(a + 1) {
                if d[a][b] != full[u][v] {
                    return Ok(Verdict::Violated(i));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}
