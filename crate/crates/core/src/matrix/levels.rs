use super::{Graph, SymmetricMatrix, Value};
use crate::error::{Error, Result};

/// Thresholds `α_0 < … < α_L` (the distinct off-diagonal values) and the
/// nested level graphs `G_ℓ = {xy : A[x][y] >= α_ℓ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub thresholds: Vec<Value>,
    pub levels: Vec<Graph>,
}

impl LevelDecomposition {
    /// Number of nontrivial levels `L` (so there are `L + 1` graphs).
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    /// Coefficient of level `ℓ >= 1` in the conic expansion, `α_ℓ - α_{ℓ-1}`.
    pub fn step(&self, level: usize) -> Value {
        &self.thresholds[level] - &self.thresholds[level - 1]
    }
}

pub fn level_decomposition(a: &SymmetricMatrix) -> Result<LevelDecomposition> {
    let n = a.n();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let thresholds = a.distinct_values().to_vec();
    let levels = (0..thresholds.len() as u32)
        .map(|lvl| {
            let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| a.rank(i, j) >= lvl);
            Graph::from_edges(n, edges)
        })
        .collect();
    Ok(LevelDecomposition { thresholds, levels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matrix::int;

    fn edges_1based(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().map(|(i, j)| (i + 1, j + 1)).collect()
    }

    fn sorted(mut e: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
        e.sort();
        e
    }

    #[test]
    fn chordless_cycle_fixture_levels() {
        let d = level_decomposition(&fixtures::chordless_cycle_5()).unwrap();
        assert_eq!(d.thresholds, vec![int(0), int(1), int(2)]);
        assert_eq!(d.levels[0].edge_count(), 10);
        assert_eq!(
            edges_1based(&d.levels[1]),
            sorted(vec![(1, 2), (2, 3), (4, 5), (1, 5), (1, 3), (1, 4), (3, 4)])
        );
        assert_eq!(edges_1based(&d.levels[2]), sorted(vec![(1, 2), (2, 3), (4, 5), (1, 5)]));
    }

    #[test]
    fn no_simplicial_fixture_top_level() {
        let d = level_decomposition(&fixtures::no_simplicial_5()).unwrap();
        assert_eq!(d.thresholds, vec![int(0), int(1), int(2)]);
        assert_eq!(edges_1based(&d.levels[2]), sorted(vec![(1, 2), (1, 3), (3, 5), (4, 5)]));
    }

    #[test]
    fn constant_matrix_single_level() {
        let d = level_decomposition(&SymmetricMatrix::constant(4, int(7)).unwrap()).unwrap();
        assert_eq!(d.depth(), 0);
        assert_eq!(d.levels[0].edge_count(), 6);
    }
}
