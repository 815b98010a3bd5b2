use crate::error::{Error, Result};
use crate::forbidden::find_weighted_chordless_cycle;
use crate::matrix::{graph_power, Graph};
use crate::ordering::greedy_peo;

use super::chordal::{is_chordal, level_chordality};

/// Four assertions about a graph `G` and its distance matrix `D_G` that are
/// equivalent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerCorollaryReport {
    /// `-D_G` has a perfect elimination ordering.
    pub peo: bool,
    /// `-D_G` has no weighted chordless cycle.
    pub no_weighted_chordless_cycle: bool,
    /// Every level graph of `-D_G` is chordal.
    pub levels_chordal: bool,
    /// `G` and `G^2` are chordal.
    pub graph_and_square_chordal: bool,
}

impl PowerCorollaryReport {
    pub fn flags(&self) -> [bool; 4] {
        [self.peo, self.no_weighted_chordless_cycle, self.levels_chordal, self.graph_and_square_chordal]
    }

    pub fn agree(&self) -> bool {
        let f = self.flags();
        f.iter().all(|&b| b == f[0])
    }
}

/// Evaluates the four assertions on `-D_G`. Vertices in different
/// components are at distance `n + 1`.
pub fn check_power_corollary(g: &Graph) -> PowerCorollaryReport {
    let neg = g.distance_matrix().negated();
    let square = graph_power(g, 2).expect("k = 2");
    PowerCorollaryReport {
        peo: greedy_peo(&neg).is_some(),
        no_weighted_chordless_cycle: find_weighted_chordless_cycle(&neg).is_none(),
        levels_chordal: level_chordality(&neg).into_iter().all(|b| b),
        graph_and_square_chordal: is_chordal(g).holds() && is_chordal(&square).holds(),
    }
}

/// Chordality of the powers `G^1..G^k_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerChordality {
    /// `chordal[k - 1]` tells whether `G^k` is chordal.
    pub chordal: Vec<bool>,
    /// Every `k` with `G^k` chordal but `G^{k+2}` not.
    pub violations: Vec<usize>,
}

impl PowerChordality {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Chordality of `G^k` for `k = 1..=k_max`, flagging any `k` where `G^k` is
/// chordal and `G^{k+2}` is not (which cannot happen).
pub fn duchet_power_check(g: &Graph, k_max: usize) -> Result<PowerChordality> {
    if k_max < 3 {
        return Err(Error::InvalidArgument("power check needs k_max >= 3".into()));
    }
    let chordal = (1..=k_max)
        .map(|k| Ok(is_chordal(&graph_power(g, k)?).holds()))
        .collect::<Result<Vec<bool>>>()?;
    let violations = (1..=k_max - 2).filter(|&k| chordal[k - 1] && !chordal[k + 1]).collect();
    Ok(PowerChordality { chordal, violations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_cycle() {
        let p = check_power_corollary(&Graph::path(5));
        assert_eq!(p.flags(), [true; 4]);
        let c = check_power_corollary(&Graph::cycle(6));
        assert_eq!(c.flags(), [false; 4]);
    }

    #[test]
    fn ternary_tree_of_depth_two() {
        let mut edges = Vec::new();
        for leaf in 1..=3 {
            edges.push((0, leaf));
            for k in 0..3 {
                edges.push((leaf, 4 + 3 * (leaf - 1) + k));
            }
        }
        let r = check_power_corollary(&Graph::from_edges(13, edges));
        assert!(r.agree());
    }

    #[test]
    fn powers_of_paths_and_cycles() {
        let p = duchet_power_check(&Graph::path(6), 6).unwrap();
        assert!(p.chordal.iter().all(|&b| b) && p.is_consistent());
        let c = duchet_power_check(&Graph::cycle(7), 5).unwrap();
        assert_eq!(c.chordal, vec![false, false, true, true, true]);
        assert!(c.is_consistent());
        assert!(duchet_power_check(&Graph::path(3), 2).is_err());
    }
}
