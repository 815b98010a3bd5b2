//! Exact symmetric matrices, level graphs, graphs and separations.

mod graph;
mod io;
mod levels;
mod separation;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};

pub use graph::{graph_power, shortest_path_matrix, Graph, WeightedGraph};
pub use io::{format_value, parse_graph, parse_matrix, parse_value};
pub use levels::{level_decomposition, LevelDecomposition};
pub use separation::{find_separation, Separation};
pub(crate) use separation::{connecting_walk, separation_in};

/// Exact matrix entry.
pub type Value = BigRational;

/// Builds an exact value from an integer.
pub fn int(v: i64) -> Value {
    BigRational::from_integer(BigInt::from(v))
}

/// A symmetric matrix over `0..n` holding one exact value per unordered pair.
///
/// The diagonal is not stored. Alongside the values every pair carries its
/// rank among the distinct off-diagonal values, so all three-point conditions
/// reduce to integer comparisons.
#[derive(Clone, PartialEq, Eq)]
pub struct SymmetricMatrix {
    n: usize,
    // strict upper triangle, row-major
    values: Vec<Value>,
    // dense n*n, diagonal unused
    ranks: Vec<u32>,
    distinct: Vec<Value>,
}

impl SymmetricMatrix {
    /// Builds a matrix by calling `f(i, j)` once for each pair `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Value) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooSmall { n, min: 1 });
        }
        let mut values = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                values.push(f(i, j));
            }
        }
        Ok(Self::from_upper(n, values))
    }

    pub fn constant(n: usize, v: Value) -> Result<Self> {
        Self::from_fn(n, |_, _| v.clone())
    }

    /// Builds a matrix from integer entries given as a dense row-major table.
    /// Only the strict upper triangle is read.
    pub fn from_integer_table(n: usize, table: &[i64]) -> Result<Self> {
        if table.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "table has {} entries, expected {}",
                table.len(),
                n * n
            )));
        }
        Self::from_fn(n, |i, j| int(table[i * n + j]))
    }

    /// Builds a matrix from `(i, j, value)` triples with 0-based indices.
    /// Pairs not listed take `default`; without a default every pair must be listed.
    pub fn from_entries<I>(n: usize, default: Option<Value>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Value)>,
    {
        if n == 0 {
            return Err(Error::TooSmall { n, min: 1 });
        }
        let mut slots: Vec<Option<Value>> = vec![None; n * (n - 1) / 2];
        for (i, j, v) in entries {
            if i >= n || j >= n {
                return Err(Error::BadIndex { index: i.max(j), n });
            }
            if i == j {
                return Err(Error::DiagonalEntry { line: 0, index: i + 1 });
            }
            let slot = &mut slots[upper_index(n, i, j)];
            match slot {
                Some(old) if *old != v => {
                    return Err(Error::ConflictingEntry { i: i.min(j) + 1, j: i.max(j) + 1 })
                }
                _ => *slot = Some(v),
            }
        }
        let mut values = Vec::with_capacity(slots.len());
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                match slots[k].take().or_else(|| default.clone()) {
                    Some(v) => values.push(v),
                    None => return Err(Error::MissingEntry { i: i + 1, j: j + 1 }),
                }
                k += 1;
            }
        }
        Ok(Self::from_upper(n, values))
    }

    fn from_upper(n: usize, values: Vec<Value>) -> Self {
        let distinct: Vec<Value> = values.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let mut ranks = vec![0u32; n * n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                let r = distinct.binary_search(&values[k]).expect("value is present") as u32;
                ranks[i * n + j] = r;
                ranks[j * n + i] = r;
                k += 1;
            }
        }
        SymmetricMatrix { n, values, ranks, distinct }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Off-diagonal entry. Panics on `x == y`.
    pub fn get(&self, x: usize, y: usize) -> &Value {
        assert!(x != y, "diagonal entries are not stored");
        &self.values[upper_index(self.n, x, y)]
    }

    /// Rank of `A[x][y]` among the distinct off-diagonal values (0 = smallest).
    #[inline]
    pub fn rank(&self, x: usize, y: usize) -> u32 {
        debug_assert!(x != y);
        self.ranks[x * self.n + y]
    }

    /// Sorted distinct off-diagonal values. Empty when `n == 1`.
    pub fn distinct_values(&self) -> &[Value] {
        &self.distinct
    }

    /// Iterates `(i, j, value)` over pairs `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Value)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j))).zip(self.values.iter()).map(|((i, j), v)| (i, j, v))
    }

    /// Entrywise negation, e.g. turning a distance matrix `D` into `-D`.
    pub fn negated(&self) -> Self {
        Self::from_upper(self.n, self.values.iter().map(|v| -v).collect())
    }

    /// Applies `f` to every off-diagonal entry.
    pub fn map(&self, f: impl Fn(&Value) -> Value) -> Self {
        Self::from_upper(self.n, self.values.iter().map(f).collect())
    }

    /// Principal submatrix on `subset` (renumbered in the given order).
    pub fn principal(&self, subset: &[usize]) -> Result<Self> {
        for &v in subset {
            self.check_index(v)?;
        }
        Self::from_fn(subset.len(), |i, j| self.get(subset[i], subset[j]).clone())
    }

    pub fn is_constant(&self) -> bool {
        self.distinct.len() <= 1
    }

    pub fn has_negative_entry(&self) -> Option<(usize, usize)> {
        self.entries().find(|(_, _, v)| v.is_negative()).map(|(i, j, _)| (i, j))
    }

    pub(crate) fn check_index(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::BadIndex { index: v, n: self.n })
        }
    }

    /// Smallest rank over pairs inside `set` (needs `set.len() >= 2`).
    pub(crate) fn min_rank_in(&self, set: &[usize]) -> u32 {
        let mut best = u32::MAX;
        for (k, &x) in set.iter().enumerate() {
            for &y in &set[k + 1..] {
                best = best.min(self.rank(x, y));
            }
        }
        best
    }

    /// Serializes in the text format read by [`parse_matrix`]. Uses the most
    /// frequent value as the default so sparse matrices stay compact.
    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = format!("n {}\n", self.n);
        let default = self.most_frequent_value();
        if let Some(d) = &default {
            let _ = writeln!(out, "default {}", format_value(d));
        }
        for (i, j, v) in self.entries() {
            if Some(v) != default.as_ref() {
                let _ = writeln!(out, "{} {} {}", i + 1, j + 1, format_value(v));
            }
        }
        out
    }

    fn most_frequent_value(&self) -> Option<Value> {
        let mut counts = vec![0usize; self.distinct.len()];
        for i in 0..self.n {
            for j in i + 1..self.n {
                counts[self.rank(i, j) as usize] += 1;
            }
        }
        let (best, _) = counts.iter().enumerate().max_by_key(|&(r, c)| (*c, std::cmp::Reverse(r)))?;
        Some(self.distinct[best].clone())
    }
}

impl fmt::Debug for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymmetricMatrix(n={})", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| if i == j { "*".to_string() } else { format_value(self.get(i, j)) })
                .collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

fn upper_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Smallest off-diagonal value, written `min A`.
pub fn min_offdiag(a: &SymmetricMatrix) -> Result<Value> {
    a.distinct_values().first().cloned().ok_or(Error::TooSmall { n: a.n(), min: 2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn upper_index_is_dense() {
        let n = 6;
        let mut seen = vec![false; n * (n - 1) / 2];
        for i in 0..n {
            for j in i + 1..n {
                let k = upper_index(n, i, j);
                assert!(!seen[k]);
                seen[k] = true;
                assert_eq!(k, upper_index(n, j, i));
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn min_offdiag_fixtures() {
        assert_eq!(min_offdiag(&fixtures::no_simplicial_5()).unwrap(), int(0));
        assert_eq!(min_offdiag(&fixtures::unique_simplicial_4()).unwrap(), int(0));
        assert_eq!(min_offdiag(&SymmetricMatrix::constant(3, int(1)).unwrap()).unwrap(), int(1));
        assert!(matches!(
            min_offdiag(&SymmetricMatrix::constant(1, int(1)).unwrap()),
            Err(Error::TooSmall { .. })
        ));
    }

    #[test]
    fn ranks_follow_values() {
        let a = fixtures::six_pair_only();
        for x in 0..6 {
            for y in 0..6 {
                for u in 0..6 {
                    for v in 0..6 {
                        if x != y && u != v {
                            assert_eq!(a.rank(x, y).cmp(&a.rank(u, v)), a.get(x, y).cmp(a.get(u, v)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn entries_require_default_or_full_listing() {
        let err = SymmetricMatrix::from_entries(3, None, vec![(0, 1, int(1))]).unwrap_err();
        assert!(matches!(err, Error::MissingEntry { .. }));
        let ok = SymmetricMatrix::from_entries(3, Some(int(0)), vec![(0, 1, int(1))]).unwrap();
        assert_eq!(ok.get(1, 0), &int(1));
        assert_eq!(ok.get(1, 2), &int(0));
    }

    #[test]
    fn negation_reverses_ranks() {
        let a = fixtures::unique_simplicial_4();
        let b = a.negated();
        assert_eq!(b.get(0, 1), &int(-2));
        assert!(b.rank(0, 1) < b.rank(0, 3));
    }
}
