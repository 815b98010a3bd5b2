use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;
use crate::ordering::{is_simplicial_in, Verdict};

/// A walk `(v_0, …, v_p)` with `p >= 1`; repeated elements are allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk(Vec<usize>);

impl Walk {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        if seq.len() < 2 {
            return Err(Error::EmptyWalk);
        }
        Ok(Walk(seq))
    }

    pub fn from_one_based(labels: &[usize]) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::InvalidArgument("walk labels are 1-based".into()));
        }
        Self::new(labels.iter().map(|v| v - 1).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Number of steps `p`.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn start(&self) -> usize {
        self.0[0]
    }

    pub fn end(&self) -> usize {
        *self.0.last().unwrap()
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    /// `V(W)`, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        self.0.iter().copied().sorted_unstable().dedup().collect()
    }

    /// `I(W)`: elements at positions `1..p`, sorted.
    pub fn internal(&self) -> Vec<usize> {
        self.0[1..self.0.len() - 1].iter().copied().sorted_unstable().dedup().collect()
    }

    /// `I(W) = V(W)`.
    pub fn is_self_contained(&self) -> bool {
        self.vertices() == self.internal()
    }

    pub fn reversed(&self) -> Walk {
        Walk(self.0.iter().rev().copied().collect())
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    /// Positions `from..=to` as a walk.
    pub fn subwalk(&self, from: usize, to: usize) -> Result<Walk> {
        Walk::new(self.0[from..=to].to_vec())
    }

    fn check_indices(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&v| v >= n) {
            Some(&v) => Err(Error::BadIndex { index: v, n }),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Walk({self})")
    }
}

/// Space-separated 1-based labels.
impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().map(|v| v + 1).join(" "))
    }
}

impl FromStr for Walk {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidArgument(format!("bad walk label {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_based(&labels)
    }
}

/// A nonempty family of walks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkFamily(Vec<Walk>);

impl WalkFamily {
    pub fn new(walks: Vec<Walk>) -> Result<Self> {
        if walks.is_empty() {
            return Err(Error::EmptyFamily);
        }
        Ok(WalkFamily(walks))
    }

    pub fn walks(&self) -> &[Walk] {
        &self.0
    }
}

/// `∪ V(W_h) = ∪ I(W_h)`.
pub fn is_self_contained(family: &WalkFamily) -> bool {
    let all: Vec<usize> = family.0.iter().flat_map(|w| w.vertices()).sorted_unstable().dedup().collect();
    let inner: Vec<usize> = family.0.iter().flat_map(|w| w.internal()).sorted_unstable().dedup().collect();
    all == inner
}

/// Strict violation of the three-point condition at middle element `b`:
/// `A[a][c] < min(A[a][b], A[b][c])`. Triples with a repeated element are
/// never chordless.
#[inline]
pub(crate) fn chordless_triple(a: &SymmetricMatrix, x: usize, y: usize, z: usize) -> bool {
    x != y && y != z && x != z && a.rank(x, z) < a.rank(x, y).min(a.rank(y, z))
}

/// Checks that every internal position `i` is a chordless triple. On
/// failure returns the first bad position `i` (`1 <= i <= p-1`).
pub fn is_weighted_chordless(a: &SymmetricMatrix, w: &Walk) -> Result<Verdict<usize>> {
    w.check_indices(a.n())?;
    let s = w.as_slice();
    Ok(match (1..s.len() - 1).find(|&i| !chordless_triple(a, s[i - 1], s[i], s[i + 1])) {
        None => Verdict::Holds,
        Some(i) => Verdict::Violated(i),
    })
}

pub(crate) fn is_chordless(a: &SymmetricMatrix, w: &Walk) -> bool {
    w.as_slice().windows(3).all(|t| chordless_triple(a, t[0], t[1], t[2]))
}

/// A closed walk whose elements `v_0 … v_{p-1}` are distinct.
fn is_cycle(w: &Walk) -> bool {
    let s = w.as_slice();
    w.is_closed() && s[..s.len() - 1].iter().all_unique()
}

/// Weighted chordless cycle: a cycle that is weighted chordless and also
/// chordless around its end point, `A[v_{p-1}][v_1] < min(A[v_{p-1}][v_0], A[v_0][v_1])`.
pub fn is_weighted_chordless_cycle(a: &SymmetricMatrix, w: &Walk) -> Result<bool> {
    w.check_indices(a.n())?;
    if !is_cycle(w) {
        return Err(Error::NotACycle);
    }
    let s = w.as_slice();
    let p = w.len();
    Ok(is_chordless(a, w) && p >= 2 && chordless_triple(a, s[p - 1], s[0], s[1]))
}

/// Depth-first search for a weighted chordless cycle. Each cycle is rooted
/// at its smallest element. Exponential in the worst case; meant for small `n`.
pub fn find_weighted_chordless_cycle(a: &SymmetricMatrix) -> Option<Walk> {
    let n = a.n();
    if n < 3 {
        return None;
    }
    let mut path = Vec::with_capacity(n + 1);
    let mut used = vec![false; n];
    for root in 0..n {
        path.clear();
        path.push(root);
        used[root] = true;
        for first in root + 1..n {
            path.push(first);
            used[first] = true;
            if extend_cycle(a, root, &mut path, &mut used) {
                path.push(root);
                return Some(Walk(path));
            }
            used[first] = false;
            path.pop();
        }
        used[root] = false;
    }
    None
}

fn extend_cycle(a: &SymmetricMatrix, root: usize, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let k = path.len();
    let (prev, cur) = (path[k - 2], path[k - 1]);
    if k >= 3 && chordless_triple(a, prev, cur, root) && chordless_triple(a, cur, root, path[1]) {
        return true;
    }
    for next in root + 1..a.n() {
        if !used[next] && chordless_triple(a, prev, cur, next) {
            path.push(next);
            used[next] = true;
            if extend_cycle(a, root, path, used) {
                return true;
            }
            used[next] = false;
            path.pop();
        }
    }
    false
}

/// Critical walk relative to the principal submatrix on the sorted `set`.
pub(crate) fn is_critical_in(a: &SymmetricMatrix, set: &[usize], w: &Walk) -> bool {
    if set.len() < 2 || !w.is_closed() || !w.as_slice().iter().all(|v| set.binary_search(v).is_ok()) {
        return false;
    }
    let v0 = w.start();
    let min = a.min_rank_in(set);
    is_chordless(a, w)
        && is_simplicial_in(a, set, v0)
        && w.internal().iter().any(|&u| u != v0 && a.rank(v0, u) == min)
}

/// A closed weighted chordless walk whose end point is simplicial and has
/// some internal element `u` with `A[v_0][u] = min A`.
pub fn is_critical_walk(a: &SymmetricMatrix, w: &Walk) -> bool {
    if w.check_indices(a.n()).is_err() {
        return false;
    }
    let all: Vec<usize> = (0..a.n()).collect();
    is_critical_in(a, &all, w)
}

/// End points in `s`, internal elements outside `s`, and at least one internal element.
pub fn is_rooted(w: &Walk, s: &[usize]) -> bool {
    let inner = &w.as_slice()[1..w.as_slice().len() - 1];
    s.contains(&w.start()) && s.contains(&w.end()) && !inner.is_empty() && inner.iter().all(|v| !s.contains(v))
}
