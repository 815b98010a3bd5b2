//! Perfect elimination orderings and simplicial elements.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Result of a three-point check: either the condition holds or a witness
/// of its failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Violated(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn violation(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(w) => Some(w),
        }
    }

    pub fn into_violation(self) -> Option<W> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(w) => Some(w),
        }
    }
}

/// Three elements `x <π y <π z` (0-based indices) witnessing a failed
/// three-point condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.x + 1, self.y + 1, self.z + 1)
    }
}

/// A permutation of `0..n` together with its inverse.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearOrder {
    perm: Vec<usize>,
    pos: Vec<usize>,
}

impl LinearOrder {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in perm.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrder(format!("element {} out of range 1..={n}", v + 1)));
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidOrder(format!("element {} repeated", v + 1)));
            }
            pos[v] = i;
        }
        Ok(LinearOrder { perm, pos })
    }

    pub fn from_one_based(labels: &[usize]) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::InvalidOrder("labels are 1-based".into()));
        }
        Self::new(labels.iter().map(|&v| v - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect()).expect("identity is a permutation")
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    /// Position of element `v`.
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn first(&self) -> Option<usize> {
        self.perm.first().copied()
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.perm.iter().map(|v| v + 1).collect()
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.perm.iter().rev().copied().collect()).expect("reversal is a permutation")
    }

    fn check_size(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::OrderMismatch { order: self.len(), n })
        }
    }

    /// Finds the first triple of positions `i < j < k` (lexicographically)
    /// for which `fails(x, y, z)` holds.
    pub(crate) fn first_failing_triple(&self, mut fails: impl FnMut(usize, usize, usize) -> bool) -> Option<Triple> {
        let p = &self.perm;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                for k in j + 1..p.len() {
                    if fails(p[i], p[j], p[k]) {
                        return Some(Triple { x: p[i], y: p[j], z: p[k] });
                    }
                }
            }
        }
        None
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOrder({self})")
    }
}

/// Space-separated 1-based labels.
impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.perm.iter().map(|v| v + 1).join(" "))
    }
}

impl FromStr for LinearOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidOrder(format!("bad label {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_based(&labels)
    }
}

/// Checks `A[y][z] >= min(A[x][y], A[x][z])` for all `x <π y <π z`. On
/// failure returns the first violating triple by positions in `π`.
pub fn is_peo(a: &SymmetricMatrix, pi: &LinearOrder) -> Result<Verdict<Triple>> {
    pi.check_size(a.n())?;
    Ok(match pi.first_failing_triple(|x, y, z| a.rank(y, z) < a.rank(x, y).min(a.rank(x, z))) {
        None => Verdict::Holds,
        Some(t) => Verdict::Violated(t),
    })
}

/// Pair `(y, z)` inside `set` with `A[y][z] < min(A[v][y], A[v][z])`, if any.
pub(crate) fn simplicial_violation_in(a: &SymmetricMatrix, set: &[usize], v: usize) -> Option<(usize, usize)> {
    for (k, &y) in set.iter().enumerate() {
        if y == v {
            continue;
        }
        let vy = a.rank(v, y);
        for &z in &set[k + 1..] {
            if z != v && a.rank(y, z) < vy.min(a.rank(v, z)) {
                return Some((y, z));
            }
        }
    }
    None
}

pub(crate) fn is_simplicial_in(a: &SymmetricMatrix, set: &[usize], v: usize) -> bool {
    simplicial_violation_in(a, set, v).is_none()
}

/// Whether `v` is simplicial: `A[y][z] >= min(A[v][y], A[v][z])` for all
/// distinct `y, z != v`. A violating pair `(y, z)` is returned otherwise.
pub fn is_simplicial(a: &SymmetricMatrix, v: usize) -> Result<Verdict<(usize, usize)>> {
    a.check_index(v)?;
    let all: Vec<usize> = (0..a.n()).collect();
    Ok(match simplicial_violation_in(a, &all, v) {
        None => Verdict::Holds,
        Some(w) => Verdict::Violated(w),
    })
}

/// Smallest simplicial index, if any.
pub fn find_simplicial(a: &SymmetricMatrix) -> Option<usize> {
    let all: Vec<usize> = (0..a.n()).collect();
    all.iter().copied().find(|&v| is_simplicial_in(a, &all, v))
}

/// Greedy elimination inside `set`: repeatedly removes the smallest
/// simplicial element. Returns the eliminated prefix and what is left.
pub(crate) fn greedy_eliminate(a: &SymmetricMatrix, set: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut rest = set.to_vec();
    let mut order = Vec::with_capacity(rest.len());
    while let Some(k) = rest.iter().position(|&v| is_simplicial_in(a, &rest, v)) {
        order.push(rest.remove(k));
    }
    (order, rest)
}

/// Builds a PEO by repeatedly eliminating the smallest simplicial element of
/// the remaining principal submatrix. Returns `None` when it gets stuck, in
/// which case no PEO exists.
pub fn greedy_peo(a: &SymmetricMatrix) -> Option<LinearOrder> {
    let all: Vec<usize> = (0..a.n()).collect();
    let (order, rest) = greedy_eliminate(a, &all);
    rest.is_empty().then(|| LinearOrder::new(order).expect("greedy order is a permutation"))
}

/// A PEO whose first element is `v`, if one exists. That is the case exactly
/// when `v` is simplicial and the matrix with `v` removed has a PEO.
pub fn peo_starting_at(a: &SymmetricMatrix, v: usize) -> Result<Option<LinearOrder>> {
    a.check_index(v)?;
    let all: Vec<usize> = (0..a.n()).collect();
    if !is_simplicial_in(a, &all, v) {
        return Ok(None);
    }
    let rest: Vec<usize> = all.into_iter().filter(|&u| u != v).collect();
    let (tail, stuck) = greedy_eliminate(a, &rest);
    if !stuck.is_empty() {
        return Ok(None);
    }
    let mut perm = vec![v];
    perm.extend(tail);
    Ok(Some(LinearOrder::new(perm)?))
}

/// Largest size accepted by the permutation oracles.
pub const ENUMERATION_CAP: usize = 9;

/// Every order passing [`is_peo`], by exhaustive enumeration of all `n!`
/// permutations (in lexicographic order).
pub fn all_peos_bruteforce(a: &SymmetricMatrix) -> Result<Vec<LinearOrder>> {
    let n = a.n();
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { n, cap: ENUMERATION_CAP });
    }
    let mut out = Vec::new();
    for perm in (0..n).permutations(n) {
        let pi = LinearOrder::new(perm)?;
        if is_peo(a, &pi)?.holds() {
            out.push(pi);
        }
    }
    Ok(out)
}
