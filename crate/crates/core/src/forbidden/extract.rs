//! Certificate extraction.
//!
//! For a principal submatrix `A[U]` the analysis returns one of
//!
//! * a critical walk,
//! * two simplicial elements `u, v` with `A[u][v] = min A[U]`, or
//! * a self-contained pair of weighted chordless walks.
//!
//! The first two both exhibit a simplicial element, so when greedy
//! elimination gets stuck on a set without one, the analysis of that set
//! must produce the pair. The recursion splits `U` along a separation
//! `(X, Y)` and asks each side for either a simplicial element away from
//! `S = X ∩ Y` or a weighted chordless walk rooted in `S`; combining the two
//! answers gives one of the three outcomes. Every intermediate witness is
//! re-validated and a failed validation is reported as
//! [`Error::Internal`].

use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use super::walk::{is_chordless, is_critical_in, Walk};
use crate::error::{Error, Result};
use crate::matrix::{connecting_walk, separation_in, SymmetricMatrix};
use crate::ordering::{greedy_eliminate, is_peo, is_simplicial_in, LinearOrder};

/// Structural outcome for a matrix of size at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// A closed weighted chordless walk from a simplicial element through an
    /// element at minimum value from it.
    CriticalWalk(Walk),
    /// Two distinct simplicial elements whose entry is the minimum.
    SimplicialPair(usize, usize),
    /// A self-contained pair of weighted chordless walks.
    ForbiddenPair(Walk, Walk),
}

impl Outcome {
    /// Checks the outcome against `a` (the whole matrix).
    pub fn is_valid_for(&self, a: &SymmetricMatrix) -> bool {
        let all: Vec<usize> = (0..a.n()).collect();
        outcome_is_valid(a, &all, self)
    }
}

/// YES/NO certificate for the existence of a perfect elimination ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Ordering(LinearOrder),
    /// A self-contained pair; a single self-contained walk `W` is `(W, W)`.
    Forbidden(Walk, Walk),
}

impl Certificate {
    /// Re-checks the certificate against `a`.
    pub fn validate(&self, a: &SymmetricMatrix) -> Result<()> {
        match self {
            Certificate::Ordering(pi) => match is_peo(a, pi)?.into_violation() {
                None => Ok(()),
                Some(t) => Err(Error::Internal(format!("order {pi} fails at triple {t}"))),
            },
            Certificate::Forbidden(w1, w2) => {
                for w in [w1, w2] {
                    if w.as_slice().iter().any(|&v| v >= a.n()) {
                        return Err(Error::Internal(format!("walk {w} leaves the index set")));
                    }
                    if !is_chordless(a, w) {
                        return Err(Error::Internal(format!("walk {w} is not weighted chordless")));
                    }
                }
                if !pair_self_contained(w1, w2) {
                    return Err(Error::Internal(format!("walks {w1} / {w2} are not self-contained")));
                }
                Ok(())
            }
        }
    }

    pub fn is_ordering(&self) -> bool {
        matches!(self, Certificate::Ordering(_))
    }
}

/// `PEO: <order>` or `FORBIDDEN: W1=<walk>; W2=<walk>`.
impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Ordering(pi) => write!(f, "PEO: {pi}"),
            Certificate::Forbidden(w1, w2) => write!(f, "FORBIDDEN: W1={w1}; W2={w2}"),
        }
    }
}

impl FromStr for Certificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("PEO:") {
            return Ok(Certificate::Ordering(rest.parse()?));
        }
        let bad = || Error::InvalidArgument(format!("unrecognized certificate {s:?}"));
        let rest = s.strip_prefix("FORBIDDEN:").ok_or_else(bad)?;
        let (first, second) = rest.split_once(';').ok_or_else(bad)?;
        let w1 = first.trim().strip_prefix("W1=").ok_or_else(bad)?.parse()?;
        let w2 = second.trim().strip_prefix("W2=").ok_or_else(bad)?.parse()?;
        Ok(Certificate::Forbidden(w1, w2))
    }
}

pub(crate) fn pair_self_contained(w1: &Walk, w2: &Walk) -> bool {
    let mut all = w1.vertices();
    all.extend(w2.vertices());
    all.sort_unstable();
    all.dedup();
    let mut inner = w1.internal();
    inner.extend(w2.internal());
    inner.sort_unstable();
    inner.dedup();
    all == inner
}

/// Decides whether `a` has a perfect elimination ordering and returns the
/// matching certificate. Certificates are validated before they are returned.
pub fn extract_certificate(a: &SymmetricMatrix) -> Result<Certificate> {
    let all: Vec<usize> = (0..a.n()).collect();
    let (order, stuck) = greedy_eliminate(a, &all);
    let cert = if stuck.is_empty() {
        Certificate::Ordering(LinearOrder::new(order)?)
    } else {
        // stuck has no simplicial element and at least three elements
        match Analyzer::new(a).analyze(&stuck)? {
            Outcome::ForbiddenPair(w1, w2) => Certificate::Forbidden(w1, w2),
            other => {
                return Err(Error::Internal(format!(
                    "set without simplicial element produced {other:?}"
                )))
            }
        }
    };
    cert.validate(a)?;
    Ok(cert)
}

/// Runs the structural analysis on the whole matrix (`n >= 2`).
pub fn structure_outcome(a: &SymmetricMatrix) -> Result<Outcome> {
    if a.n() < 2 {
        return Err(Error::TooSmall { n: a.n(), min: 2 });
    }
    let all: Vec<usize> = (0..a.n()).collect();
    Analyzer::new(a).analyze(&all)
}

/// What one side of a separation offers.
#[derive(Clone, Debug)]
enum Side {
    /// Simplicial in the side's submatrix, outside the shared part.
    Simplicial(usize),
    /// Weighted chordless walk rooted in the shared part.
    Rooted(Vec<usize>),
}

type Pair = (Walk, Walk);

macro_rules! proceed {
    ($e:expr) => {
        match $e? {
            ControlFlow::Continue(v) => v,
            ControlFlow::Break(pair) => return Ok(ControlFlow::Break(pair)),
        }
    };
}

struct Analyzer<'a> {
    a: &'a SymmetricMatrix,
    memo: HashMap<Vec<usize>, Outcome>,
}

impl<'a> Analyzer<'a> {
    fn new(a: &'a SymmetricMatrix) -> Self {
        Analyzer { a, memo: HashMap::new() }
    }

    fn fail<T>(&self, what: impl Into<String>) -> Result<T> {
        Err(Error::Internal(what.into()))
    }

    /// Outcome for the sorted set `set` (`|set| >= 2`).
    fn analyze(&mut self, set: &[usize]) -> Result<Outcome> {
        if let Some(o) = self.memo.get(set) {
            return Ok(o.clone());
        }
        let outcome = match self.analyze_uncached(set)? {
            ControlFlow::Continue(o) => o,
            ControlFlow::Break((w1, w2)) => Outcome::ForbiddenPair(w1, w2),
        };
        if !outcome_is_valid(self.a, set, &outcome) {
            return self.fail(format!("invalid outcome {outcome:?} on {set:?}"));
        }
        self.memo.insert(set.to_vec(), outcome.clone());
        Ok(outcome)
    }

    fn analyze_uncached(&mut self, set: &[usize]) -> Result<ControlFlow<Pair, Outcome>> {
        let a = self.a;
        let min = a.min_rank_in(set);
        let simplicial: Vec<usize> = set.iter().copied().filter(|&v| is_simplicial_in(a, set, v)).collect();
        for (k, &u) in simplicial.iter().enumerate() {
            if let Some(&v) = simplicial[k + 1..].iter().find(|&&v| a.rank(u, v) == min) {
                return Ok(ControlFlow::Continue(Outcome::SimplicialPair(u, v)));
            }
        }
        if set.len() == 2 {
            return self.fail("two-element set without simplicial pair");
        }

        let sep = separation_in(a, set, None);
        let shared = sep.common();
        if shared.is_empty() {
            let x = proceed!(self.simplicial_member(&sep.x));
            let y = proceed!(self.simplicial_member(&sep.y));
            return Ok(ControlFlow::Continue(Outcome::SimplicialPair(x, y)));
        }

        let on_x = proceed!(self.side(&sep.x, &sep.y, &shared));
        let on_y = proceed!(self.side(&sep.y, &sep.x, &shared));
        let outcome = match (on_x, on_y) {
            (Side::Simplicial(x), Side::Simplicial(y)) => Outcome::SimplicialPair(x, y),
            (Side::Simplicial(x), Side::Rooted(q)) => Outcome::CriticalWalk(self.close_through(set, &sep.x, &shared, x, &q)?),
            (Side::Rooted(q), Side::Simplicial(y)) => Outcome::CriticalWalk(self.close_through(set, &sep.y, &shared, y, &q)?),
            (Side::Rooted(p), Side::Rooted(q)) => {
                // each rooted walk closed through the second element of the other one
                let w = self.close_through(set, &sep.y, &shared, q[1], &p)?;
                let w_prime = self.close_through(set, &sep.x, &shared, p[1], &q)?;
                return Ok(ControlFlow::Break((w, w_prime)));
            }
        };
        Ok(ControlFlow::Continue(outcome))
    }

    /// Some element simplicial in `A[set]`.
    fn simplicial_member(&mut self, set: &[usize]) -> Result<ControlFlow<Pair, usize>> {
        if set.len() == 1 {
            return Ok(ControlFlow::Continue(set[0]));
        }
        Ok(match self.analyze(set)? {
            Outcome::SimplicialPair(u, _) => ControlFlow::Continue(u),
            Outcome::CriticalWalk(w) => ControlFlow::Continue(w.start()),
            Outcome::ForbiddenPair(w1, w2) => ControlFlow::Break((w1, w2)),
        })
    }

    /// For the side `zone` of a separation with opposite side `other` and
    /// shared part `shared`, finds a simplicial element of `A[zone]` outside
    /// `shared` or a weighted chordless walk in `A[zone]` rooted in `shared`.
    ///
    /// Works through a strictly shrinking chain `zone = Z_0 ⊃ Z_1 ⊃ …` where
    /// each `Z_i` meets both `other` and its complement, and every element
    /// of `Z_i \ other` simplicial in `A[Z_i]` is simplicial in `A[zone]`.
    fn side(&mut self, zone: &[usize], other: &[usize], shared: &[usize]) -> Result<ControlFlow<Pair, Side>> {
        let a = self.a;
        let in_other = |v: usize| other.binary_search(&v).is_ok();
        let mut current = zone.to_vec();
        loop {
            let min = a.min_rank_in(&current);
            let touching = current.iter().filter(|&&v| in_other(v)).count();
            let pair = match self.analyze(&current)? {
                Outcome::ForbiddenPair(w1, w2) => return Ok(ControlFlow::Break((w1, w2))),
                Outcome::SimplicialPair(u, v) => {
                    if let Some(x) = [u, v].into_iter().find(|&x| !in_other(x)) {
                        return self.simplicial_side(zone, shared, x);
                    }
                    (u, v)
                }
                Outcome::CriticalWalk(w) => {
                    let v0 = w.start();
                    if !in_other(v0) {
                        return self.simplicial_side(zone, shared, v0);
                    }
                    let s = w.as_slice();
                    let low = |i: &usize| a.rank(v0, s[*i]) == min && s[*i] != v0;
                    if let Some(i) = (1..s.len() - 1).filter(low).find(|&i| !in_other(s[i])) {
                        return self.rooted_side(zone, shared, rooted_segment(s, i, in_other));
                    }
                    match (1..s.len() - 1).find(low) {
                        Some(i) => (v0, s[i]),
                        None => return self.fail("critical walk without minimal internal element"),
                    }
                }
            };
            if touching < 2 {
                return self.fail("minimal pair inside a single shared element");
            }

            let sep = separation_in(a, &current, Some(pair));
            let (mut c, mut d, mut p, mut q) = (sep.x.clone(), sep.y.clone(), pair.0, pair.1);
            if c.iter().all(|&v| in_other(v)) {
                std::mem::swap(&mut c, &mut d);
                std::mem::swap(&mut p, &mut q);
            }
            let common = sep.common();
            if let Some(&z) = common.iter().find(|&&z| !in_other(z)) {
                let to_p = self.connect(&c, &common, p, z, min)?;
                let to_q = self.connect(&d, &common, q, z, min)?;
                // p … z … q
                let mut walk = to_p;
                walk.extend(to_q.iter().rev().skip(1));
                let at = walk.iter().position(|&v| v == z).unwrap();
                return self.rooted_side(zone, shared, rooted_segment(&walk, at, in_other));
            }
            if c.len() >= current.len() {
                return self.fail("separation did not shrink the set");
            }
            current = c;
        }
    }

    fn simplicial_side(&self, zone: &[usize], shared: &[usize], x: usize) -> Result<ControlFlow<Pair, Side>> {
        if shared.contains(&x) || !is_simplicial_in(self.a, zone, x) {
            return self.fail(format!("element {} is not simplicial on its side", x + 1));
        }
        Ok(ControlFlow::Continue(Side::Simplicial(x)))
    }

    fn rooted_side(&self, zone: &[usize], shared: &[usize], walk: Vec<usize>) -> Result<ControlFlow<Pair, Side>> {
        let w = Walk::new(walk.clone())?;
        let inside = walk.iter().all(|v| zone.binary_search(v).is_ok());
        if !inside || !is_chordless(self.a, &w) || !super::walk::is_rooted(&w, shared) {
            return self.fail(format!("walk {w} is not a rooted chordless walk"));
        }
        Ok(ControlFlow::Continue(Side::Rooted(walk)))
    }

    fn connect(&self, zone: &[usize], shared: &[usize], u: usize, s: usize, min: u32) -> Result<Vec<usize>> {
        match connecting_walk(self.a, zone, shared, u, s, min) {
            Some(w) => Ok(w),
            None => self.fail(format!("no connecting walk from {} to {}", u + 1, s + 1)),
        }
    }

    /// Closed walk `x ⇝ q_first ⇝ q_last ⇝ x` through a rooted walk `q` of
    /// the opposite side, with both connections inside `zone` (the side of `x`).
    fn close_through(&self, set: &[usize], zone: &[usize], shared: &[usize], x: usize, q: &[usize]) -> Result<Walk> {
        let min = self.a.min_rank_in(set);
        let to_first = self.connect(zone, shared, x, q[0], min)?;
        let to_last = self.connect(zone, shared, x, *q.last().unwrap(), min)?;
        let mut walk = to_first;
        walk.extend(&q[1..]);
        walk.extend(to_last.iter().rev().skip(1));
        Walk::new(walk)
    }
}

/// Maximal subwalk around position `i` whose internal elements avoid
/// `boundary`; its end points lie in `boundary`.
fn rooted_segment(walk: &[usize], i: usize, boundary: impl Fn(usize) -> bool) -> Vec<usize> {
    let from = (0..i).rev().find(|&j| boundary(walk[j])).unwrap_or(0);
    let to = (i + 1..walk.len()).find(|&j| boundary(walk[j])).unwrap_or(walk.len() - 1);
    walk[from..=to].to_vec()
}

fn outcome_is_valid(a: &SymmetricMatrix, set: &[usize], outcome: &Outcome) -> bool {
    let inside = |w: &Walk| w.as_slice().iter().all(|v| set.binary_search(v).is_ok());
    match outcome {
        Outcome::SimplicialPair(u, v) => {
            u != v
                && set.binary_search(u).is_ok()
                && set.binary_search(v).is_ok()
                && a.rank(*u, *v) == a.min_rank_in(set)
                && is_simplicial_in(a, set, *u)
                && is_simplicial_in(a, set, *v)
        }
        Outcome::CriticalWalk(w) => is_critical_in(a, set, w),
        Outcome::ForbiddenPair(w1, w2) => {
            inside(w1) && inside(w2) && is_chordless(a, w1) && is_chordless(a, w2) && pair_self_contained(w1, w2)
        }
    }
}
