//! Exhaustive searches for self-contained walks, pairs and families.
//!
//! Walks are explored breadth-first over states `(previous, current, V, I)`
//! where `V` and `I` are the element and internal-element bitmasks so far.
//! Two walks with the same final `(V, I)` are interchangeable for
//! self-containment, so only the shortest one per `(V, I)` is kept.

use super::extract::Certificate;
use super::walk::{chordless_triple, Walk};
use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Largest size accepted by the walk searches.
pub const WALK_SEARCH_CAP: usize = 7;

/// Default total length cap, `2n + 2`.
pub fn default_max_len(n: usize) -> usize {
    2 * n + 2
}

const NONE: u32 = u32::MAX;

struct WalkIndex {
    n: usize,
    /// Shortest walk per `(V, I)`: length and end state.
    best: Vec<Option<(usize, usize)>>,
    /// Per state: parent state (or `NONE` for a first step).
    parent: Vec<u32>,
}

impl WalkIndex {
    fn build(a: &SymmetricMatrix, max_len: usize) -> Self {
        let n = a.n();
        let masks = 1usize << n;
        let states = n * n * masks * masks;
        let encode = |p: usize, c: usize, v: usize, i: usize| ((p * n + c) * masks + v) * masks + i;
        let mut depth = vec![0u8; states];
        let mut parent = vec![NONE; states];
        let mut best = vec![None; masks * masks];
        let mut frontier = Vec::new();
        for p in 0..n {
            for c in 0..n {
                if p != c {
                    let s = encode(p, c, (1 << p) | (1 << c), 0);
                    depth[s] = 1;
                    frontier.push(s);
                }
            }
        }
        let mut len = 1;
        while !frontier.is_empty() && len <= max_len {
            let mut next = Vec::new();
            for &s in &frontier {
                let imask = s % masks;
                let vmask = (s / masks) % masks;
                let c = (s / masks / masks) % n;
                let p = s / masks / masks / n;
                let key = vmask * masks + imask;
                if best[key].is_none() {
                    best[key] = Some((len, s));
                }
                if len == max_len {
                    continue;
                }
                for q in 0..n {
                    if chordless_triple(a, p, c, q) {
                        let t = encode(c, q, vmask | (1 << q), imask | (1 << c));
                        if depth[t] == 0 {
                            depth[t] = (len + 1).min(255) as u8;
                            parent[t] = s as u32;
                            next.push(t);
                        }
                    }
                }
            }
            frontier = next;
            len += 1;
        }
        WalkIndex { n, best, parent }
    }

    fn masks(&self) -> usize {
        1 << self.n
    }

    fn walk(&self, state: usize) -> Walk {
        let n = self.n;
        let masks = self.masks();
        let cur = |s: usize| (s / masks / masks) % n;
        let prev = |s: usize| s / masks / masks / n;
        let mut seq = vec![cur(state)];
        let mut s = state;
        while self.parent[s] != NONE {
            s = self.parent[s] as usize;
            seq.push(cur(s));
        }
        seq.push(prev(s));
        seq.reverse();
        Walk::new(seq).expect("walks have at least one step")
    }

    /// `(V, I, length, end state)` for every reachable `(V, I)`.
    fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, usize)> + '_ {
        let masks = self.masks();
        self.best.iter().enumerate().filter_map(move |(k, b)| b.map(|(len, s)| (k / masks, k % masks, len, s)))
    }
}

fn check_caps(a: &SymmetricMatrix, max_len: usize) -> Result<()> {
    if a.n() > WALK_SEARCH_CAP {
        return Err(Error::CapExceeded { n: a.n(), cap: WALK_SEARCH_CAP });
    }
    if max_len < 3 {
        return Err(Error::InvalidArgument("walk length cap must be at least 3".into()));
    }
    if max_len > 250 {
        return Err(Error::InvalidArgument("walk length cap must be at most 250".into()));
    }
    Ok(())
}

/// Shortest self-contained weighted chordless walk with at most `max_len` steps.
pub fn find_self_contained_walk_bruteforce(a: &SymmetricMatrix, max_len: usize) -> Result<Option<Walk>> {
    check_caps(a, max_len)?;
    let index = WalkIndex::build(a, max_len);
    Ok(index
        .entries()
        .filter(|&(v, i, _, _)| v & !i == 0)
        .min_by_key(|&(v, i, len, _)| (len, v, i))
        .map(|(_, _, _, s)| index.walk(s)))
}

/// Self-contained pair of weighted chordless walks with total length at
/// most `max_len`, shortest first. A single self-contained walk `W` counts
/// with its own length and is returned as `(W, W)`.
pub fn find_self_contained_pair_bruteforce(a: &SymmetricMatrix, max_len: usize) -> Result<Option<(Walk, Walk)>> {
    check_caps(a, max_len)?;
    let index = WalkIndex::build(a, max_len);
    let entries: Vec<_> = index.entries().collect();
    let mut found: Option<(usize, usize, usize)> = None;
    for (k, &(v1, i1, l1, s1)) in entries.iter().enumerate() {
        if v1 & !i1 == 0 && found.is_none_or(|(best, _, _)| l1 < best) {
            found = Some((l1, s1, s1));
        }
        for &(v2, i2, l2, s2) in &entries[k + 1..] {
            let total = l1 + l2;
            if total <= max_len && (v1 | v2) & !(i1 | i2) == 0 && found.is_none_or(|(best, _, _)| total < best) {
                found = Some((total, s1, s2));
            }
        }
    }
    Ok(found.map(|(_, s1, s2)| (index.walk(s1), index.walk(s2))))
}

/// Self-contained family of weighted chordless walks, each with at most
/// `max_len` steps. Finds the largest such family by repeatedly discarding
/// walks that touch an element no remaining walk covers internally, then
/// drops redundant members.
pub fn find_self_contained_family_bruteforce(a: &SymmetricMatrix, max_len: usize) -> Result<Option<Vec<Walk>>> {
    check_caps(a, max_len)?;
    let index = WalkIndex::build(a, max_len);
    let mut members: Vec<(usize, usize, usize, usize)> = index.entries().collect();
    loop {
        let covered = members.iter().fold(0, |acc, &(_, i, _, _)| acc | i);
        let before = members.len();
        members.retain(|&(v, _, _, _)| v & !covered == 0);
        if members.len() == before {
            break;
        }
    }
    if members.is_empty() {
        return Ok(None);
    }
    // longest first so that shorter walks survive the pruning
    members.sort_by_key(|&(v, i, len, _)| (std::cmp::Reverse(len), v, i));
    let mut k = 0;
    while k < members.len() {
        let rest = || members.iter().enumerate().filter(move |&(j, _)| j != k).map(|(_, m)| *m);
        let v = rest().fold(0, |acc, (v, _, _, _)| acc | v);
        let i = rest().fold(0, |acc, (_, i, _, _)| acc | i);
        if members.len() > 1 && v & !i == 0 {
            members.remove(k);
        } else {
            k += 1;
        }
    }
    Ok(Some(members.into_iter().map(|(_, _, _, s)| index.walk(s)).collect()))
}

/// Brute-force certificate used as an oracle: a PEO from the permutation
/// search, or a self-contained pair from the walk search.
pub fn certificate_bruteforce(a: &SymmetricMatrix, max_len: usize) -> Result<Option<Certificate>> {
    if let Some(pi) = crate::ordering::all_peos_bruteforce(a)?.into_iter().next() {
        return Ok(Some(Certificate::Ordering(pi)));
    }
    Ok(find_self_contained_pair_bruteforce(a, max_len)?.map(|(w1, w2)| Certificate::Forbidden(w1, w2)))
}
