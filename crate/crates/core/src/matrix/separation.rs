use std::collections::VecDeque;

use super::SymmetricMatrix;
use crate::error::{Error, Result};

/// A cover `X ∪ Y` of the index set such that every entry between `X \ Y`
/// and `Y \ X` equals the minimum off-diagonal value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    /// Sorted.
    pub x: Vec<usize>,
    /// Sorted.
    pub y: Vec<usize>,
}

impl Separation {
    /// `X ∩ Y`.
    pub fn common(&self) -> Vec<usize> {
        self.x.iter().copied().filter(|v| self.y.binary_search(v).is_ok()).collect()
    }

    /// `X \ Y`.
    pub fn x_only(&self) -> Vec<usize> {
        self.x.iter().copied().filter(|v| self.y.binary_search(v).is_err()).collect()
    }

    /// `Y \ X`.
    pub fn y_only(&self) -> Vec<usize> {
        self.y.iter().copied().filter(|v| self.x.binary_search(v).is_err()).collect()
    }

    /// Checks the defining conditions against `a` restricted to `set`:
    /// `X ∪ Y = set`, both one-sided parts nonempty, and every cross entry minimal.
    pub fn is_separation_of(&self, a: &SymmetricMatrix, set: &[usize]) -> bool {
        let mut union: Vec<usize> = self.x.iter().chain(&self.y).copied().collect();
        union.sort_unstable();
        union.dedup();
        if union != set {
            return false;
        }
        let (xo, yo) = (self.x_only(), self.y_only());
        if xo.is_empty() || yo.is_empty() {
            return false;
        }
        let min = a.min_rank_in(set);
        xo.iter().all(|&u| yo.iter().all(|&v| a.rank(u, v) == min))
    }
}

/// Finds a separation of `a`.
///
/// With `pair = Some((a, b))` (where `A[a][b] = min A`) the separation puts
/// `a` in `X \ Y` and `b` in `Y \ X`. Without a pair the lexicographically
/// smallest minimal pair seeds the construction and the separator is then
/// shrunk until every component it leaves is adjacent to all of it, so each
/// one-sided element reaches each shared element by a weighted chordless walk.
pub fn find_separation(a: &SymmetricMatrix, pair: Option<(usize, usize)>) -> Result<Separation> {
    let n = a.n();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    if let Some((p, q)) = pair {
        a.check_index(p)?;
        a.check_index(q)?;
        if p == q || a.rank(p, q) != 0 {
            return Err(Error::PairNotMinimal { a: p + 1, b: q + 1 });
        }
    }
    let all: Vec<usize> = (0..n).collect();
    Ok(separation_in(a, &all, pair))
}

/// Separation of the principal submatrix on the sorted set `set` (`|set| >= 2`).
/// A given pair must realize the minimum of that submatrix.
pub(crate) fn separation_in(a: &SymmetricMatrix, set: &[usize], pair: Option<(usize, usize)>) -> Separation {
    debug_assert!(set.len() >= 2);
    let n = a.n();
    let min = a.min_rank_in(set);
    let mut inside = vec![false; n];
    for &v in set {
        inside[v] = true;
    }
    // H: pairs strictly above the minimum
    let linked = |u: usize, v: usize| a.rank(u, v) > min;

    if pair.is_none() {
        let comps = components(a, set, &inside, min);
        if comps.len() >= 2 {
            let x = comps[0].clone();
            let y = set.iter().copied().filter(|v| x.binary_search(v).is_err()).collect();
            return Separation { x, y };
        }
    }

    let (p, q) = pair.unwrap_or_else(|| {
        set.iter()
            .enumerate()
            .flat_map(|(k, &u)| set[k + 1..].iter().map(move |&v| (u, v)))
            .find(|&(u, v)| a.rank(u, v) == min)
            .expect("a minimal pair exists")
    });

    // Minimal (p,q)-separator: neighbours of the component of q in H - N[p].
    let mut allowed = inside.clone();
    allowed[p] = false;
    for &v in set {
        if v != p && linked(p, v) {
            allowed[v] = false;
        }
    }
    let cq = reach(a, q, &allowed, min);
    let mut sep = neighbourhood(a, set, &cq, min);

    if pair.is_none() {
        loop {
            let mut rest = inside.clone();
            for &s in &sep {
                rest[s] = false;
            }
            let rest_set: Vec<usize> = set.iter().copied().filter(|&v| rest[v]).collect();
            let shrink = components(a, &rest_set, &rest, min)
                .into_iter()
                .map(|c| neighbourhood(a, set, &c, min))
                .find(|nb| nb.len() < sep.len());
            match shrink {
                Some(nb) => sep = nb,
                None => break,
            }
        }
    }

    let mut rest = inside.clone();
    for &s in &sep {
        rest[s] = false;
    }
    let rest_set: Vec<usize> = set.iter().copied().filter(|&v| rest[v]).collect();
    let comps = components(a, &rest_set, &rest, min);
    let c1 = match pair {
        Some(_) => comps.into_iter().find(|c| c.contains(&p)).unwrap(),
        None => comps.into_iter().next().unwrap(),
    };
    let mut x: Vec<usize> = c1.iter().chain(&sep).copied().collect();
    x.sort_unstable();
    let y = set.iter().copied().filter(|v| c1.binary_search(v).is_err()).collect();
    Separation { x, y }
}

fn reach(a: &SymmetricMatrix, start: usize, allowed: &[bool], min: u32) -> Vec<usize> {
    let mut seen = vec![false; a.n()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = Vec::new();
    while let Some(u) = stack.pop() {
        out.push(u);
        for w in 0..a.n() {
            if allowed[w] && !seen[w] && w != u && a.rank(u, w) > min {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

fn components(a: &SymmetricMatrix, set: &[usize], allowed: &[bool], min: u32) -> Vec<Vec<usize>> {
    let mut done = vec![false; a.n()];
    let mut out = Vec::new();
    for &s in set {
        if !done[s] {
            let c = reach(a, s, allowed, min);
            for &v in &c {
                done[v] = true;
            }
            out.push(c);
        }
    }
    out
}

/// Vertices of `set \ comp` linked in H to some vertex of `comp`.
fn neighbourhood(a: &SymmetricMatrix, set: &[usize], comp: &[usize], min: u32) -> Vec<usize> {
    set.iter()
        .copied()
        .filter(|v| comp.binary_search(v).is_err())
        .filter(|&v| comp.iter().any(|&c| a.rank(c, v) > min))
        .collect()
}

/// A weighted chordless walk from `u` to `s` inside `zone`, internally
/// avoiding `shared`, relative to the minimum `min` of the ambient
/// submatrix: the single step `(u, s)` when `A[u][s]` exceeds the minimum,
/// otherwise a shortest path of above-minimum pairs, whose 2-chords are all minimal.
pub(crate) fn connecting_walk(
    a: &SymmetricMatrix,
    zone: &[usize],
    shared: &[usize],
    u: usize,
    s: usize,
    min: u32,
) -> Option<Vec<usize>> {
    if a.rank(u, s) > min {
        return Some(vec![u, s]);
    }
    let n = a.n();
    let mut allowed = vec![false; n];
    for &v in zone {
        allowed[v] = true;
    }
    for &v in shared {
        allowed[v] = false;
    }
    allowed[s] = true;
    let mut parent = vec![usize::MAX; n];
    parent[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == s {
            let mut walk = vec![s];
            let mut cur = s;
            while cur != u {
                cur = parent[cur];
                walk.push(cur);
            }
            walk.reverse();
            return Some(walk);
        }
        for w in 0..n {
            if allowed[w] && parent[w] == usize::MAX && w != x && a.rank(x, w) > min {
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matrix::int;

    #[test]
    fn separates_given_pair() {
        let a = fixtures::no_simplicial_5();
        let sep = find_separation(&a, Some((0, 4))).unwrap();
        assert!(sep.is_separation_of(&a, &[0, 1, 2, 3, 4]));
        assert!(sep.x_only().contains(&0));
        assert!(sep.y_only().contains(&4));
    }

    #[test]
    fn edgeless_threshold_graph_splits_off_first_component() {
        for v in [0, 1] {
            let a = SymmetricMatrix::constant(4, int(v)).unwrap();
            let sep = find_separation(&a, None).unwrap();
            assert_eq!(sep.x, vec![0]);
            assert_eq!(sep.y, vec![1, 2, 3]);
            assert!(sep.common().is_empty());
        }
    }

    #[test]
    fn rejects_non_minimal_pair_and_tiny_input() {
        let a = fixtures::no_simplicial_5();
        assert!(matches!(find_separation(&a, Some((0, 1))), Err(Error::PairNotMinimal { .. })));
        let one = SymmetricMatrix::constant(1, int(0)).unwrap();
        assert!(matches!(find_separation(&one, None), Err(Error::TooSmall { .. })));
    }

    #[test]
    fn shrinks_to_full_separator() {
        // H: a-s1, a-s2, b-s1, b-s2, c-s1; {s1,s2} separates a from b but c
        // only sees s1, so the separator must shrink to {s1}.
        let (av, bv, cv, s1, s2) = (0, 1, 2, 3, 4);
        let edges = [(av, s1), (av, s2), (bv, s1), (bv, s2), (cv, s1)];
        let a = SymmetricMatrix::from_entries(5, Some(int(0)), edges.iter().map(|&(i, j)| (i, j, int(1)))).unwrap();
        let sep = find_separation(&a, None).unwrap();
        assert!(sep.is_separation_of(&a, &[0, 1, 2, 3, 4]));
        assert_eq!(sep.common(), vec![s1]);
    }
}
