use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;
use crate::ordering::{greedy_peo, is_peo, LinearOrder, Triple, Verdict, ENUMERATION_CAP};

/// A symmetric matrix of nonnegative dissimilarities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix(SymmetricMatrix);

impl DistanceMatrix {
    pub fn new(d: SymmetricMatrix) -> Result<Self> {
        match d.has_negative_entry() {
            Some((i, j)) => Err(Error::NegativeDistance { i: i + 1, j: j + 1 }),
            None => Ok(DistanceMatrix(d)),
        }
    }

    pub fn matrix(&self) -> &SymmetricMatrix {
        &self.0
    }

    /// The similarity matrix `-D`.
    pub fn similarity(&self) -> SymmetricMatrix {
        self.0.negated()
    }
}

/// First `(x, y, z)` with `D[y][z] > max(D[x][y], D[x][z])`, over all
/// triples of distinct elements. Works on any symmetric matrix.
pub(crate) fn ultrametric_violation(d: &SymmetricMatrix) -> Option<Triple> {
    let n = d.n();
    for x in 0..n {
        for y in 0..n {
            for z in y + 1..n {
                if x != y && x != z && d.rank(y, z) > d.rank(x, y).max(d.rank(x, z)) {
                    return Some(Triple { x, y, z });
                }
            }
        }
    }
    None
}

/// Checks `D[y][z] <= max(D[x][y], D[x][z])` for all `x, y, z`.
pub fn is_ultrametric(d: &DistanceMatrix) -> Verdict<Triple> {
    match ultrametric_violation(d.matrix()) {
        None => Verdict::Holds,
        Some(t) => Verdict::Violated(t),
    }
}

fn order_check(
    a: &SymmetricMatrix,
    pi: &LinearOrder,
    fails: impl Fn(u32, u32, u32) -> bool,
) -> Result<Verdict<Triple>> {
    if pi.len() != a.n() {
        return Err(Error::OrderMismatch { order: pi.len(), n: a.n() });
    }
    // fails(A_xy, A_xz, A_yz) on ranks
    Ok(match pi.first_failing_triple(|x, y, z| fails(a.rank(x, y), a.rank(x, z), a.rank(y, z))) {
        None => Verdict::Holds,
        Some(t) => Verdict::Violated(t),
    })
}

/// `A[x][z] <= min(A[x][y], A[y][z])` for all `x <π y <π z`.
pub fn is_robinson_ordering(a: &SymmetricMatrix, pi: &LinearOrder) -> Result<Verdict<Triple>> {
    order_check(a, pi, |xy, xz, yz| xz > xy.min(yz))
}

/// `A[x][z] <= A[y][z]` for all `x <π y <π z`.
pub fn is_interval_ordering(a: &SymmetricMatrix, pi: &LinearOrder) -> Result<Verdict<Triple>> {
    order_check(a, pi, |_, xz, yz| xz > yz)
}

/// `A[x][z] <= max(A[x][y], A[y][z])` for all `x <π y <π z`.
pub fn is_cocomparability_ordering(a: &SymmetricMatrix, pi: &LinearOrder) -> Result<Verdict<Triple>> {
    order_check(a, pi, |xy, xz, yz| xz > xy.max(yz))
}

/// Ordering classes with a three-point definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderingClass {
    Peo,
    Robinson,
    Interval,
    Cocomparability,
}

impl OrderingClass {
    pub const ALL: [OrderingClass; 4] =
        [OrderingClass::Peo, OrderingClass::Robinson, OrderingClass::Interval, OrderingClass::Cocomparability];

    pub fn check(self, a: &SymmetricMatrix, pi: &LinearOrder) -> Result<Verdict<Triple>> {
        match self {
            OrderingClass::Peo => is_peo(a, pi),
            OrderingClass::Robinson => is_robinson_ordering(a, pi),
            OrderingClass::Interval => is_interval_ordering(a, pi),
            OrderingClass::Cocomparability => is_cocomparability_ordering(a, pi),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrderingClass::Peo => "peo",
            OrderingClass::Robinson => "robinson",
            OrderingClass::Interval => "interval",
            OrderingClass::Cocomparability => "cocomparability",
        }
    }
}

impl fmt::Display for OrderingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderingClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OrderingClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown ordering class {s:?}")))
    }
}

/// Some order of the given class, by enumerating all `n!` orders
/// lexicographically.
pub fn brute_force_class_recognition(a: &SymmetricMatrix, class: OrderingClass) -> Result<Option<LinearOrder>> {
    let n = a.n();
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded { n, cap: ENUMERATION_CAP });
    }
    for perm in (0..n).permutations(n) {
        let pi = LinearOrder::new(perm)?;
        if class.check(a, &pi)?.holds() {
            return Ok(Some(pi));
        }
    }
    Ok(None)
}

/// Which ordering classes a matrix belongs to.
///
/// `ultrametric` reads the matrix as a similarity, i.e. asks whether `-A`
/// is an ultrametric. The Robinson, interval and cocomparability orders are
/// only searched for when `n` is within [`ENUMERATION_CAP`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingClassReport {
    pub ultrametric: bool,
    pub peo: Option<LinearOrder>,
    pub searched: bool,
    pub robinson: Option<LinearOrder>,
    pub interval: Option<LinearOrder>,
    pub cocomparability: Option<LinearOrder>,
}

impl OrderingClassReport {
    /// Robinson implies interval implies both PEO and cocomparability, and
    /// an ultrametric `-A` makes every order a PEO.
    pub fn is_consistent(&self) -> bool {
        let chain = !self.searched
            || ((self.robinson.is_none() || self.interval.is_some())
                && (self.interval.is_none() || (self.peo.is_some() && self.cocomparability.is_some())));
        chain && (!self.ultrametric || self.peo.is_some())
    }
}

pub fn classify_orderings(a: &SymmetricMatrix) -> Result<OrderingClassReport> {
    let searched = a.n() <= ENUMERATION_CAP;
    let search = |class| if searched { brute_force_class_recognition(a, class) } else { Ok(None) };
    Ok(OrderingClassReport {
        ultrametric: ultrametric_violation(&a.negated()).is_none(),
        peo: greedy_peo(a),
        searched,
        robinson: search(OrderingClass::Robinson)?,
        interval: search(OrderingClass::Interval)?,
        cocomparability: search(OrderingClass::Cocomparability)?,
    })
}
