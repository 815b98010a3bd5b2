//! Small reference matrices with known structure, used by tests, docs and
//! the CLI examples. All are `{0,1,2}`-valued with 1-based labels in the
//! comments.

use crate::matrix::{parse_matrix, Graph, SymmetricMatrix, WeightedGraph};
use crate::ordering::LinearOrder;

/// n = 5. No simplicial element and no weighted chordless cycle, yet
/// `(1,4,5,3,1,2,5)` is a self-contained weighted chordless walk.
pub const NO_SIMPLICIAL_5: &str = "\
n 5
default 0
1 2 2
1 3 2
3 5 2
4 5 2
1 4 1
2 4 1
2 3 1
3 4 1
2 5 1
";

/// n = 5. Every level graph is chordal but `(1,2,3,4,5,1)` is a weighted
/// chordless cycle.
pub const CHORDLESS_CYCLE_5: &str = "\
n 5
default 0
1 2 2
2 3 2
4 5 2
1 5 2
1 3 1
1 4 1
3 4 1
";

/// n = 6. No simplicial element and no single self-contained weighted
/// chordless walk; the pair `(6,2,1,3,6)`, `(1,4,6,5,1)` is self-contained.
pub const SIX_PAIR_ONLY: &str = "\
n 6
default 1
1 2 2
1 3 2
4 6 2
5 6 2
1 6 0
";

/// n = 4. Element 4 is the unique simplicial element.
pub const UNIQUE_SIMPLICIAL_4: &str = "\
n 4
default 1
1 2 2
1 3 2
1 4 0
";

pub fn no_simplicial_5() -> SymmetricMatrix {
    parse_matrix(NO_SIMPLICIAL_5).expect("valid fixture")
}

pub fn chordless_cycle_5() -> SymmetricMatrix {
    parse_matrix(CHORDLESS_CYCLE_5).expect("valid fixture")
}

pub fn six_pair_only() -> SymmetricMatrix {
    parse_matrix(SIX_PAIR_ONLY).expect("valid fixture")
}

pub fn unique_simplicial_4() -> SymmetricMatrix {
    parse_matrix(UNIQUE_SIMPLICIAL_4).expect("valid fixture")
}

/// The unweighted 4-cycle with the order `1 2 3 4`: every suffix is
/// isometric, but the order is not a PEO of `-W`.
pub fn distance_preserving_not_peo() -> (WeightedGraph, LinearOrder) {
    (WeightedGraph::unweighted(&Graph::cycle(4)), LinearOrder::identity(4))
}
