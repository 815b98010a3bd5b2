//! Weighted chordless walks, self-contained families and certificates
//! that no perfect elimination ordering exists.

mod extract;
mod search;
mod walk;

pub use extract::{extract_certificate, structure_outcome, Certificate, Outcome};
pub use search::{
    certificate_bruteforce, default_max_len, find_self_contained_family_bruteforce,
    find_self_contained_pair_bruteforce, find_self_contained_walk_bruteforce, WALK_SEARCH_CAP,
};
pub use walk::{
    find_weighted_chordless_cycle, is_critical_walk, is_rooted, is_self_contained, is_weighted_chordless,
    is_weighted_chordless_cycle, Walk, WalkFamily,
};
