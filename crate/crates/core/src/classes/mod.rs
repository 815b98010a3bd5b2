//! Related ordering classes, chordality, graph powers and
//! distance-preserving elimination orderings.

mod chordal;
mod distance;
mod orders;
mod powers;

pub use chordal::{is_chordal, is_chordless_cycle, level_chordality, mcs_order};
pub use distance::is_distance_preserving_order;
pub use orders::{
    brute_force_class_recognition, classify_orderings, is_cocomparability_ordering, is_interval_ordering,
    is_robinson_ordering, is_ultrametric, DistanceMatrix, OrderingClass, OrderingClassReport,
};
pub use powers::{check_power_corollary, duchet_power_check, PowerChordality, PowerCorollaryReport};
