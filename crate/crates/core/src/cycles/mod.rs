//! Orthogonal cycles, their weight function, and the exact LP deciding
//! whether a configuration carries a positive cycle collection.

mod cycle;
mod feasibility;
pub mod lp;
mod pattern;

pub use cycle::{collection_is_positive, CycleCollection, OrthogonalCycle};
pub use feasibility::{exists_positive_collection, second_differences, FeasibilityCertificate};
pub use pattern::{pattern_obstruction, Cell, PartialPattern, PatternVerdict};

/// `𝔉(i,j)` of `cycle`; see [`OrthogonalCycle::weight`].
pub fn weight_function(cycle: &OrthogonalCycle, i: usize, j: usize) -> i64 {
    cycle.weight(i, j)
}
