//! Point-line arrangements and the construction of TP matrices whose equal
//! entries sit exactly at point-line incidences.

mod arrangement;
mod construct;
mod normalize;

pub use arrangement::{
    above_below_counts, grid_arrangement, incidence_matrix, vertical_distance_matrix, Arrangement,
    GeneralPositionReport, VerticalDistances,
};
pub use construct::{exp_matrix_tp, TpConstruction};
pub use normalize::{normalize_general_position, Normalized, ProjectiveMap, DEFAULT_NORMALIZE_BUDGET};
