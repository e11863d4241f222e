//! Equal 2×2 minors of 2×n TP matrices and realization of outerplanar
//! graphs by such minors.

mod alpha;
mod outerplanar;
mod realize;

pub use alpha::{alpha_set, forbidden_quadruples, AlphaSet, QuadrupleViolation};
pub use outerplanar::{
    chords_cross, find_outerplanar_order, random_maximal_outerplanar, triangulate_outerplanar,
    OuterplanarInput,
};
pub use realize::{realize_outerplanar, Realization};
