//! Executable checkers for the probabilistic lemmas and proof gadgets: the
//! two-block model properties, typical G(n,p) properties, atypical edges,
//! bad stars and their packing, the biased orientation with in-star
//! extraction, vertex classification against a partition, and toy-scale
//! lower-regularity.

mod basics;
mod classify;
mod g1nice;
mod orientation;
mod regularity;
mod report;
mod stars;

pub use basics::{atypical_edges, check_basics, AtypicalResult};
pub use classify::{classify_partition, small_classes, Classification};
pub use g1nice::check_g1nice;
pub use orientation::{greedy_in_stars, orient_edges, tilde_set, Orientation};
pub use regularity::{lower_regular_pair, RegularityMode, EXHAUSTIVE_CAP};
pub use report::{ClauseReport, PropertyReport, Relation};
pub use stars::{
    canonical_witness, count_disjoint_bad_stars, is_bad_star, BadStarPacking, StarCertificate,
};
