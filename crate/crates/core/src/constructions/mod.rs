//! Explicit labelings with few sums and products: triangle families,
//! quadratic-irrational matchings, matchings cut from colour classes, and
//! the random restriction of a dense labelled graph to a sparse matching.

mod algebraic;
mod colouring;
mod interval;
mod report;
mod sparse;
mod triangles;

pub use algebraic::{
    all_distinct, real_matching_family, AlgebraicLabel, RealMatching, RealMatchingSummary,
    REAL_MATCHING_MAX_EDGES, REAL_MATCHING_RETRIES,
};
pub use colouring::{greedy_colour_matching, ColourMatching, EdgeColouring};
pub use interval::{interval_matching_experiment, sum_interval, INTERVAL_MAX_N};
pub use report::{ConstructionReport, GuaranteeCheck};
pub use sparse::{sparse_from_dense, SparseMatching, SparseStats};
pub use triangles::{triangle_family, TRIANGLE_MAX_M};
