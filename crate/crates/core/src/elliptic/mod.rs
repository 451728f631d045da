//! Elliptic curves attached to three squares, and the maps between their
//! rational points, translates into the squares, and sparse matchings.

mod curve;
mod height;
mod model;
mod pipeline;

pub use curve::{
    curve_from_ints, CurvePoint, CurveRecord, EllipticCurve, DEFAULT_SCAN_DENOMINATOR, SCAN_MAX_BOUND,
    TORSION_SEARCH_LIMIT,
};
pub use height::{genus_of_system, naive_height};
pub use model::{curve_from_triple, curve_from_values, Degeneracy, PointTranslate, SquareTriple, TripleModel};
pub use pipeline::{clearing_factor, matching_from_family, translate_family_from_curve, CurveFamily, FamilyMatching};
