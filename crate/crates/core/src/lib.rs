//! Exact computations for sums and products along sparse graphs.
//!
//! * [`arith`]: big-integer and rational primitives, square tests, divisors.
//! * [`graphs`]: labeled graphs, sum/product profiles, lower-bound calculators.
//! * [`constructions`]: explicit labelings with few sums and products.
//! * [`translates`]: sets translated into the perfect squares.
//! * [`elliptic`]: the curve pipeline turning rational points into square
//!   translates and translates into matchings.
//! * [`expander`]: Cayley sum graphs over `ℤ_n` with character-sum certificates.

pub mod arith;
pub mod constructions;
pub mod elliptic;
pub mod error;
pub mod expander;
pub mod fixtures;
pub mod graphs;
pub mod rng;
pub mod serial;
pub mod translates;

pub use arith::{Integer, Rational};
pub use error::{Error, Result};
pub use graphs::{Graph, Labeling, SumProductProfile};
