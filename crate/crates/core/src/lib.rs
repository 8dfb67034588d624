//! Exact neutrosophic algebra, graph analytics, fuzzy relations and
//! cognitive-map inference.
//!
//! A neutrosophic number is `a + bI` over the rationals with `I² = I`.

pub mod cognitive;
pub mod dot;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod model;
pub mod ngraph;
pub mod number;
pub mod relation;

pub use error::{Error, Result};
pub use matrix::{neutro_dimension, Base, NeutroMatrix, RankReport};
pub use number::{NeutroNumber, Rational, SplitPair};
