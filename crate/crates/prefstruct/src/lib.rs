//! Recognition algorithms, structured election rules and distance measures
//! for strict-order preference profiles.
//!
//! The data model lives in [`prefstruct_core`] and is re-exported here.

pub use prefstruct_core::*;

mod error;

pub mod distances;
pub mod euclidean;
pub mod generate;
pub mod io;
pub mod recognition;
pub mod winners;

pub use error::{Error, Result};

/// Exact rational scalar used by the embedding solver.
pub type Rational = num_rational::BigRational;
