//! Finite-support Hahn sums and power series with exact rational
//! coefficients.

mod ball;
pub(crate) mod chain;
mod finsupp;
mod hahn;
mod series;

pub use ball::{BallRelation, UltraBall};
pub use chain::{IndexChain, Point};
pub use finsupp::Finsupp;
pub use hahn::{HahnElement, Val};
pub use series::{Exponent, SeriesElement};
