//! Exact arithmetic: rationals, tagged univariate polynomials, canonical
//! rational functions, truncated formal power series and Bernoulli numbers.

mod bernoulli;
mod poly;
mod ratfunc;
pub mod rational;
mod series;
pub mod var;

pub use bernoulli::{bernoulli, sum_of_powers_poly, BernoulliCache};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use series::TruncatedSeries;
