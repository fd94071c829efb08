//! Symmetric functions in the power-sum basis over ℚ(α), Jack functions
//! built from their defining conditions, and the Cauchy identity check.

mod cauchy;
mod jack;
mod psum;
mod transition;

pub use cauchy::{cauchy_check, CauchyReport};
pub use jack::{complete_record, jack, jack_monomial_matrix, jack_weight, JackCache, JackRecord};
pub use psum::{inner_product, power_weight, psum_multiply, PowerSum};
pub use transition::{monomial_to_power, power_to_monomial, TransitionTable};
