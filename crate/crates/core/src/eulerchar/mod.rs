//! The parametrized Euler characteristic `ξ^s_g(γ)` and the Euler
//! characteristics of real and complex moduli spaces derived from it.
//!
//! `ξ` is a polynomial in `u = 1/γ`, stored as [`GammaPoly`](crate::GammaPoly).
//! `γ = 1/2` is `u = 2` and `γ = 1` is `u = 1`.

mod chi;
mod logw;
mod xi;

pub use chi::{
    chi_complex, chi_fixed_curves, chi_real, chi_real_from_lambda, ChiValue, ChiVariant,
};
pub use logw::{logw_series, xi_from_logw, LogWSeries};
pub use xi::{lambda_closed, lambda_values, xi_closed, xi_from_maps, LambdaValues};

use crate::{Error, Result};

pub(crate) fn require_positive(g: u32, s: u32) -> Result<()> {
    if g == 0 || s == 0 {
        return Err(Error::InvalidInput(format!(
            "g and s must be positive, got g={g}, s={s}"
        )));
    }
    Ok(())
}
