//! Exact computation of the parametrized Euler characteristic of moduli
//! spaces of real and complex curves.
//!
//! Three independent routes are provided and cross-checked against each
//! other:
//!
//! * closed Bernoulli-number expressions ([`eulerchar::xi_closed`]),
//! * coefficient extraction from the formal series of `log W`
//!   ([`eulerchar::xi_from_logw`]),
//! * expansion of the parametrized map series through Jack symmetric
//!   functions ([`mapseries`], [`eulerchar::xi_from_maps`]).
//!
//! Brute-force enumerators in [`maporacle`] check the map counts against
//! their combinatorial definitions. All arithmetic is exact.
//!
//! The algebra is generic over the coefficient ring (see [`scalar`]); the
//! aliases below fix the concrete types used throughout.

pub mod arith;
pub mod error;
pub mod eulerchar;
pub mod json;
pub mod mapseries;
pub mod maporacle;
pub mod partitions;
pub mod scalar;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::Partition;

use arith::var;

/// Arbitrary-precision exact rational number.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Dense univariate polynomial over the rationals in the indeterminate `V`.
pub type UniPoly<V> = arith::Poly<Rational, V>;
/// Element of the rational-function field in the Jack parameter α.
pub type AlphaFn = arith::RatFunc<Rational, var::Alpha>;
/// Polynomial in the face marker `x` with coefficients in [`AlphaFn`].
pub type XPoly = arith::Poly<AlphaFn, var::X>;
/// Polynomial in the nonorientability parameter `b`.
pub type BPoly = UniPoly<var::B>;
/// Polynomial in `1/γ`.
pub type GammaPoly = UniPoly<var::InvGamma>;
/// Rational function in `1/γ`, used where powers of γ may still appear.
pub type GammaFn = arith::RatFunc<Rational, var::InvGamma>;
/// Polynomial in `N`.
pub type NPoly = UniPoly<var::N>;
/// Power-sum expression whose coefficients are polynomials in `x` over [`AlphaFn`].
pub type PowerSumExpr = symfunc::PowerSum<XPoly>;
