//! Coefficient-ring abstraction shared by polynomials, rational functions,
//! power-sum expressions and truncated series.
//!
//! Every ring here is a commutative algebra over the rationals: besides the
//! `num-traits` identities it can be scaled by a [`Rational`]. This is what
//! lets the series logarithm divide by `m` and the Jack construction divide
//! by `n!` regardless of what the coefficients themselves are.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rational;

/// Commutative algebra over ℚ with by-reference arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiply by a rational scalar.
    fn scale(&self, c: &Rational) -> Self;

    /// Image of a rational under the structure map ℚ → Self.
    fn from_rational(c: Rational) -> Self {
        Self::one().scale(&c)
    }

    /// True when the element lies in the image of ℚ.
    fn as_rational(&self) -> Option<Rational>;
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> + for<'a> Div<&'a Self, Output = Self> {
    fn inv(&self) -> Self {
        Self::one() / self
    }
}

impl<T> Field for T where T: Ring + Div<Output = T> + for<'a> Div<&'a T, Output = T> {}

impl Ring for Rational {
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }

    fn from_rational(c: Rational) -> Self {
        c
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// `1 + 1 + ... + 1` (`n` times) in any ring.
pub fn from_int<R: Ring>(n: i64) -> R {
    R::from_rational(Rational::from_integer(n.into()))
}
