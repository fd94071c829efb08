use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::var::Indeterminate;
use crate::scalar::{Field, Ring};
use crate::Rational;

/// Dense univariate polynomial with coefficients in `F` and indeterminate `V`.
///
/// Coefficients are indexed by degree with trailing zeros trimmed, so the
/// zero polynomial has an empty coefficient list and structural equality is
/// mathematical equality.
pub struct Poly<F, V> {
    coeffs: Vec<F>,
    var: PhantomData<fn() -> V>,
}

impl<F: Clone, V> Clone for Poly<F, V> {
    fn clone(&self) -> Self {
        Poly {
            coeffs: self.coeffs.clone(),
            var: PhantomData,
        }
    }
}

impl<F: PartialEq, V> PartialEq for Poly<F, V> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<F: Eq, V> Eq for Poly<F, V> {}

impl<F: fmt::Debug, V: Indeterminate> fmt::Debug for Poly<F, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]{:?}", V::NAME, self.coeffs)
    }
}

fn trim<F: Zero>(coeffs: &mut Vec<F>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

impl<F: Ring, V: Indeterminate> Poly<F, V> {
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        trim(&mut coeffs);
        Poly {
            coeffs,
            var: PhantomData,
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, degree: usize) -> Self {
        let mut coeffs = vec![F::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> F {
        self.coeffs.get(degree).cloned().unwrap_or_else(F::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> F {
        self.coeff(0)
    }

    pub fn eval(&self, at: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * at + c)
    }

    pub fn mul_scalar(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from_integer(k.into())))
                .collect(),
        )
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Reinterpret the same coefficient list in another indeterminate.
    pub fn retag<W: Indeterminate>(self) -> Poly<F, W> {
        Poly {
            coeffs: self.coeffs,
            var: PhantomData,
        }
    }

    /// `p(a·w + c)` as a polynomial in the new indeterminate `w`.
    pub fn substitute_affine<W: Indeterminate>(&self, a: &F, c: &F) -> Poly<F, W> {
        let lin = Poly::<F, W>::from_coeffs(vec![c.clone(), a.clone()]);
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, coeff| {
            &(&acc * &lin) + &Poly::constant(coeff.clone())
        })
    }

    pub fn map_coeffs<G: Ring>(&self, f: impl FnMut(&F) -> G) -> Poly<G, V> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field, V: Indeterminate> Poly<F, V> {
    /// Euclidean division; panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.coeffs[dd].inv();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dd].clone() * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let r = std::mem::replace(&mut rem[k + i], F::zero());
                rem[k + i] = r - &(q.clone() * d);
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.inv();
                self.mul_scalar(&inv)
            }
        }
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

impl<F: Ring, V: Indeterminate> Zero for Poly<F, V> {
    fn zero() -> Self {
        Poly {
            coeffs: Vec::new(),
            var: PhantomData,
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Ring, V: Indeterminate> One for Poly<F, V> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Ring, V: Indeterminate> Ring for Poly<F, V> {
    fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    fn from_rational(c: Rational) -> Self {
        Self::constant(F::from_rational(c))
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.is_constant() {
            self.constant_term().as_rational()
        } else {
            None
        }
    }
}

impl<'a, F: Ring, V: Indeterminate> Add<&'a Poly<F, V>> for &'a Poly<F, V> {
    type Output = Poly<F, V>;

    fn add(self, rhs: &'a Poly<F, V>) -> Poly<F, V> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            let a = std::mem::replace(c, F::zero());
            *c = a + s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<'a, F: Ring, V: Indeterminate> Sub<&'a Poly<F, V>> for &'a Poly<F, V> {
    type Output = Poly<F, V>;

    fn sub(self, rhs: &'a Poly<F, V>) -> Poly<F, V> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, F::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            let a = std::mem::replace(c, F::zero());
            *c = a - s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<'a, F: Ring, V: Indeterminate> Mul<&'a Poly<F, V>> for &'a Poly<F, V> {
    type Output = Poly<F, V>;

    fn mul(self, rhs: &'a Poly<F, V>) -> Poly<F, V> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let acc = std::mem::replace(&mut coeffs[i + j], F::zero());
                coeffs[i + j] = acc + &(a.clone() * b);
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<F: Ring, V: Indeterminate> Neg for Poly<F, V> {
    type Output = Self;

    fn neg(self) -> Self {
        Poly::from_coeffs(self.coeffs.into_iter().map(Neg::neg).collect())
    }
}

impl<F: Ring, V: Indeterminate> Neg for &Poly<F, V> {
    type Output = Poly<F, V>;

    fn neg(self) -> Poly<F, V> {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl<F: Ring, V: Indeterminate> $tr<Poly<F, V>> for Poly<F, V> {
            type Output = Poly<F, V>;
            fn $m(self, rhs: Poly<F, V>) -> Poly<F, V> {
                (&self).$m(&rhs)
            }
        }

        impl<'a, F: Ring, V: Indeterminate> $tr<&'a Poly<F, V>> for Poly<F, V> {
            type Output = Poly<F, V>;
            fn $m(self, rhs: &'a Poly<F, V>) -> Poly<F, V> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<F: Field, V: Indeterminate> Div<&Poly<F, V>> for &Poly<F, V> {
    type Output = Poly<F, V>;

    /// Exact division.
    fn div(self, rhs: &Poly<F, V>) -> Poly<F, V> {
        self.exact_div(rhs)
    }
}

impl<F: Ring + fmt::Display, V: Indeterminate> fmt::Display for Poly<F, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let power = match d {
                0 => String::new(),
                1 => V::NAME.to_string(),
                _ => format!("{}^{}", V::NAME, d),
            };
            let compound = cs[1..].contains(['+', '-', ' ']) || cs.contains('/') && d > 0;
            let term = if d == 0 {
                cs
            } else if cs == "1" {
                power
            } else if cs == "-1" {
                format!("-{power}")
            } else if compound {
                format!("({cs})*{power}")
            } else {
                format!("{cs}*{power}")
            };
            terms.push(term);
        }
        write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
    }
}
