use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::var::Indeterminate;
use crate::scalar::{Field, Ring};
use crate::Rational;

/// Rational function `num/den` over a field, kept in canonical form:
/// `gcd(num, den) = 1`, `den` monic, and zero is `0/1`. Equal functions are
/// therefore structurally equal.
pub struct RatFunc<F, V> {
    num: Poly<F, V>,
    den: Poly<F, V>,
}

impl<F: Clone, V> Clone for RatFunc<F, V> {
    fn clone(&self) -> Self {
        RatFunc {
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }
}

impl<F: PartialEq, V> PartialEq for RatFunc<F, V> {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl<F: Eq, V> Eq for RatFunc<F, V> {}

impl<F: fmt::Debug, V: Indeterminate> fmt::Debug for RatFunc<F, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl<F: Field, V: Indeterminate> RatFunc<F, V> {
    /// Panics when `den` is zero.
    pub fn new(num: Poly<F, V>, den: Poly<F, V>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        Self::normalized(num, den)
    }

    /// Make `den` monic; assumes the pair is already coprime.
    fn normalized(num: Poly<F, V>, den: Poly<F, V>) -> Self {
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.inv();
            RatFunc {
                num: num.mul_scalar(&inv),
                den: den.mul_scalar(&inv),
            }
        }
    }

    pub fn from_poly(p: Poly<F, V>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn numer(&self) -> &Poly<F, V> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F, V> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_poly(&self) -> Option<Poly<F, V>> {
        self.is_polynomial().then(|| self.num.clone())
    }

    /// Value at a point, or `None` where the denominator vanishes.
    pub fn eval(&self, at: &F) -> Option<F> {
        let d = self.den.eval(at);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(at) / &d)
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero rational function");
        Self::normalized(self.den.clone(), self.num.clone())
    }
}

impl<F: Field, V: Indeterminate> Zero for RatFunc<F, V> {
    fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field, V: Indeterminate> One for RatFunc<F, V> {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }
}

impl<F: Field, V: Indeterminate> Ring for RatFunc<F, V> {
    fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    fn from_rational(c: Rational) -> Self {
        Self::constant(F::from_rational(c))
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_rational()
        } else {
            None
        }
    }
}

impl<'a, F: Field, V: Indeterminate> Add<&'a RatFunc<F, V>> for &'a RatFunc<F, V> {
    type Output = RatFunc<F, V>;

    fn add(self, rhs: &'a RatFunc<F, V>) -> RatFunc<F, V> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            return if self.den.is_one() {
                RatFunc::from_poly(num)
            } else {
                RatFunc::new(num, self.den.clone())
            };
        }
        let g = self.den.gcd(&rhs.den);
        let (b, d) = if g.is_one() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (self.den.exact_div(&g), rhs.den.exact_div(&g))
        };
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        RatFunc::new(num, &self.den * &d)
    }
}

impl<'a, F: Field, V: Indeterminate> Sub<&'a RatFunc<F, V>> for &'a RatFunc<F, V> {
    type Output = RatFunc<F, V>;

    fn sub(self, rhs: &'a RatFunc<F, V>) -> RatFunc<F, V> {
        self + &(-rhs)
    }
}

impl<'a, F: Field, V: Indeterminate> Mul<&'a RatFunc<F, V>> for &'a RatFunc<F, V> {
    type Output = RatFunc<F, V>;

    fn mul(self, rhs: &'a RatFunc<F, V>) -> RatFunc<F, V> {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel so the product is already coprime
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        RatFunc::normalized(num, den)
    }
}

impl<'a, F: Field, V: Indeterminate> Div<&'a RatFunc<F, V>> for &'a RatFunc<F, V> {
    type Output = RatFunc<F, V>;

    fn div(self, rhs: &'a RatFunc<F, V>) -> RatFunc<F, V> {
        self * &rhs.inv()
    }
}

impl<F: Field, V: Indeterminate> Neg for RatFunc<F, V> {
    type Output = Self;

    fn neg(self) -> Self {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<F: Field, V: Indeterminate> Neg for &RatFunc<F, V> {
    type Output = RatFunc<F, V>;

    fn neg(self) -> RatFunc<F, V> {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl<F: Field, V: Indeterminate> $tr<RatFunc<F, V>> for RatFunc<F, V> {
            type Output = RatFunc<F, V>;
            fn $m(self, rhs: RatFunc<F, V>) -> RatFunc<F, V> {
                (&self).$m(&rhs)
            }
        }

        impl<'a, F: Field, V: Indeterminate> $tr<&'a RatFunc<F, V>> for RatFunc<F, V> {
            type Output = RatFunc<F, V>;
            fn $m(self, rhs: &'a RatFunc<F, V>) -> RatFunc<F, V> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl<F: Field + fmt::Display, V: Indeterminate> fmt::Display for RatFunc<F, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
