use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::var::Indeterminate;
use crate::scalar::Ring;
use crate::{Error, Rational, Result};

/// Formal power series in `V` truncated after `max_order`, with coefficients
/// in an arbitrary ring. Nothing beyond `max_order` is ever reported.
pub struct TruncatedSeries<C, V> {
    coeffs: Vec<C>,
    var: PhantomData<fn() -> V>,
}

impl<C: Clone, V> Clone for TruncatedSeries<C, V> {
    fn clone(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.clone(),
            var: PhantomData,
        }
    }
}

impl<C: PartialEq, V> PartialEq for TruncatedSeries<C, V> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<C: fmt::Debug, V: Indeterminate> fmt::Debug for TruncatedSeries<C, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{}; O({}^{})]{:?}", V::NAME, V::NAME, self.coeffs.len(), self.coeffs)
    }
}

impl<C: Ring, V: Indeterminate> TruncatedSeries<C, V> {
    /// Coefficients past `max_order` are dropped; missing ones are zero.
    pub fn new(mut coeffs: Vec<C>, max_order: usize) -> Self {
        coeffs.resize(max_order + 1, C::zero());
        TruncatedSeries {
            coeffs,
            var: PhantomData,
        }
    }

    pub fn zero(max_order: usize) -> Self {
        Self::new(Vec::new(), max_order)
    }

    pub fn one(max_order: usize) -> Self {
        Self::new(vec![C::one()], max_order)
    }

    pub fn max_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Option<&C> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl FnMut(&C) -> D) -> TruncatedSeries<D, V> {
        TruncatedSeries::new(self.coeffs.iter().map(f).collect(), self.max_order())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_coeffs(|a| a.scale(c))
    }

    /// Multiply every coefficient by a ring element.
    pub fn mul_coeff(&self, c: &C) -> Self {
        self.map_coeffs(|a| a.clone() * c)
    }

    /// `n·[v^n]` in every degree: the Euler operator `v d/dv`.
    pub fn z_ddz(&self) -> Self {
        TruncatedSeries::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.scale(&Rational::from_integer(n.into())))
                .collect(),
            self.max_order(),
        )
    }

    /// `log(1 + u) = Σ (-1)^{m+1} u^m / m` with `u = self - 1`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm(format!("{:?}", self.coeffs[0])));
        }
        let n = self.max_order();
        let mut u = self.clone();
        u.coeffs[0] = C::zero();
        let mut acc = Self::zero(n);
        let mut power = u.clone();
        for m in 1..=n {
            let c = Rational::new(if m % 2 == 1 { 1 } else { -1 }.into(), m.into());
            acc = &acc + &power.scale(&c);
            if m < n {
                power = &power * &u;
            }
        }
        Ok(acc)
    }

    /// `exp(u) = Σ u^m / m!` for `u` with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstantTerm(format!("{:?}", self.coeffs[0])));
        }
        let n = self.max_order();
        let mut acc = Self::one(n);
        let mut term = Self::one(n);
        for m in 1..=n {
            term = (&term * self).scale(&Rational::new(1.into(), m.into()));
            acc = &acc + &term;
        }
        Ok(acc)
    }
}

impl<'a, C: Ring, V: Indeterminate> Add<&'a TruncatedSeries<C, V>> for &'a TruncatedSeries<C, V> {
    type Output = TruncatedSeries<C, V>;

    fn add(self, rhs: &'a TruncatedSeries<C, V>) -> TruncatedSeries<C, V> {
        let n = self.max_order().min(rhs.max_order());
        TruncatedSeries::new(
            self.coeffs[..=n]
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b)
                .collect(),
            n,
        )
    }
}

impl<'a, C: Ring, V: Indeterminate> Sub<&'a TruncatedSeries<C, V>> for &'a TruncatedSeries<C, V> {
    type Output = TruncatedSeries<C, V>;

    fn sub(self, rhs: &'a TruncatedSeries<C, V>) -> TruncatedSeries<C, V> {
        let n = self.max_order().min(rhs.max_order());
        TruncatedSeries::new(
            self.coeffs[..=n]
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b)
                .collect(),
            n,
        )
    }
}

impl<'a, C: Ring, V: Indeterminate> Mul<&'a TruncatedSeries<C, V>> for &'a TruncatedSeries<C, V> {
    type Output = TruncatedSeries<C, V>;

    fn mul(self, rhs: &'a TruncatedSeries<C, V>) -> TruncatedSeries<C, V> {
        let n = self.max_order().min(rhs.max_order());
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let acc = std::mem::replace(&mut out[i + j], C::zero());
                out[i + j] = acc + &(a.clone() * b);
            }
        }
        TruncatedSeries::new(out, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use crate::arith::var::Z;

    type S = TruncatedSeries<Rational, Z>;

    #[test]
    fn mercator() {
        let s = S::new(vec![int(1), int(1)], 2);
        assert_eq!(s.log().unwrap().coeffs(), &[int(0), int(1), rat(-1, 2)]);
    }

    #[test]
    fn log_of_one_is_zero() {
        assert!(S::one(5).log().unwrap().is_zero());
    }

    #[test]
    fn log_rejects_bad_constant() {
        let s = S::new(vec![int(2), int(1)], 3);
        assert!(matches!(s.log(), Err(Error::NonUnitConstantTerm(_))));
        assert!(matches!(s.exp(), Err(Error::NonZeroConstantTerm(_))));
    }

    #[test]
    fn log_inverts_exp() {
        let z = S::new(vec![int(0), int(1)], 3);
        let e = z.exp().unwrap();
        assert_eq!(e.coeffs(), &[int(1), int(1), rat(1, 2), rat(1, 6)]);
        assert_eq!(e.log().unwrap(), z);
    }

    #[test]
    fn euler_operator() {
        let z = S::new(vec![int(0), int(1)], 3);
        assert_eq!(z.z_ddz(), z);
        let s = S::new(vec![int(0), int(0), int(3)], 3);
        assert_eq!(s.z_ddz().coeffs()[2], int(6));
        let h = S::new((0..=4).map(|n| if n == 0 { int(0) } else { rat(1, n) }).collect(), 4);
        let ones = S::new(vec![int(0), int(1), int(1), int(1), int(1)], 4);
        assert_eq!(h.z_ddz(), ones);
    }

    #[test]
    fn truncation_is_respected() {
        let a = S::new(vec![int(1), int(1), int(1), int(7)], 2);
        assert_eq!(a.max_order(), 2);
        assert!(a.coeff(3).is_none());
        let b = S::new(vec![int(1), int(1)], 4);
        assert_eq!((&a * &b).max_order(), 2);
    }
}
