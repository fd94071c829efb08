use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::Poly;
use crate::partitions::{z_of, Partition};
use crate::scalar::Ring;
use crate::{AlphaFn, Rational};

/// Finite linear combination `Σ c_μ p_μ` of power-sum products.
///
/// Zero coefficients are never stored, and terms may have different
/// weights; [`PowerSum::graded`] extracts one homogeneous component.
#[derive(Clone, PartialEq)]
pub struct PowerSum<C> {
    terms: BTreeMap<Partition, C>,
}

impl<C: Ring> PowerSum<C> {
    pub fn p(mu: Partition) -> Self {
        Self::term(mu, C::one())
    }

    pub fn term(mu: Partition, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mu, c);
        }
        PowerSum { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, C)>) -> Self {
        let mut out = Self::zero();
        for (mu, c) in terms {
            out.add_term(mu, c);
        }
        out
    }

    pub fn add_term(&mut self, mu: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&mu) {
            None => {
                self.terms.insert(mu, c);
            }
            Some(old) => {
                let sum = old + &c;
                if !sum.is_zero() {
                    self.terms.insert(mu, sum);
                }
            }
        }
    }

    pub fn coeff(&self, mu: &Partition) -> C {
        self.terms.get(mu).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms of weight exactly `n`.
    pub fn graded(&self, n: u32) -> Self {
        PowerSum {
            terms: self
                .terms
                .iter()
                .filter(|(mu, _)| mu.weight() == n)
                .map(|(mu, c)| (mu.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous_of(&self, n: u32) -> bool {
        self.terms.keys().all(|mu| mu.weight() == n)
    }

    pub fn map_coeffs<D: Ring>(&self, mut f: impl FnMut(&C) -> D) -> PowerSum<D> {
        PowerSum::from_terms(self.terms.iter().map(|(mu, c)| (mu.clone(), f(c))))
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        self.map_coeffs(|a| a.clone() * c)
    }
}

/// Bilinear product: `p_λ · p_μ = p_{λ ∪ μ}`.
pub fn psum_multiply<C: Ring>(f: &PowerSum<C>, g: &PowerSum<C>) -> PowerSum<C> {
    let mut out = PowerSum::zero();
    for (lambda, a) in &f.terms {
        for (mu, b) in &g.terms {
            out.add_term(lambda.union(mu), a.clone() * b);
        }
    }
    out
}

/// `⟨f, g⟩_α = Σ_μ f_μ g_μ z_μ α^{ℓ(μ)}`.
pub fn inner_product(f: &PowerSum<AlphaFn>, g: &PowerSum<AlphaFn>) -> AlphaFn {
    let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
    let mut acc = AlphaFn::zero();
    for (mu, a) in &small.terms {
        if let Some(b) = large.terms.get(mu) {
            acc = acc + &(a.clone() * b * &power_weight(mu));
        }
    }
    acc
}

/// `⟨p_μ, p_μ⟩_α = z_μ α^{ℓ(μ)}`.
pub fn power_weight(mu: &Partition) -> AlphaFn {
    AlphaFn::from_poly(Poly::monomial(
        Rational::from_integer(z_of(mu)),
        mu.len(),
    ))
}

impl<C: Ring> Zero for PowerSum<C> {
    fn zero() -> Self {
        PowerSum {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for PowerSum<C> {
    fn one() -> Self {
        Self::p(Partition::empty())
    }
}

impl<C: Ring> Ring for PowerSum<C> {
    fn scale(&self, c: &Rational) -> Self {
        self.map_coeffs(|a| a.scale(c))
    }

    fn from_rational(c: Rational) -> Self {
        Self::term(Partition::empty(), C::from_rational(c))
    }

    fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .get(&Partition::empty())
                .and_then(Ring::as_rational),
            _ => None,
        }
    }
}

impl<C: Ring> fmt::Debug for PowerSum<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<C: Ring + fmt::Display> fmt::Display for PowerSum<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(mu, c)| format!("({c})*p{mu}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl<'a, C: Ring> Add<&'a PowerSum<C>> for &'a PowerSum<C> {
    type Output = PowerSum<C>;

    fn add(self, rhs: &'a PowerSum<C>) -> PowerSum<C> {
        let mut out = self.clone();
        for (mu, c) in &rhs.terms {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: Ring> Sub<&'a PowerSum<C>> for &'a PowerSum<C> {
    type Output = PowerSum<C>;

    fn sub(self, rhs: &'a PowerSum<C>) -> PowerSum<C> {
        let mut out = self.clone();
        for (mu, c) in &rhs.terms {
            out.add_term(mu.clone(), -c.clone());
        }
        out
    }
}

impl<'a, C: Ring> Mul<&'a PowerSum<C>> for &'a PowerSum<C> {
    type Output = PowerSum<C>;

    fn mul(self, rhs: &'a PowerSum<C>) -> PowerSum<C> {
        psum_multiply(self, rhs)
    }
}

impl<C: Ring> Neg for PowerSum<C> {
    type Output = Self;

    fn neg(self) -> Self {
        PowerSum {
            terms: self.terms.into_iter().map(|(mu, c)| (mu, -c)).collect(),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl<C: Ring> $tr<PowerSum<C>> for PowerSum<C> {
            type Output = PowerSum<C>;
            fn $m(self, rhs: PowerSum<C>) -> PowerSum<C> {
                (&self).$m(&rhs)
            }
        }

        impl<'a, C: Ring> $tr<&'a PowerSum<C>> for PowerSum<C> {
            type Output = PowerSum<C>;
            fn $m(self, rhs: &'a PowerSum<C>) -> PowerSum<C> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
