use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use super::rational::{binomial, sign};
use super::Poly;
use crate::arith::var::N;
use crate::{NPoly, Rational};

/// Monotone table of Bernoulli numbers `B_0, B_1, ...` with `B_1 = -1/2`.
///
/// Entries are appended with the recurrence `Σ_{k=0}^{n} C(n+1,k) B_k = 0`
/// obtained from `t = (e^t - 1)·B(t)`. Readers share the lock; extension
/// takes the write lock once per growth step.
#[derive(Debug)]
pub struct BernoulliCache {
    table: RwLock<Vec<Rational>>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::from_values(vec![Rational::one()])
    }

    /// A cache pre-seeded with the given leading values. Entries are trusted
    /// as-is, which makes this the hook for fault-injection tests.
    pub fn from_values(values: Vec<Rational>) -> Self {
        let values = if values.is_empty() {
            vec![Rational::one()]
        } else {
            values
        };
        BernoulliCache {
            table: RwLock::new(values),
        }
    }

    pub fn global() -> &'static BernoulliCache {
        static GLOBAL: OnceLock<BernoulliCache> = OnceLock::new();
        GLOBAL.get_or_init(BernoulliCache::new)
    }

    pub fn get(&self, j: u32) -> Rational {
        let j = j as usize;
        if let Some(b) = self.table.read().expect("bernoulli lock").get(j) {
            return b.clone();
        }
        let mut table = self.table.write().expect("bernoulli lock");
        while table.len() <= j {
            let n = table.len() as u64;
            let sum = table
                .iter()
                .enumerate()
                .fold(Rational::zero(), |acc, (k, b)| {
                    acc + Rational::from_integer(binomial(n + 1, k as u64)) * b
                });
            table.push(-sum / Rational::from_integer((n + 1).into()));
        }
        table[j].clone()
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("bernoulli lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `B_j` from the process-wide cache.
pub fn bernoulli(j: u32) -> Rational {
    BernoulliCache::global().get(j)
}

/// The polynomial `S_k(n) = Σ_{j=1}^{n} j^k` from the process-wide cache.
pub fn sum_of_powers_poly(k: u32) -> NPoly {
    BernoulliCache::global().sum_of_powers_poly(k)
}

impl BernoulliCache {
    /// `S_k(n) = Σ_{j=1}^{n} j^k`, of degree `k + 1` with zero constant term,
    /// from its Bernoulli-number expansion
    /// `S_k(n) = 1/(k+1) Σ_{r=1}^{k+1} C(k+1, r) (-1)^{k+1-r} B_{k+1-r} n^r`.
    pub fn sum_of_powers_poly(&self, k: u32) -> NPoly {
        let k1 = u64::from(k) + 1;
        let mut coeffs = vec![Rational::zero(); k1 as usize + 1];
        for r in 1..=k1 {
            let rest = k1 - r;
            coeffs[r as usize] = Rational::from_integer(binomial(k1, r))
                * self.get(rest as u32)
                * sign(rest as i64)
                / Rational::from_integer(k1.into());
        }
        Poly::<Rational, N>::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    #[test]
    fn leading_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn odd_values_vanish() {
        for k in 1..=15 {
            assert!(bernoulli(2 * k + 1).is_zero(), "B_{}", 2 * k + 1);
        }
    }

    #[test]
    fn injected_values_are_served() {
        let cache = BernoulliCache::from_values(vec![int(1), rat(1, 2)]);
        assert_eq!(cache.get(1), rat(1, 2));
        assert_eq!(cache.len(), 2);
    }

    #[test]
    fn sums_of_powers() {
        assert_eq!(sum_of_powers_poly(0).coeffs(), &[int(0), int(1)]);
        assert_eq!(sum_of_powers_poly(1).coeffs(), &[int(0), rat(1, 2), rat(1, 2)]);
        assert_eq!(
            sum_of_powers_poly(3).coeffs(),
            &[int(0), int(0), rat(1, 4), rat(1, 2), rat(1, 4)]
        );
        for k in 0..=6u32 {
            let p = sum_of_powers_poly(k);
            assert_eq!(p.degree(), Some(k as usize + 1));
            for n in 1..=20i64 {
                let direct: i64 = (1..=n).map(|j| j.pow(k)).sum();
                assert_eq!(p.eval(&int(n)), int(direct), "k={k} n={n}");
            }
        }
    }
}
