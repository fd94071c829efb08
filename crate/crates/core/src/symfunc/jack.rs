use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;
use rayon::prelude::*;

use super::psum::{inner_product, PowerSum};
use super::transition::{monomial_to_power, power_to_monomial, TransitionTable};
use crate::arith::Poly;
use crate::partitions::Partition;
use crate::scalar::Ring;
use crate::{AlphaFn, Error, Result, XPoly};

/// A Jack symmetric function `J_θ(·; α)` together with the quantities the
/// map series needs from it.
#[derive(Debug, Clone, PartialEq)]
pub struct JackRecord {
    pub shape: Partition,
    /// Power-sum expansion, homogeneous of weight `|θ|`.
    pub expansion: PowerSum<AlphaFn>,
    /// `⟨J_θ, J_θ⟩_α`.
    pub norm: AlphaFn,
    /// `J_θ(1_N; α)` with `N` replaced by the indeterminate `x`.
    pub principal: XPoly,
    /// `[p_2^{|θ|/2}] J_θ`, zero for odd weight.
    pub p2coeff: AlphaFn,
}

impl JackRecord {
    /// Monomial expansion `[m_μ] J_θ` for every `μ ⊢ |θ|`, in the order of
    /// `table.partitions`.
    pub fn monomial_coefficients(&self, table: &TransitionTable) -> Vec<AlphaFn> {
        table
            .partitions
            .iter()
            .map(|mu| {
                self.expansion.terms().fold(AlphaFn::zero(), |acc, (rho, c)| {
                    let m = table.get(rho, mu);
                    if m.is_zero() {
                        acc
                    } else {
                        acc + &c.scale(&m)
                    }
                })
            })
            .collect()
    }

    /// Power-sum coefficients that are not polynomials in α. Expected empty.
    pub fn nonpolynomial_coefficients(&self) -> Vec<(Partition, AlphaFn)> {
        self.expansion
            .terms()
            .filter(|(_, c)| !c.is_polynomial())
            .map(|(mu, c)| (mu.clone(), c.clone()))
            .collect()
    }
}

/// Every Jack function of weight `n`, in ascending reverse-lex order of shape.
///
/// `J_θ` lies in the span of `m_μ` for `μ ⪯ θ` and is orthogonal to every
/// earlier `J_σ`; since the earlier functions span exactly the `m_μ` with
/// `μ ≺ θ`, this is one projection step per predecessor. The result is then
/// scaled so that `[m_{1^n}] J_θ = n!`, which in the power-sum basis means
/// `[p_{1^n}] J_θ = 1`.
pub fn jack_weight(n: u32) -> Result<Vec<JackRecord>> {
    let to_power = monomial_to_power(n);
    let shapes = to_power.partitions.clone();
    let one_n = Partition::rectangle(1, n as usize);
    let mut records: Vec<JackRecord> = Vec::with_capacity(shapes.len());
    for (k, theta) in shapes.iter().enumerate() {
        let m_theta = PowerSum::from_terms(
            shapes
                .iter()
                .zip(&to_power.matrix[k])
                .map(|(rho, c)| (rho.clone(), AlphaFn::from_rational(c.clone()))),
        );
        let mut v = m_theta.clone();
        for prev in &records {
            let c = inner_product(&m_theta, &prev.expansion) / &prev.norm;
            if !c.is_zero() {
                v = &v - &prev.expansion.mul_coeff(&c);
            }
        }
        let lead = v.coeff(&one_n);
        if lead.is_zero() {
            return Err(Error::SingularJackSystem {
                shape: theta.to_string(),
                detail: "projection has no (1^n) component".into(),
            });
        }
        let expansion = v.mul_coeff(&lead.inv());
        let record = complete_record(theta.clone(), expansion)?;
        for (mu, c) in record.nonpolynomial_coefficients() {
            log::warn!("J{theta}: coefficient of p{mu} is not polynomial in alpha: {c}");
        }
        records.push(record);
    }
    Ok(records)
}

/// Fill in norm, principal specialization and `p_2` coefficient.
pub fn complete_record(shape: Partition, expansion: PowerSum<AlphaFn>) -> Result<JackRecord> {
    let norm = inner_product(&expansion, &expansion);
    if norm.is_zero() {
        return Err(Error::SingularJackSystem {
            shape: shape.to_string(),
            detail: "zero norm".into(),
        });
    }
    let mut principal = XPoly::zero();
    for (rho, c) in expansion.terms() {
        principal = principal + &Poly::monomial(c.clone(), rho.len());
    }
    let n = shape.weight();
    let p2coeff = if n % 2 == 0 {
        expansion.coeff(&Partition::rectangle(2, n as usize / 2))
    } else {
        AlphaFn::zero()
    };
    Ok(JackRecord {
        shape,
        expansion,
        norm,
        principal,
        p2coeff,
    })
}

/// Process-wide cache of Jack records keyed by weight.
///
/// Weight is the eviction unit because a weight is also the unit of work.
#[derive(Debug, Default)]
pub struct JackCache {
    weights: RwLock<BTreeMap<u32, Arc<Vec<JackRecord>>>>,
}

impl JackCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static JackCache {
        static GLOBAL: OnceLock<JackCache> = OnceLock::new();
        GLOBAL.get_or_init(JackCache::new)
    }

    pub fn weight(&self, n: u32) -> Result<Arc<Vec<JackRecord>>> {
        if let Some(w) = self.weights.read().expect("jack cache lock").get(&n) {
            return Ok(Arc::clone(w));
        }
        let computed = Arc::new(jack_weight(n)?);
        let mut map = self.weights.write().expect("jack cache lock");
        Ok(Arc::clone(map.entry(n).or_insert(computed)))
    }

    /// All weights `0..=max`, computing missing ones in parallel.
    pub fn weights_up_to(&self, max: u32) -> Result<Vec<Arc<Vec<JackRecord>>>> {
        (0..=max)
            .into_par_iter()
            .map(|n| self.weight(n))
            .collect()
    }

    pub fn jack(&self, shape: &Partition) -> Result<JackRecord> {
        let records = self.weight(shape.weight())?;
        Ok(records
            .iter()
            .find(|r| &r.shape == shape)
            .expect("every partition of the weight has a record")
            .clone())
    }

    pub fn evict_weight(&self, n: u32) {
        self.weights.write().expect("jack cache lock").remove(&n);
    }

    pub fn evict_above(&self, n: u32) {
        self.weights
            .write()
            .expect("jack cache lock")
            .retain(|&w, _| w <= n);
    }

    pub fn cached_weights(&self) -> Vec<u32> {
        self.weights
            .read()
            .expect("jack cache lock")
            .keys()
            .copied()
            .collect()
    }
}

/// `J_θ` from the process-wide cache.
pub fn jack(shape: &Partition) -> Result<JackRecord> {
    JackCache::global().jack(shape)
}

/// Table of `[m_μ] J_θ` for every pair of partitions of `n`; rows are shapes.
pub fn jack_monomial_matrix(n: u32) -> Result<(TransitionTable, Vec<Vec<AlphaFn>>)> {
    let table = power_to_monomial(n);
    let records = JackCache::global().weight(n)?;
    let rows = records
        .iter()
        .map(|r| r.monomial_coefficients(&table))
        .collect();
    Ok((table, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;
    use crate::UniPoly;
    use num_traits::One;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn alpha_poly(cs: &[i64]) -> AlphaFn {
        AlphaFn::from_poly(UniPoly::from_coeffs(cs.iter().map(|&c| int(c)).collect()))
    }

    #[test]
    fn weight_one() {
        let j = jack(&part(&[1])).unwrap();
        assert_eq!(j.expansion, PowerSum::p(part(&[1])));
        assert_eq!(j.norm, alpha_poly(&[0, 1]));
        assert_eq!(j.principal, XPoly::var());
        assert!(j.p2coeff.is_zero());
    }

    #[test]
    fn weight_two() {
        let j2 = jack(&part(&[2])).unwrap();
        let expected = PowerSum::from_terms([
            (part(&[1, 1]), AlphaFn::one()),
            (part(&[2]), alpha_poly(&[0, 1])),
        ]);
        assert_eq!(j2.expansion, expected);
        // 2α²(1+α)
        assert_eq!(j2.norm, alpha_poly(&[0, 0, 2, 2]));
        assert_eq!(
            j2.principal,
            XPoly::from_coeffs(vec![AlphaFn::zero(), alpha_poly(&[0, 1]), AlphaFn::one()])
        );
        assert_eq!(j2.p2coeff, alpha_poly(&[0, 1]));

        let j11 = jack(&part(&[1, 1])).unwrap();
        let expected = PowerSum::from_terms([
            (part(&[1, 1]), AlphaFn::one()),
            (part(&[2]), alpha_poly(&[-1])),
        ]);
        assert_eq!(j11.expansion, expected);
        assert_eq!(j11.norm, alpha_poly(&[0, 2, 2]));
        assert_eq!(
            j11.principal,
            XPoly::from_coeffs(vec![AlphaFn::zero(), alpha_poly(&[-1]), AlphaFn::one()])
        );
        assert_eq!(j11.p2coeff, alpha_poly(&[-1]));
    }

    #[test]
    fn records_are_homogeneous_and_polynomial() {
        for n in 0..=5 {
            for r in JackCache::global().weight(n).unwrap().iter() {
                assert!(r.expansion.is_homogeneous_of(n));
                assert!(r.nonpolynomial_coefficients().is_empty());
                if n % 2 == 1 {
                    assert!(r.p2coeff.is_zero());
                }
            }
        }
    }

    #[test]
    fn cache_eviction() {
        let cache = JackCache::new();
        cache.weights_up_to(3).unwrap();
        assert_eq!(cache.cached_weights(), vec![0, 1, 2, 3]);
        cache.evict_weight(1);
        cache.evict_above(2);
        assert_eq!(cache.cached_weights(), vec![0, 2]);
    }
}
