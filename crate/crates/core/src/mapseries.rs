//! The parametrized map series expanded through Jack functions, and the
//! refined map counts read off from it.
//!
//! The series is
//!
//! ```text
//! M = 2α · z d/dz log Σ_θ z^{|θ|/2} J_θ(y) J_θ(1_N) [p_2^{|θ|/2}]J_θ / ⟨J_θ, J_θ⟩_α
//! ```
//!
//! with `α = 1/γ = b + 1`. The `y` alphabet is never materialized: a term
//! `p_μ(y)` stands for the monomial `y^i` where `i` is the vertex
//! distribution of `μ`. `N` is carried as the polynomial variable `x`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arith::rational::format;
use crate::arith::var::{B, Z};
use crate::arith::TruncatedSeries;
use crate::json::ToJson;
use crate::partitions::{partition_from_vertex_distribution, vertex_distribution_of, Partition};
use crate::scalar::Ring;
use crate::symfunc::{JackCache, PowerSum};
use crate::{AlphaFn, BPoly, Error, PowerSumExpr, Rational, Result, XPoly};

/// Truncated `z`-series whose coefficients are power-sum expressions in `y`.
pub type MapSeries = TruncatedSeries<PowerSumExpr, Z>;

/// Largest edge count accepted without an explicit override.
pub const MAX_SUPPORTED_EDGES: u32 = 5;

/// Vertex distribution, face count and edge count of a rooted map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MapKey {
    i: Vec<u32>,
    pub j: u32,
    pub n: u32,
}

impl MapKey {
    pub fn new(i: Vec<u32>, j: u32, n: u32) -> Result<Self> {
        let mut i = i;
        while i.last() == Some(&0) {
            i.pop();
        }
        let valence: u32 = i.iter().enumerate().map(|(k, &c)| (k as u32 + 1) * c).sum();
        if valence != 2 * n {
            return Err(Error::InvalidInput(format!(
                "vertex distribution {i:?} has total valence {valence}, expected {}",
                2 * n
            )));
        }
        if j == 0 || j > n + 1 {
            return Err(Error::InvalidInput(format!(
                "face count {j} outside 1..={}",
                n + 1
            )));
        }
        Ok(MapKey { i, j, n })
    }

    pub fn from_partition(mu: &Partition, j: u32, n: u32) -> Result<Self> {
        Self::new(vertex_distribution_of(mu), j, n)
    }

    /// `i_k` at index `k - 1`, trailing zeros trimmed.
    pub fn i(&self) -> &[u32] {
        &self.i
    }

    /// Valence multiset as a partition of `2n`.
    pub fn partition(&self) -> Partition {
        partition_from_vertex_distribution(&self.i)
    }

    pub fn vertex_count(&self) -> u32 {
        self.i.iter().sum()
    }

    /// Count of valence-`k` vertices.
    pub fn valence_count(&self, k: usize) -> u32 {
        k.checked_sub(1)
            .and_then(|idx| self.i.get(idx))
            .copied()
            .unwrap_or(0)
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        i64::from(self.vertex_count()) - i64::from(self.n) + i64::from(self.j)
    }
}

/// Edge count, then face count, then vertex distribution in ascending
/// reverse-lex order of the valence partition.
impl Ord for MapKey {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.j)
            .cmp(&(other.n, other.j))
            .then_with(|| self.partition().cmp(&other.partition()))
    }
}

impl PartialOrd for MapKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MapKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i: Vec<String> = self.i.iter().map(u32::to_string).collect();
        write!(f, "i=({}), j={}, n={}", i.join(","), self.j, self.n)
    }
}

impl fmt::Debug for MapKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Refined map counts `m(i, j, n)` as polynomials in `b`.
#[derive(Debug, Clone, PartialEq)]
pub struct MapCountTable {
    entries: BTreeMap<MapKey, BPoly>,
    max_n: u32,
}

impl MapCountTable {
    /// Zero polynomials are dropped; keys with `n > max_n` are rejected.
    pub fn from_entries(entries: impl IntoIterator<Item = (MapKey, BPoly)>, max_n: u32) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (k, p) in entries {
            if k.n > max_n {
                return Err(Error::InvalidInput(format!("{k} beyond max_n = {max_n}")));
            }
            if !p.is_zero() {
                out.insert(k, p);
            }
        }
        Ok(MapCountTable {
            entries: out,
            max_n,
        })
    }

    pub fn max_n(&self) -> u32 {
        self.max_n
    }

    pub fn get(&self, key: &MapKey) -> Option<&BPoly> {
        self.entries.get(key)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&MapKey, &BPoly)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Rows `{i, j, n, poly}` in table order.
    pub fn to_json_rows(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|(k, p)| json!({"i": k.i(), "j": k.j, "n": k.n, "poly": p.to_json()}))
                .collect(),
        )
    }
}

/// `Σ_θ z^{|θ|/2} J_θ(y) J_θ(1_N) [p_2^{|θ|/2}]J_θ / ⟨J_θ, J_θ⟩` through `z^max_n`.
pub fn jack_partition_sum(max_n: u32) -> Result<MapSeries> {
    if max_n == 0 {
        return Err(Error::InvalidInput("max_n must be at least 1".into()));
    }
    let cache = JackCache::global();
    let weights = cache.weights_up_to(2 * max_n)?;
    let coeffs: Vec<PowerSumExpr> = (0..=max_n as usize)
        .into_par_iter()
        .map(|n| {
            let mut acc = PowerSumExpr::zero();
            for rec in weights[2 * n].iter() {
                if rec.p2coeff.is_zero() {
                    continue;
                }
                let weight = rec.principal.mul_scalar(&(&rec.p2coeff / &rec.norm));
                acc = acc + &rec.expansion.map_coeffs(|c| weight.mul_scalar(c));
            }
            acc
        })
        .collect();
    Ok(TruncatedSeries::new(coeffs, max_n as usize))
}

/// `M = 2α · z d/dz log(jack_partition_sum)`.
pub fn map_series(max_n: u32) -> Result<MapSeries> {
    let z = jack_partition_sum(max_n)?;
    let two_alpha = XPoly::constant(AlphaFn::var().scale(&Rational::from_integer(2.into())));
    Ok(z
        .log()?
        .z_ddz()
        .map_coeffs(|c| c.map_coeffs(|p| &two_alpha * p)))
}

/// Read `m(i, j, n)` off the series: `[z^n p_μ(y) x^j]` with `α = b + 1`.
///
/// Every coefficient must be a polynomial in α whose `b`-expansion has
/// integer coefficients; anything else aborts with the offending key.
pub fn extract_map_counts(series: &MapSeries) -> Result<MapCountTable> {
    let max_n = series.max_order() as u32;
    let one = Rational::one();
    let mut entries = BTreeMap::new();
    for (n, coeff) in series.coeffs().iter().enumerate().skip(1) {
        let n = n as u32;
        for (mu, xpoly) in coeff.terms() {
            for (j, afn) in xpoly.coeffs().iter().enumerate() {
                if afn.is_zero() {
                    continue;
                }
                let key = MapKey::from_partition(mu, j as u32, n)?;
                let Some(alpha_poly) = afn.to_poly() else {
                    return Err(Error::NonPolynomialCoefficient {
                        key: key.to_string(),
                        value: afn.to_string(),
                    });
                };
                let bpoly: BPoly = alpha_poly.substitute_affine::<B>(&one, &one);
                if bpoly.coeffs().iter().any(|c| !c.is_integer()) {
                    return Err(Error::NonIntegralCoefficient {
                        key: key.to_string(),
                        value: bpoly.to_string(),
                    });
                }
                entries.insert(key, bpoly);
            }
        }
    }
    MapCountTable::from_entries(entries, max_n)
}

/// [`map_series`] followed by [`extract_map_counts`].
pub fn map_count_table(max_n: u32) -> Result<MapCountTable> {
    extract_map_counts(&map_series(max_n)?)
}

/// Pointwise evaluation at a value of `b`; `b = 0` gives orientable counts
/// and `b = 1` counts on all surfaces.
pub fn specialize_counts(table: &MapCountTable, b: &Rational) -> BTreeMap<MapKey, Rational> {
    table
        .entries()
        .map(|(k, p)| (k.clone(), p.eval(b)))
        .collect()
}

/// Entries with a negative `b`-coefficient.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct NonnegReport {
    pub violations: Vec<(MapKey, BPoly)>,
}

impl NonnegReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for NonnegReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in &self.violations {
            writeln!(f, "negative coefficient at {k}: {p}")?;
        }
        Ok(())
    }
}

pub fn nonneg_report(table: &MapCountTable) -> NonnegReport {
    NonnegReport {
        violations: table
            .entries()
            .filter(|(_, p)| p.coeffs().iter().any(|c| c < &Rational::zero()))
            .map(|(k, p)| (k.clone(), p.clone()))
            .collect(),
    }
}

/// The `p_μ(y) x^j` coefficients of one `z`-power, for display.
pub fn describe_coefficient(c: &PowerSum<XPoly>) -> Vec<(Partition, usize, String)> {
    let mut out = Vec::new();
    for (mu, xp) in c.terms() {
        for (j, a) in xp.coeffs().iter().enumerate() {
            if !a.is_zero() {
                out.push((mu.clone(), j, a.to_string()));
            }
        }
    }
    out
}

#[doc(hidden)]
pub fn format_bpoly(p: &BPoly) -> String {
    p.coeffs().iter().map(format).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    fn bpoly(cs: &[i64]) -> BPoly {
        BPoly::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    fn key(i: &[u32], j: u32, n: u32) -> MapKey {
        MapKey::new(i.to_vec(), j, n).unwrap()
    }

    #[test]
    fn key_validation() {
        assert!(MapKey::new(vec![0, 1], 1, 1).is_ok());
        assert!(MapKey::new(vec![1, 1], 1, 1).is_err());
        assert!(MapKey::new(vec![0, 1], 3, 1).is_err());
        assert_eq!(key(&[0, 1, 0, 0], 2, 1).i(), &[0, 1]);
        assert_eq!(key(&[0, 0, 0, 1], 1, 2).partition(), Partition::new(vec![4]).unwrap());
    }

    #[test]
    fn key_order_follows_table_layout() {
        let mut keys = vec![key(&[0, 0, 0, 1], 1, 2), key(&[1, 0, 1], 1, 2), key(&[2, 1], 1, 2), key(&[0, 2], 1, 2)];
        keys.sort();
        let order: Vec<Vec<u32>> = keys.iter().map(|k| k.i().to_vec()).collect();
        assert_eq!(order, vec![vec![2, 1], vec![0, 2], vec![1, 0, 1], vec![0, 0, 0, 1]]);
    }

    #[test]
    fn specialization_and_report() {
        let table = MapCountTable::from_entries(
            [(key(&[0, 0, 0, 1], 1, 2), bpoly(&[1, 1, 3])), (key(&[0, 1], 1, 1), bpoly(&[0, 1]))],
            2,
        )
        .unwrap();
        let at0 = specialize_counts(&table, &int(0));
        let at1 = specialize_counts(&table, &int(1));
        assert_eq!(at0[&key(&[0, 0, 0, 1], 1, 2)], int(1));
        assert_eq!(at1[&key(&[0, 0, 0, 1], 1, 2)], int(5));
        assert!(nonneg_report(&table).is_empty());

        let empty = MapCountTable::from_entries([], 3).unwrap();
        assert!(specialize_counts(&empty, &int(1)).is_empty());

        let bad = MapCountTable::from_entries([(key(&[0, 1], 1, 1), bpoly(&[1, -1]))], 1).unwrap();
        let report = nonneg_report(&bad);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.to_string().lines().count(), 1);
    }

    #[test]
    fn first_order_of_the_jack_sum() {
        let z = jack_partition_sum(1).unwrap();
        assert_eq!(z.coeff(0).unwrap(), &PowerSumExpr::one());
        let c1 = z.coeff(1).unwrap();
        let a = AlphaFn::var();
        let half_inv_alpha = AlphaFn::one().scale(&crate::arith::rational::rat(1, 2)) / &a;
        // x/(2α) p_(1,1) + x(x + α - 1)/(2α) p_(2)
        let p11 = XPoly::from_coeffs(vec![AlphaFn::zero(), half_inv_alpha.clone()]);
        let p2 = XPoly::from_coeffs(vec![
            AlphaFn::zero(),
            &(&a - &AlphaFn::one()) * &half_inv_alpha,
            half_inv_alpha,
        ]);
        assert_eq!(c1.coeff(&Partition::new(vec![1, 1]).unwrap()), p11);
        assert_eq!(c1.coeff(&Partition::new(vec![2]).unwrap()), p2);
        assert_eq!(c1.len(), 2);
    }

    #[test]
    fn first_order_of_the_map_series() {
        let m = map_series(1).unwrap();
        assert!(m.coeff(0).unwrap().is_zero());
        let c1 = m.coeff(1).unwrap();
        let a = AlphaFn::var();
        assert_eq!(c1.coeff(&Partition::new(vec![1, 1]).unwrap()), XPoly::var());
        assert_eq!(
            c1.coeff(&Partition::new(vec![2]).unwrap()),
            XPoly::from_coeffs(vec![AlphaFn::zero(), &a - &AlphaFn::one(), AlphaFn::one()])
        );
    }
}
