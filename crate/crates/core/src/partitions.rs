//! Integer partitions, the reverse-lexicographic order and the scalars
//! attached to a partition.

use std::cmp::Ordering;
use std::fmt;

use num_traits::One;

use crate::arith::rational::factorial;
use crate::{Error, Integer, Result};

/// A weakly decreasing list of positive parts.
///
/// The derived order compares weight first and then the part lists
/// lexicographically. Inside one weight this is reverse-lexicographic order:
/// `λ > μ` iff `λ` has the larger part at the first index where they differ,
/// so `(1^n)` is the smallest partition of `n` and `(n)` the largest.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    weight: u32,
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "{parts:?} is not a weakly decreasing list of positive integers"
            )));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    fn from_sorted(parts: Vec<u32>) -> Self {
        Partition {
            weight: parts.iter().sum(),
            parts,
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `(k, k, ..., k)` with `count` parts.
    pub fn rectangle(k: u32, count: usize) -> Self {
        Self::from_sorted(vec![k; count])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Union of the part multisets.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    /// Reverse-lexicographic comparison of part lists padded with zeros.
    pub fn cmp_revlex(&self, other: &Partition) -> Ordering {
        let n = self.len().max(other.len());
        let pad = |p: &Partition, i: usize| p.parts.get(i).copied().unwrap_or(0);
        (0..n)
            .map(|i| pad(self, i).cmp(&pad(other, i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    /// `m_k` = number of parts equal to `k`, for `k = 1..=max part`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0; self.parts.first().copied().unwrap_or(0) as usize];
        for &p in &self.parts {
            m[p as usize - 1] += 1;
        }
        m
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n`, largest first in reverse-lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            prefix.push(first);
            rec(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Centralizer order `z_μ = Π k^{m_k} m_k!`.
pub fn z_of(mu: &Partition) -> Integer {
    mu.multiplicities()
        .iter()
        .enumerate()
        .fold(Integer::one(), |acc, (k, &m)| {
            acc * Integer::from(k + 1).pow(m) * factorial(m.into())
        })
}

/// Vertex distribution `i` with `i_k` = multiplicity of `k` (index `k - 1`).
pub fn vertex_distribution_of(mu: &Partition) -> Vec<u32> {
    mu.multiplicities()
}

/// Inverse of [`vertex_distribution_of`]; trailing zeros are ignored.
pub fn partition_from_vertex_distribution(i: &[u32]) -> Partition {
    let parts = i
        .iter()
        .enumerate()
        .rev()
        .flat_map(|(k, &m)| std::iter::repeat_n(k as u32 + 1, m as usize))
        .collect();
    Partition::from_sorted(parts)
}
