use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::partitions::{partitions_of, Partition};
use crate::Rational;

/// Square change-of-basis table indexed by the partitions of one weight.
///
/// Rows and columns follow `partitions` (ascending reverse-lex order, so
/// `(1^n)` is index 0).
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionTable {
    pub partitions: Vec<Partition>,
    pub matrix: Vec<Vec<Rational>>,
}

impl TransitionTable {
    pub fn index_of(&self, mu: &Partition) -> Option<usize> {
        self.partitions.binary_search(mu).ok()
    }

    pub fn get(&self, row: &Partition, col: &Partition) -> Rational {
        match (self.index_of(row), self.index_of(col)) {
            (Some(i), Some(j)) => self.matrix[i][j].clone(),
            _ => Rational::zero(),
        }
    }

    pub fn weight(&self) -> u32 {
        self.partitions.first().map_or(0, Partition::weight)
    }

    pub fn inverse(&self) -> TransitionTable {
        TransitionTable {
            partitions: self.partitions.clone(),
            matrix: invert(&self.matrix),
        }
    }
}

/// `M[λ][μ]` with `p_λ = Σ_μ M[λ][μ] m_μ` over the partitions of `n`.
///
/// The coefficient of `x_1^{μ_1} ⋯ x_k^{μ_k}` in `p_λ` counts the ways to
/// send each part of `λ` to one of the `k = ℓ(μ)` variables so that the
/// parts landing on variable `i` sum to `μ_i`.
pub fn power_to_monomial(n: u32) -> TransitionTable {
    let mut partitions = partitions_of(n);
    partitions.reverse();
    let matrix = partitions
        .iter()
        .map(|lambda| {
            partitions
                .iter()
                .map(|mu| Rational::from_integer(monomial_support_count(lambda, mu).into()))
                .collect()
        })
        .collect();
    TransitionTable { partitions, matrix }
}

/// Inverse table: `m_μ = Σ_ρ M⁻¹[μ][ρ] p_ρ`.
pub fn monomial_to_power(n: u32) -> TransitionTable {
    power_to_monomial(n).inverse()
}

fn monomial_support_count(lambda: &Partition, mu: &Partition) -> u128 {
    fn rec(
        parts: &[u32],
        capacity: &mut Vec<u32>,
        memo: &mut HashMap<(usize, Vec<u32>), u128>,
    ) -> u128 {
        let Some((&first, rest)) = parts.split_first() else {
            return u128::from(capacity.iter().all(|&c| c == 0));
        };
        let key = (parts.len(), capacity.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for i in 0..capacity.len() {
            if capacity[i] >= first {
                capacity[i] -= first;
                total += rec(rest, capacity, memo);
                capacity[i] += first;
            }
        }
        memo.insert(key, total);
        total
    }
    if lambda.weight() != mu.weight() {
        return 0;
    }
    rec(lambda.parts(), &mut mu.parts().to_vec(), &mut HashMap::new())
}

/// Gauss-Jordan inverse over ℚ; panics on a singular matrix.
fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let da = &f * &a[col][j];
                a[r][j] -= da;
                let di = &f * &inv[col][j];
                inv[r][j] -= di;
            }
        }
    }
    inv
}
