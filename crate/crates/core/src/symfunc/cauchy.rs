use std::fmt;

use num_traits::{One, Zero};

use super::jack::JackCache;
use super::transition::power_to_monomial;
use crate::partitions::Partition;
use crate::scalar::Ring;
use crate::{AlphaFn, Rational, Result};

/// Outcome of comparing both sides of the Cauchy identity in one degree.
#[derive(Debug, Clone, PartialEq)]
pub struct CauchyReport {
    pub degree: u32,
    pub num_vars: usize,
    /// Number of `m_λ(x) m_μ(y)` coefficients compared.
    pub compared: usize,
    /// `(λ, μ, product side, Jack side)` for the first mismatch.
    pub first_discrepancy: Option<(Partition, Partition, AlphaFn, AlphaFn)>,
}

impl CauchyReport {
    pub fn passed(&self) -> bool {
        self.first_discrepancy.is_none()
    }
}

impl fmt::Display for CauchyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_discrepancy {
            None => write!(
                f,
                "cauchy degree {} in {} variables: pass ({} coefficients)",
                self.degree, self.num_vars, self.compared
            ),
            Some((l, m, lhs, rhs)) => write!(
                f,
                "cauchy degree {} in {} variables: FAIL at m{l}(x) m{m}(y): product gives {lhs}, Jack sum gives {rhs}",
                self.degree, self.num_vars
            ),
        }
    }
}

/// Check `Π(1 - x_i y_j)^{-1/α} = Σ_θ J_θ(x) J_θ(y) / ⟨J_θ, J_θ⟩_α` in degree
/// `n` with `num_vars` variables on each side, coefficient by coefficient in
/// the monomial ⊗ monomial basis.
///
/// The exponent `-1/α` is forced by the inner product: at `α = 1` this is
/// the classical Schur identity. The product side's coefficient of
/// `x^λ y^μ` is a sum over nonnegative integer matrices with row sums `λ`
/// and column sums `μ`, each entry `a` weighted by `(1/α)^{(a)} / a!`.
pub fn cauchy_check(n: u32, num_vars: usize) -> Result<CauchyReport> {
    let table = power_to_monomial(n);
    let records = JackCache::global().weight(n)?;
    let monomials: Vec<Vec<AlphaFn>> = records
        .iter()
        .map(|r| r.monomial_coefficients(&table))
        .collect();
    let visible: Vec<usize> = (0..table.partitions.len())
        .filter(|&i| table.partitions[i].len() <= num_vars)
        .collect();
    let weights = entry_weights(n);
    let mut compared = 0;
    for &a in &visible {
        for &b in &visible {
            let lambda = &table.partitions[a];
            let mu = &table.partitions[b];
            let lhs = contingency_sum(lambda.parts(), mu.parts(), &weights);
            let mut rhs = AlphaFn::zero();
            for (rec, row) in records.iter().zip(&monomials) {
                if row[a].is_zero() || row[b].is_zero() {
                    continue;
                }
                rhs = rhs + &(row[a].clone() * &row[b] / &rec.norm);
            }
            compared += 1;
            if rhs != lhs {
                return Ok(CauchyReport {
                    degree: n,
                    num_vars,
                    compared,
                    first_discrepancy: Some((lambda.clone(), mu.clone(), lhs, rhs)),
                });
            }
        }
    }
    Ok(CauchyReport {
        degree: n,
        num_vars,
        compared,
        first_discrepancy: None,
    })
}

/// `(1/α)^{(a)} / a!` for `a = 0..=n`.
fn entry_weights(n: u32) -> Vec<AlphaFn> {
    let inv_alpha = AlphaFn::var().inv();
    let mut out = vec![AlphaFn::one()];
    for a in 1..=n {
        let step = (&inv_alpha + &AlphaFn::from_rational(Rational::from_integer((a - 1).into())))
            .scale(&Rational::new(1.into(), a.into()));
        let next = out[a as usize - 1].clone() * &step;
        out.push(next);
    }
    out
}

/// Weighted sum over nonnegative integer matrices with the given row and
/// column sums; each entry `a` contributes the factor `weights[a]`.
fn contingency_sum(rows: &[u32], cols: &[u32], weights: &[AlphaFn]) -> AlphaFn {
    fn fill_row(
        rows: &[u32],
        remaining_in_row: u32,
        col: usize,
        cols: &mut Vec<u32>,
        weights: &[AlphaFn],
    ) -> AlphaFn {
        if col == cols.len() {
            return if remaining_in_row == 0 {
                next_row(rows, cols, weights)
            } else {
                AlphaFn::zero()
            };
        }
        let mut total = AlphaFn::zero();
        for v in 0..=remaining_in_row.min(cols[col]) {
            cols[col] -= v;
            let rest = fill_row(rows, remaining_in_row - v, col + 1, cols, weights);
            cols[col] += v;
            if !rest.is_zero() {
                total = total + &(rest * &weights[v as usize]);
            }
        }
        total
    }
    fn next_row(rows: &[u32], cols: &mut Vec<u32>, weights: &[AlphaFn]) -> AlphaFn {
        match rows.split_first() {
            None if cols.iter().all(|&c| c == 0) => AlphaFn::one(),
            None => AlphaFn::zero(),
            Some((&r, rest)) => fill_row(rest, r, 0, cols, weights),
        }
    }
    next_row(rows, &mut cols.to_vec(), weights)
}
