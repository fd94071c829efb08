use num_traits::{One, Zero};

use moduli_core::arith::rational::{factorial, int};
use moduli_core::partitions::partitions_of;
use moduli_core::scalar::Ring;
use moduli_core::symfunc::{inner_product, jack, jack_monomial_matrix, monomial_to_power, PowerSum};
use moduli_core::{AlphaFn, Partition, Rational};

fn alpha() -> AlphaFn {
    AlphaFn::var()
}

fn scalar(n: i64) -> AlphaFn {
    AlphaFn::from_rational(int(n))
}

/// Laplace–Beltrami operator written in power sums:
/// `α/2 Σ ij p_{i+j} ∂_i ∂_j + 1/2 Σ (i+j) p_i p_j ∂_{i+j} + (α-1)/2 Σ i(i-1) p_i ∂_i`.
fn laplace_beltrami(f: &PowerSum<AlphaFn>) -> PowerSum<AlphaFn> {
    let mut out = PowerSum::zero();
    for (mu, c) in f.terms() {
        let parts = mu.parts();
        for a in 0..parts.len() {
            for b in a + 1..parts.len() {
                let mut rest: Vec<u32> = parts
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != a && k != b)
                    .map(|(_, &p)| p)
                    .collect();
                rest.push(parts[a] + parts[b]);
                let w = alpha() * &scalar(i64::from(parts[a] * parts[b]));
                out.add_term(Partition::from_unsorted(rest), c.clone() * &w);
            }
            let k = parts[a];
            for i in 1..k {
                let mut rest: Vec<u32> = parts
                    .iter()
                    .enumerate()
                    .filter(|&(m, _)| m != a)
                    .map(|(_, &p)| p)
                    .collect();
                rest.push(i);
                rest.push(k - i);
                let w = AlphaFn::from_rational(Rational::new(i64::from(k).into(), 2.into()));
                out.add_term(Partition::from_unsorted(rest), c.clone() * &w);
            }
        }
        let diag: u32 = parts.iter().map(|&k| k * (k - 1)).sum();
        let w = (alpha() - AlphaFn::one()).scale(&Rational::new(i64::from(diag).into(), 2.into()));
        out.add_term(mu.clone(), c.clone() * &w);
    }
    out
}

fn eigenvalue(theta: &Partition) -> AlphaFn {
    let conj: i64 = theta.parts().iter().map(|&p| i64::from(p * (p - 1) / 2)).sum();
    let rows: i64 = theta
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| i as i64 * i64::from(p))
        .sum();
    alpha() * &scalar(conj) - scalar(rows)
}

#[test]
fn jack_functions_are_laplace_beltrami_eigenfunctions() {
    for n in 1..=6 {
        for theta in partitions_of(n) {
            let j = jack(&theta).unwrap();
            let lhs = laplace_beltrami(&j.expansion);
            let rhs = j.expansion.mul_coeff(&eigenvalue(&theta));
            assert_eq!(lhs, rhs, "J{theta}");
        }
    }
}

/// Gaussian elimination on an augmented square system over the α-field.
fn solve(mut rows: Vec<Vec<AlphaFn>>) -> Vec<AlphaFn> {
    let n = rows.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !rows[r][col].is_zero())
            .expect("nonsingular system");
        rows.swap(col, pivot);
        let inv = AlphaFn::one() / &rows[col][col];
        for entry in rows[col].iter_mut() {
            *entry = entry.clone() * &inv;
        }
        for r in 0..n {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for k in col..=n {
                    let sub = rows[col][k].clone() * &f;
                    rows[r][k] = rows[r][k].clone() - sub;
                }
            }
        }
    }
    rows.into_iter().map(|r| r[n].clone()).collect()
}

#[test]
fn one_linear_solve_reproduces_every_jack_function() {
    for n in 1..=5 {
        let to_power = monomial_to_power(n);
        let shapes = to_power.partitions.clone();
        let m_as_p: Vec<PowerSum<AlphaFn>> = shapes
            .iter()
            .map(|mu| {
                PowerSum::from_terms(
                    shapes
                        .iter()
                        .map(|rho| (rho.clone(), AlphaFn::from_rational(to_power.get(mu, rho)))),
                )
            })
            .collect();
        let (table, jack_rows) = jack_monomial_matrix(n).unwrap();
        assert_eq!(table.partitions, shapes);
        for (t, theta) in shapes.iter().enumerate() {
            let unknowns = t + 1;
            let mut system = Vec::with_capacity(unknowns);
            for sigma in 0..t {
                let mut row: Vec<AlphaFn> = (0..unknowns)
                    .map(|mu| inner_product(&m_as_p[mu], &m_as_p[sigma]))
                    .collect();
                row.push(AlphaFn::zero());
                system.push(row);
            }
            let mut norm_row = vec![AlphaFn::zero(); unknowns + 1];
            norm_row[0] = AlphaFn::one();
            norm_row[unknowns] = AlphaFn::from_rational(Rational::from_integer(factorial(u64::from(n))));
            system.push(norm_row);
            let solved = solve(system);
            let expected = &jack_rows[t];
            for (mu, c) in solved.iter().enumerate() {
                assert_eq!(c, &expected[mu], "J{theta} at m{}", shapes[mu]);
            }
            assert!(expected[unknowns..].iter().all(Zero::is_zero), "J{theta}");
        }
    }
}
