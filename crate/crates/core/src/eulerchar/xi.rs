use num_traits::{One, Zero};

use crate::arith::bernoulli;
use crate::arith::rational::{binomial, factorial, format, int, pow, sign};
use crate::arith::var::InvGamma;
use crate::mapseries::MapCountTable;
use crate::{Error, GammaPoly, Rational, Result};

use super::require_positive;

fn r(n: impl Into<num_bigint::BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn fact(n: u32) -> Rational {
    r(factorial(u64::from(n)))
}

/// Closed Bernoulli form of `ξ^s_g` as a polynomial in `u = 1/γ`.
///
/// Even `g`: `(g+s-2)!/g! (-1)^s B_g/2 (u^g - u)`.
/// Odd `g`: `(g+s-2)! (-1)^{s+1}/(g+1)! ((g+1) B_g u^g + Σ_r C(g+1,r) B_{g+1-r} B_r u^r)`.
pub fn xi_closed(g: u32, s: u32) -> Result<GammaPoly> {
    require_positive(g, s)?;
    let gi = g as usize;
    let mut coeffs = vec![Rational::zero(); gi + 2];
    if g % 2 == 0 {
        let c = fact(g + s - 2) / fact(g) * sign(i64::from(s)) * bernoulli(g) / int(2);
        coeffs[gi] += &c;
        coeffs[1] -= &c;
    } else {
        let pre = fact(g + s - 2) * sign(i64::from(s) + 1) / fact(g + 1);
        coeffs[gi] += &pre * r(g + 1) * bernoulli(g);
        for k in 0..=g + 1 {
            let v = r(binomial(u64::from(g) + 1, u64::from(k))) * bernoulli(g + 1 - k) * bernoulli(k);
            coeffs[k as usize] += &pre * v;
        }
    }
    Ok(GammaPoly::from_coeffs(coeffs))
}

/// `(Λ^s_g, Λ^{s,O}, Λ^{s,N})`: ξ at `γ = 1/2`, at `γ = 1`, and their difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaValues {
    pub lambda: Rational,
    pub orientable: Rational,
    pub nonorientable: Rational,
}

impl LambdaValues {
    pub fn from_total_and_orientable(lambda: Rational, orientable: Rational) -> Self {
        let nonorientable = &lambda - &orientable;
        LambdaValues {
            lambda,
            orientable,
            nonorientable,
        }
    }
}

/// Evaluate [`xi_closed`] at `u = 2` and `u = 1`, then cross-check both
/// against [`lambda_closed`].
pub fn lambda_values(g: u32, s: u32) -> Result<LambdaValues> {
    let xi = xi_closed(g, s)?;
    let values = LambdaValues::from_total_and_orientable(xi.eval(&int(2)), xi.eval(&int(1)));
    let closed = lambda_closed(g, s)?;
    if values != closed {
        return Err(Error::RouteMismatch {
            what: format!("lambda values at g={g}, s={s}"),
            left: format!("{values:?}"),
            right: format!("{closed:?}"),
        });
    }
    Ok(values)
}

/// Bernoulli closed forms for `Λ` and `Λ^O`.
///
/// Even `g`: `Λ = (g+s-2)!/g! (-1)^s (2^{g-1} - 1) B_g`, `Λ^O = 0`.
/// Odd `g`: `Λ = Λ^O = (g+s-2)! (-1)^s B_{g+1} / ((g+1)(g-1)!)`.
pub fn lambda_closed(g: u32, s: u32) -> Result<LambdaValues> {
    require_positive(g, s)?;
    let sg = sign(i64::from(s));
    Ok(if g % 2 == 0 {
        let lambda = fact(g + s - 2) / fact(g)
            * &sg
            * (pow(&int(2), g as i32 - 1) - int(1))
            * bernoulli(g);
        LambdaValues::from_total_and_orientable(lambda, Rational::zero())
    } else {
        let v = fact(g + s - 2) * &sg * bernoulli(g + 1) / (r(g + 1) * fact(g - 1));
        LambdaValues::from_total_and_orientable(v.clone(), v)
    })
}

/// `ξ^s_g` assembled from refined map counts:
///
/// ```text
/// s! Σ_{n=g+s}^{3g+3s-3} (-1)^{n-s}/(2n) Σ_i m(i, s, n)
/// ```
///
/// over vertex distributions with no vertices of valence 1 or 2 and
/// exactly `n - g - s + 1` vertices, with `b = u - 1`.
pub fn xi_from_maps(g: u32, s: u32, table: &MapCountTable) -> Result<GammaPoly> {
    require_positive(g, s)?;
    let top = 3 * g + 3 * s - 3;
    if table.max_n() < top {
        return Err(Error::InsufficientTruncation {
            needed: top,
            available: table.max_n(),
        });
    }
    let mut acc = GammaPoly::zero();
    for (key, poly) in table.entries() {
        if key.n < g + s || key.n > top || key.j != s {
            continue;
        }
        if key.valence_count(1) != 0 || key.valence_count(2) != 0 {
            continue;
        }
        if key.vertex_count() + g + s != key.n + 1 {
            continue;
        }
        let w = sign(i64::from(key.n - s)) / r(2 * key.n);
        let in_u: GammaPoly = poly.substitute_affine::<InvGamma>(&Rational::one(), &-Rational::one());
        acc = acc + &in_u.mul_scalar(&w);
    }
    let total = acc.mul_scalar(&fact(s));
    log::debug!(
        "xi from maps g={g} s={s}: [{}]",
        total.coeffs().iter().map(format).collect::<Vec<_>>().join(", ")
    );
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;
    use crate::eulerchar::xi_from_logw;

    fn xi11() -> GammaPoly {
        GammaPoly::from_coeffs(vec![rat(1, 12), rat(-1, 4), rat(1, 12)])
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(xi_closed(1, 1).unwrap(), xi11());
        for s in 1..=5 {
            assert!(xi_closed(2, s).unwrap().eval(&int(1)).is_zero());
        }
        assert!(xi_closed(4, 1).unwrap().eval(&int(1)).is_zero());
        assert!(xi_closed(0, 1).is_err());
    }

    #[test]
    fn degree_and_low_coefficients() {
        for g in 1..=8 {
            for s in 1..=4 {
                let xi = xi_closed(g, s).unwrap();
                let expected = if g % 2 == 0 { g } else { g + 1 };
                assert_eq!(xi.degree(), Some(expected as usize));
                if g % 2 == 0 {
                    assert!(xi.coeff(0).is_zero());
                    let lead = fact(g + s - 2) * sign(i64::from(s)) * bernoulli(g) / (int(2) * fact(g));
                    assert_eq!(xi.coeff(g as usize), lead);
                }
            }
        }
    }

    #[test]
    fn closed_matches_logw() {
        for g in 1..=4 {
            for s in 1..=3 {
                assert_eq!(xi_closed(g, s).unwrap(), xi_from_logw(g, s).unwrap(), "g={g} s={s}");
            }
        }
    }

    #[test]
    fn lambda_examples() {
        let l = lambda_values(1, 1).unwrap();
        assert_eq!(l.lambda, rat(-1, 12));
        assert_eq!(l.orientable, rat(-1, 12));
        assert!(l.nonorientable.is_zero());
        let l = lambda_values(2, 1).unwrap();
        assert!(l.orientable.is_zero());
        assert_eq!(l.lambda, rat(-1, 12));
    }

    #[test]
    fn maps_route_needs_enough_edges() {
        let table = MapCountTable::from_entries([], 2).unwrap();
        assert!(matches!(
            xi_from_maps(1, 1, &table),
            Err(Error::InsufficientTruncation { needed: 3, available: 2 })
        ));
    }
}
