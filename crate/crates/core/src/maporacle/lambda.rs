use num_traits::Zero;

use super::glue::{compositions, glue_census};
use super::DEFAULT_BOUND;
use crate::arith::rational::sign;
use crate::eulerchar::{lambda_values, LambdaValues};
use crate::{Error, Rational, Result};

/// `(λ_g^s(n), λ^{s,O}(n), λ_g^{s,N}(n))`: valence-≥3 gluings of `s`
/// labelled polygons with `2n` sides in total into a surface of Euler
/// characteristic `1 - g`.
pub fn polygon_lambda(g: u32, s: u32, n: u32) -> Result<(u64, u64, u64)> {
    let mut out = (0, 0, 0);
    for sides in compositions(2 * n, s) {
        let census = glue_census(&sides)?;
        out.0 += census.lambda(g);
        out.1 += census.lambda_orientable(g);
        out.2 += census.lambda_nonorientable(g);
    }
    Ok(out)
}

/// `Λ = Σ_{n=g+s}^{3g+3s-3} (-1)^{n-s}/(2n) λ_g^s(n)` and its orientable and
/// nonorientable parts from the gluing census, checked against
/// [`lambda_values`].
pub fn lambda_from_census(g: u32, s: u32) -> Result<LambdaValues> {
    lambda_from_census_bounded(g, s, DEFAULT_BOUND)
}

pub fn lambda_from_census_bounded(g: u32, s: u32, bound: u32) -> Result<LambdaValues> {
    if g == 0 || s == 0 {
        return Err(Error::InvalidInput(format!(
            "g and s must be positive, got g={g}, s={s}"
        )));
    }
    let top = 3 * g + 3 * s - 3;
    if top > bound {
        return Err(Error::OutOfRange {
            what: "3g + 3s - 3".into(),
            value: top,
            bound,
        });
    }
    let mut total = Rational::zero();
    let mut orientable = Rational::zero();
    for n in g + s..=top {
        let (all, o, _) = polygon_lambda(g, s, n)?;
        let w = sign(i64::from(n) - i64::from(s)) / Rational::from_integer((2 * n).into());
        total += &w * Rational::from_integer(all.into());
        orientable += &w * Rational::from_integer(o.into());
    }
    let census = LambdaValues::from_total_and_orientable(total, orientable);
    let algebra = lambda_values(g, s)?;
    if census != algebra {
        return Err(Error::RouteMismatch {
            what: format!("lambda from census at g={g}, s={s}"),
            left: format!("{census:?}"),
            right: format!("{algebra:?}"),
        });
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    #[test]
    fn genus_one_one_polygon() {
        let l = lambda_from_census(1, 1).unwrap();
        assert_eq!(l.lambda, rat(-1, 12));
        assert!(l.nonorientable.is_zero());
    }

    #[test]
    fn guard() {
        assert!(matches!(lambda_from_census(1, 2), Err(Error::OutOfRange { .. })));
    }
}
