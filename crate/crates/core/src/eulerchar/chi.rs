use std::fmt;

use num_traits::Zero;

use crate::arith::bernoulli;
use crate::arith::rational::{factorial, format, int, pow, rat};
use crate::{Error, Rational, Result};

use super::require_positive;
use super::xi::{lambda_values, xi_closed};

fn fact(n: u32) -> Rational {
    Rational::from_integer(factorial(u64::from(n)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiVariant {
    Complex,
    /// Real curves whose involution has no fixed points.
    RealFixedPointFree,
    /// Real curves whose involution fixes `m` curves.
    FixedCurves { m: u32, separating: bool },
}

impl fmt::Display for ChiVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiVariant::Complex => write!(f, "complex"),
            ChiVariant::RealFixedPointFree => write!(f, "real"),
            ChiVariant::FixedCurves { m, separating } => write!(
                f,
                "fixed(m={m}, {})",
                if *separating { "separating" } else { "non-separating" }
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiValue {
    pub value: Rational,
    pub g: u32,
    pub s: u32,
    pub variant: ChiVariant,
}

impl fmt::Display for ChiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format(&self.value))
    }
}

/// `(-2)^k` for possibly negative `k`.
fn minus_two_pow(k: i64) -> Rational {
    pow(&int(-2), k as i32)
}

/// Euler characteristic of the moduli space of genus-`g` real curves with
/// `s` marked points and a fixed-point-free involution:
/// `(-2)^{s-1}(1 - 2^{g-1})(g+s-2)!/g! B_g`, with the low-genus values
/// `(1,0) → 1/2`, `(0,0), (0,1) → 1` and `(0, s ≥ 2) → 0`.
pub fn chi_real(g: u32, s: u32) -> ChiValue {
    let value = match (g, s) {
        (0, 0) | (0, 1) => int(1),
        (0, _) => Rational::zero(),
        (1, 0) => rat(1, 2),
        _ => {
            minus_two_pow(i64::from(s) - 1)
                * (int(1) - pow(&int(2), g as i32 - 1))
                * fact(g + s - 2)
                / fact(g)
                * bernoulli(g)
        }
    };
    ChiValue {
        value,
        g,
        s,
        variant: ChiVariant::RealFixedPointFree,
    }
}

/// `2^{s-1} Λ^{s,N}_g`, checked against [`chi_real`].
pub fn chi_real_from_lambda(g: u32, s: u32) -> Result<ChiValue> {
    let l = lambda_values(g, s)?;
    let value = pow(&int(2), s as i32 - 1) * l.nonorientable;
    let direct = chi_real(g, s);
    if value != direct.value {
        return Err(Error::RouteMismatch {
            what: format!("real Euler characteristic at g={g}, s={s}"),
            left: format(&value),
            right: format(&direct.value),
        });
    }
    Ok(direct)
}

/// Harer–Zagier: `(-1)^s (g+s-2)! B_{g+1} / ((g+1)(g-1)!)` for odd `g`, zero
/// for even `g`; checked against `ξ^s_g(1)`.
pub fn chi_complex(g: u32, s: u32) -> Result<ChiValue> {
    require_positive(g, s)?;
    let value = if g % 2 == 0 {
        Rational::zero()
    } else {
        crate::arith::rational::sign(i64::from(s)) * fact(g + s - 2) * bernoulli(g + 1)
            / (int(i64::from(g) + 1) * fact(g - 1))
    };
    let xi = xi_closed(g, s)?.eval(&int(1));
    if xi != value {
        return Err(Error::RouteMismatch {
            what: format!("complex Euler characteristic at g={g}, s={s}"),
            left: format(&value),
            right: format(&xi),
        });
    }
    Ok(ChiValue {
        value,
        g,
        s,
        variant: ChiVariant::Complex,
    })
}

/// Involutions fixing `m` curves.
///
/// Non-separating (`m ≤ g`): `(-2)^{s+m-1}(1 - 2^{g-m-1})(g+s-2)!/(m!(g-m)!) B_{g-m}`.
/// Separating (`g - m + 1` even, `m < g`):
/// `(-1)^{s+m}(g-m+s-2)!/(m!(g-m+1)(g-m-1)!) B_{g-m+1}`.
pub fn chi_fixed_curves(g: u32, s: u32, m: u32, separating: bool) -> Result<ChiValue> {
    let variant = ChiVariant::FixedCurves { m, separating };
    let value = if separating {
        if m >= g {
            return Err(Error::InvalidInput(format!(
                "separating fixed curves need m < g, got g={g}, m={m}"
            )));
        }
        if (g - m + 1) % 2 != 0 {
            return Err(Error::Parity(format!(
                "g - m + 1 = {} must be even for a separating fixed set",
                g - m + 1
            )));
        }
        if g - m + s < 2 {
            return Err(Error::InvalidInput(format!(
                "g - m + s = {} must be at least 2",
                g - m + s
            )));
        }
        crate::arith::rational::sign(i64::from(s + m)) * fact(g - m + s - 2)
            / (fact(m) * int(i64::from(g - m + 1)) * fact(g - m - 1))
            * bernoulli(g - m + 1)
    } else {
        if m > g {
            return Err(Error::InvalidInput(format!(
                "non-separating fixed curves need m ≤ g, got g={g}, m={m}"
            )));
        }
        if g + s < 2 {
            return Err(Error::InvalidInput(format!("g + s = {} must be at least 2", g + s)));
        }
        minus_two_pow(i64::from(s + m) - 1)
            * (int(1) - pow(&int(2), g as i32 - m as i32 - 1))
            * fact(g + s - 2)
            / (fact(m) * fact(g - m))
            * bernoulli(g - m)
    };
    Ok(ChiValue {
        value,
        g,
        s,
        variant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_examples() {
        assert_eq!(chi_real(1, 0).value, rat(1, 2));
        assert_eq!(chi_real(0, 0).value, int(1));
        assert_eq!(chi_real(0, 1).value, int(1));
        assert!(chi_real(0, 5).value.is_zero());
        assert_eq!(chi_real(2, 1).value, rat(-1, 12));
        assert!(chi_real(3, 2).value.is_zero());
        assert!(chi_real(1, 1).value.is_zero());
    }

    #[test]
    fn real_from_lambda_agrees() {
        assert!(chi_real_from_lambda(1, 1).unwrap().value.is_zero());
        assert_eq!(chi_real_from_lambda(2, 1).unwrap().value, rat(-1, 12));
        assert_eq!(chi_real_from_lambda(2, 2).unwrap(), chi_real(2, 2));
    }

    #[test]
    fn complex_examples() {
        assert_eq!(chi_complex(1, 1).unwrap().value, rat(-1, 12));
        assert!(chi_complex(2, 1).unwrap().value.is_zero());
        assert_eq!(chi_complex(3, 1).unwrap().value, rat(1, 120));
    }

    #[test]
    fn fixed_curves() {
        for g in 1..=6 {
            for s in 1..=3 {
                assert_eq!(chi_fixed_curves(g, s, 0, false).unwrap().value, chi_real(g, s).value);
            }
        }
        assert_eq!(chi_fixed_curves(2, 1, 1, true).unwrap().value, rat(1, 12));
        assert!(matches!(chi_fixed_curves(3, 1, 1, true), Err(Error::Parity(_))));
    }
}
