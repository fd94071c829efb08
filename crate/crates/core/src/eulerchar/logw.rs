use num_traits::Zero;

use crate::arith::rational::{binomial, factorial, sign};
use crate::arith::var::{X, T};
use crate::arith::{bernoulli, Poly, TruncatedSeries};
use crate::scalar::Ring;
use crate::{GammaFn, GammaPoly, Rational, Result};

use super::require_positive;

/// `log W_γ(x, t)` as a formal `t`-series with coefficients polynomial in
/// `x` over rational functions of `1/γ`.
pub type LogWSeries = TruncatedSeries<Poly<GammaFn, X>, T>;

fn r(n: impl Into<num_bigint::BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `c · (1/γ)^e`; a negative `e` is a positive power of γ.
fn gamma_term(c: Rational, e: i64) -> GammaFn {
    let u = GammaFn::var();
    let base = if e >= 0 { u } else { u.inv() };
    let mut out = GammaFn::from_rational(c);
    for _ in 0..e.unsigned_abs() {
        out = out * &base;
    }
    out
}

/// Asymptotic expansion of `log W_γ` through `t^max_delta`:
///
/// ```text
/// -γx Σ_k B_{2k} t^{2k-1} / (2k(2k-1))
///   + Σ_δ t^δ/(δ(δ+1)) Σ_{r=1}^{δ+1} C(δ+1,r) B_{δ+1-r}
///       · ( x^r (-1)^{δ+1-r} / γ^{δ-r}
///           - Σ_{m=1}^{r+1} C(r+1,m) B_{r+1-m}/(r+1) · x^m/γ^{r-m} · (-1)^{δ-m} )
/// ```
pub fn logw_series(max_delta: u32) -> LogWSeries {
    let order = max_delta as usize;
    let mut coeffs: Vec<Vec<GammaFn>> = vec![vec![GammaFn::zero(); order + 3]; order + 1];
    let mut add = |delta: usize, xdeg: usize, v: GammaFn| {
        let slot = &mut coeffs[delta][xdeg];
        *slot = slot.clone() + &v;
    };
    let mut k = 1u32;
    while (2 * k - 1) as usize <= order {
        let c = -bernoulli(2 * k) / r(2 * k * (2 * k - 1));
        add((2 * k - 1) as usize, 1, gamma_term(c, -1));
        k += 1;
    }
    for delta in 1..=max_delta {
        let d = u64::from(delta);
        let outer = Rational::new(1.into(), (d * (d + 1)).into());
        for rr in 1..=d + 1 {
            let w = &outer * r(binomial(d + 1, rr)) * bernoulli((d + 1 - rr) as u32);
            if w.is_zero() {
                continue;
            }
            let e = d as i64 - rr as i64;
            add(
                delta as usize,
                rr as usize,
                gamma_term(&w * sign(d as i64 + 1 - rr as i64), e),
            );
            for m in 1..=rr + 1 {
                let c = -(&w * r(binomial(rr + 1, m)) * bernoulli((rr + 1 - m) as u32)
                    / r(rr + 1))
                    * sign(d as i64 - m as i64);
                if !c.is_zero() {
                    add(delta as usize, m as usize, gamma_term(c, rr as i64 - m as i64));
                }
            }
        }
    }
    TruncatedSeries::new(coeffs.into_iter().map(Poly::from_coeffs).collect(), order)
}

/// `ξ^s_g = s! (-1)^s [x^s t^{g+s-1}] (1/γ) log W_γ`.
pub fn xi_from_logw(g: u32, s: u32) -> Result<GammaPoly> {
    require_positive(g, s)?;
    let delta = g + s - 1;
    let series = logw_series(delta);
    let c = series
        .coeff(delta as usize)
        .map(|p| p.coeff(s as usize))
        .unwrap_or_else(GammaFn::zero);
    let scaled = (c * &GammaFn::var()).scale(&(r(factorial(u64::from(s))) * sign(i64::from(s))));
    Ok(scaled
        .to_poly()
        .expect("(1/γ) log W has coefficients polynomial in 1/γ"))
}
