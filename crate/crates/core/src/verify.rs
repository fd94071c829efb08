//! The full cross-check suite behind `moduli verify-all`.

use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::rational::{factorial, format, int, pow, rat};
use crate::arith::var::{T, X};
use crate::arith::{BernoulliCache, TruncatedSeries};
use crate::eulerchar::{
    chi_complex, chi_fixed_curves, chi_real, chi_real_from_lambda, lambda_values, xi_closed,
    xi_from_logw, xi_from_maps,
};
use crate::mapseries::{
    map_count_table, nonneg_report, specialize_counts, MapCountTable, MapKey,
};
use crate::maporacle::{
    enumerate_patterns, glue_census, lambda_from_census, rooted_locally_orientable_counts,
    rooted_orientable_counts, DEFAULT_BOUND,
};
use crate::partitions::Partition;
use crate::symfunc::{cauchy_check, inner_product, power_to_monomial, JackCache};
use crate::scalar::Ring;
use crate::{AlphaFn, BPoly, GammaPoly, Rational, Result, UniPoly};

/// `(n, j, i, b-coefficients)` of the published refined map numbers for
/// `n ≤ 3`.
pub const PUBLISHED_TABLE: &[(u32, u32, &[u32], &[i64])] = &[
    (1, 1, &[2], &[1]),
    (1, 1, &[0, 1], &[0, 1]),
    (1, 2, &[0, 1], &[1]),
    (2, 1, &[2, 1], &[2]),
    (2, 1, &[0, 2], &[0, 1]),
    (2, 1, &[1, 0, 1], &[0, 4]),
    (2, 1, &[0, 0, 0, 1], &[1, 1, 3]),
    (2, 2, &[0, 2], &[1]),
    (2, 2, &[1, 0, 1], &[4]),
    (2, 2, &[0, 0, 0, 1], &[0, 5]),
    (2, 3, &[0, 0, 0, 1], &[2]),
    (3, 1, &[2, 2], &[3]),
    (3, 1, &[0, 3], &[0, 1]),
    (3, 1, &[3, 0, 1], &[2]),
    (3, 1, &[1, 1, 1], &[0, 12]),
    (3, 1, &[0, 0, 2], &[1, 1, 5]),
    (3, 1, &[2, 0, 0, 1], &[0, 9]),
    (3, 1, &[0, 1, 0, 1], &[3, 3, 9]),
    (3, 1, &[1, 0, 0, 0, 1], &[6, 6, 18]),
    (3, 1, &[0, 0, 0, 0, 0, 1], &[0, 13, 13, 15]),
    (3, 2, &[0, 3], &[1]),
    (3, 2, &[1, 1, 1], &[12]),
    (3, 2, &[0, 0, 2], &[0, 9]),
    (3, 2, &[2, 0, 0, 1], &[9]),
    (3, 2, &[0, 1, 0, 1], &[0, 15]),
    (3, 2, &[1, 0, 0, 0, 1], &[0, 30]),
    (3, 2, &[0, 0, 0, 0, 0, 1], &[10, 10, 32]),
    (3, 3, &[0, 0, 2], &[4]),
    (3, 3, &[0, 1, 0, 1], &[6]),
    (3, 3, &[1, 0, 0, 0, 1], &[12]),
    (3, 3, &[0, 0, 0, 0, 0, 1], &[0, 22]),
    (3, 4, &[0, 0, 0, 0, 0, 1], &[5]),
];

pub fn published_table() -> Vec<(MapKey, BPoly)> {
    PUBLISHED_TABLE
        .iter()
        .map(|&(n, j, i, cs)| {
            (
                MapKey::new(i.to_vec(), j, n).expect("published keys are valid"),
                BPoly::from_coeffs(cs.iter().map(|&c| int(c)).collect()),
            )
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_edges: u32,
    pub seed: u64,
    /// Replaces the process-wide Bernoulli cache in the arithmetic suite.
    pub bernoulli: Option<Arc<BernoulliCache>>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_edges: 3,
            seed: 0,
            bernoulli: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Not run; the reason is shown in the report.
    Skipped(String),
    Fail(String),
    /// Conjecture report with findings. Not a failure.
    Findings(String),
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub outcome: Outcome,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    /// 0 when everything holds, 2 on any identity violation, 3 when only the
    /// nonnegativity report has findings.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| matches!(c.outcome, Outcome::Fail(_))) {
            2
        } else if self
            .checks
            .iter()
            .any(|c| matches!(c.outcome, Outcome::Findings(_)))
        {
            3
        } else {
            0
        }
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks
            .iter()
            .find(|c| matches!(c.outcome, Outcome::Fail(_)))
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let (status, detail) = match &c.outcome {
                Outcome::Pass => ("pass", None),
                Outcome::Skipped(why) => ("skip", Some(why)),
                Outcome::Fail(why) => ("FAIL", Some(why)),
                Outcome::Findings(what) => ("report", Some(what)),
            };
            writeln!(f, "{status:6} {:10} {:>9.3}s", c.name, c.elapsed.as_secs_f64())?;
            if let Some(d) = detail {
                for line in d.lines() {
                    writeln!(f, "       {line}")?;
                }
            }
            for n in &c.notes {
                writeln!(f, "       note: {n}")?;
            }
        }
        write!(f, "exit code {}", self.exit_code())
    }
}

type CheckFn<'a> = Box<dyn FnOnce(&mut Vec<String>) -> std::result::Result<Outcome, String> + 'a>;

fn run(name: &'static str, body: CheckFn<'_>) -> CheckResult {
    let start = Instant::now();
    let mut notes = Vec::new();
    let outcome = match body(&mut notes) {
        Ok(o) => o,
        Err(e) => Outcome::Fail(e),
    };
    let elapsed = start.elapsed();
    log::info!("{name}: {outcome:?} in {elapsed:?}");
    CheckResult {
        name,
        outcome,
        notes,
        elapsed,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Run every check in a fixed order.
pub fn verify_all(config: &VerifyConfig) -> VerifyReport {
    let mut report = VerifyReport::default();
    report.checks.push(run("arith", Box::new(|_| check_arith(config))));
    report.checks.push(run("jack", Box::new(|_| check_jack(6))));
    report.checks.push(run("cauchy", Box::new(|_| check_cauchy(4, 4))));

    let start = Instant::now();
    let table = lift(map_count_table(config.max_edges));
    let build = start.elapsed();
    let mut table_check = run(
        "table",
        Box::new(|notes| check_table(table.as_ref().map_err(Clone::clone)?, notes)),
    );
    table_check.elapsed += build;
    table_check.notes.push(format!(
        "map series through {} edges built in {:.3}s",
        config.max_edges,
        build.as_secs_f64()
    ));
    report.checks.push(table_check);
    report.checks.push(run(
        "oracle",
        Box::new(|notes| check_oracles(table.as_ref().map_err(Clone::clone)?, notes)),
    ));
    report.checks.push(run(
        "xi",
        Box::new(|notes| check_xi(table.as_ref().map_err(Clone::clone)?, notes)),
    ));
    report.checks.push(run("chi", Box::new(|_| check_chi(10, 4))));
    report.checks.push(run("lambda", Box::new(check_lambda)));
    report.checks.push(run(
        "nonneg",
        Box::new(|_| {
            let r = nonneg_report(table.as_ref().map_err(Clone::clone)?);
            Ok(if r.is_empty() {
                Outcome::Pass
            } else {
                Outcome::Findings(r.to_string())
            })
        }),
    ));
    report
}

/// Akiyama–Tanigawa, which yields `B_1 = +1/2`; the sign is flipped here.
fn akiyama_tanigawa(n: usize) -> Vec<Rational> {
    let mut a: Vec<Rational> = Vec::with_capacity(n + 1);
    let mut out = Vec::with_capacity(n + 1);
    for m in 0..=n {
        a.push(Rational::new(1.into(), (m as i64 + 1).into()));
        for j in (1..=m).rev() {
            a[j - 1] = Rational::from_integer((j as i64).into()) * (&a[j - 1] - &a[j]);
        }
        out.push(a[0].clone());
    }
    if n >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

fn random_poly(rng: &mut ChaCha8Rng) -> UniPoly<X> {
    let deg = rng.gen_range(0..=4);
    UniPoly::from_coeffs((0..=deg).map(|_| random_rational(rng)).collect())
}

fn check_arith(config: &VerifyConfig) -> std::result::Result<Outcome, String> {
    let cache: &BernoulliCache = match &config.bernoulli {
        Some(c) => c,
        None => BernoulliCache::global(),
    };
    for (j, expected) in akiyama_tanigawa(30).into_iter().enumerate() {
        let got = cache.get(j as u32);
        ensure(got == expected, || {
            format!("B_{j} = {} but Akiyama–Tanigawa gives {}", format(&got), format(&expected))
        })?;
    }
    for k in 0..=8u32 {
        let s = cache.sum_of_powers_poly(k);
        for n in 1..=20i64 {
            let direct: Rational = (1..=n).map(|j| pow(&int(j), k as i32)).sum();
            ensure(s.eval(&int(n)) == direct, || {
                format!("sum of {k}th powers to {n}: polynomial gives {}", format(&s.eval(&int(n))))
            })?;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..50 {
        let (a, b, c) = (random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng));
        ensure(&(&a + &b) * &c == &(&a * &c) + &(&b * &c), || {
            format!("distributivity fails for {a}, {b}, {c}")
        })?;
        ensure(&(&a * &b) * &c == &a * &(&b * &c), || {
            format!("associativity fails for {a}, {b}, {c}")
        })?;
        if !b.is_zero() {
            let (q, r) = a.div_rem(&b);
            ensure(&(&q * &b) + &r == a, || format!("division fails for {a} by {b}"))?;
            let g = a.gcd(&b);
            ensure(g.leading().is_none_or(|l| l.is_one()), || format!("gcd of {a}, {b} not monic"))?;
        }
        let fa = AlphaFn::new(a.clone().retag(), b.clone().retag());
        if !b.is_zero() && !a.is_zero() {
            ensure(&fa * &fa.inv() == AlphaFn::one(), || format!("({a})/({b}) times inverse is not 1"))?;
            ensure(fa.denom().leading().is_some_and(|l| l.is_one()), || {
                format!("denominator of ({a})/({b}) is not monic")
            })?;
        }
        let mut coeffs: Vec<Rational> = (0..6).map(|_| random_rational(&mut rng)).collect();
        coeffs[0] = Rational::zero();
        let f = TruncatedSeries::<Rational, T>::new(coeffs, 5);
        ensure(lift(lift(f.exp())?.log())? == f, || format!("log(exp f) != f for {f:?}"))?;
    }
    Ok(Outcome::Pass)
}

fn check_jack(max_weight: u32) -> std::result::Result<Outcome, String> {
    let cache = JackCache::global();
    for n in 0..=max_weight {
        let records = lift(cache.weight(n))?;
        let table = power_to_monomial(n);
        let n_fact = Rational::from_integer(factorial(u64::from(n)));
        for (a, ra) in records.iter().enumerate() {
            ensure(ra.expansion.is_homogeneous_of(n), || format!("J{} not homogeneous", ra.shape))?;
            ensure(ra.norm == inner_product(&ra.expansion, &ra.expansion), || {
                format!("norm of J{} differs from its inner product", ra.shape)
            })?;
            ensure(n % 2 == 0 || ra.p2coeff.is_zero(), || format!("p2coeff of J{} nonzero", ra.shape))?;
            for rb in &records[..a] {
                ensure(inner_product(&ra.expansion, &rb.expansion).is_zero(), || {
                    format!("J{} and J{} are not orthogonal", ra.shape, rb.shape)
                })?;
            }
            let mono = ra.monomial_coefficients(&table);
            for (mu, c) in table.partitions.iter().zip(&mono) {
                if mu > &ra.shape {
                    ensure(c.is_zero(), || format!("[m{mu}]J{} = {c}, expected 0", ra.shape))?;
                }
            }
            let one_n = Partition::rectangle(1, n as usize);
            let lead = &mono[table.index_of(&one_n).expect("(1^n) present")];
            ensure(*lead == AlphaFn::from_rational(n_fact.clone()), || {
                format!("[m{one_n}]J{} = {lead}, expected {}", ra.shape, format(&n_fact))
            })?;
        }
    }
    Ok(Outcome::Pass)
}

fn check_cauchy(max_degree: u32, vars: usize) -> std::result::Result<Outcome, String> {
    for n in 0..=max_degree {
        let r = lift(cauchy_check(n, vars))?;
        ensure(r.passed(), || r.to_string())?;
    }
    Ok(Outcome::Pass)
}

fn check_table(table: &MapCountTable, notes: &mut Vec<String>) -> std::result::Result<Outcome, String> {
    let upto = table.max_n().min(3);
    if upto < 3 {
        notes.push(format!("published rows compared only for n ≤ {upto}"));
    }
    let mut compared = 0;
    for (key, poly) in published_table().iter().filter(|(k, _)| k.n <= upto) {
        let got = table.get(key);
        ensure(got == Some(poly), || {
            format!("{key}: expected {poly}, computed {}", got.map_or("0".into(), |p| p.to_string()))
        })?;
        compared += 1;
    }
    let extra = table.entries().filter(|(k, _)| k.n <= upto).count() - compared;
    ensure(extra == 0, || format!("{extra} unpublished nonzero entries with n ≤ {upto}"))?;
    let specialized = specialize_counts(table, &int(1));
    let torus = MapKey::new(vec![0, 0, 0, 1], 1, 2).expect("valid key");
    if let Some(v) = specialized.get(&torus) {
        ensure(*v == int(5), || format!("{torus} at b=1 is {}", format(v)))?;
    }
    notes.push(format!("{compared} published rows matched"));
    Ok(Outcome::Pass)
}

fn check_oracles(table: &MapCountTable, notes: &mut Vec<String>) -> std::result::Result<Outcome, String> {
    let upto = table.max_n().min(DEFAULT_BOUND);
    let at0 = specialize_counts(table, &int(0));
    let at1 = specialize_counts(table, &int(1));
    for n in 1..=upto {
        for (label, oracle, algebra) in [
            ("orientable", lift(rooted_orientable_counts(n))?, &at0),
            ("all surfaces", lift(rooted_locally_orientable_counts(n))?, &at1),
        ] {
            let expected: Vec<(&MapKey, &Rational)> =
                algebra.iter().filter(|(k, v)| k.n == n && !v.is_zero()).collect();
            ensure(expected.len() == oracle.len(), || {
                format!("{label}, n={n}: oracle has {} keys, table {}", oracle.len(), expected.len())
            })?;
            for (k, v) in expected {
                let got = oracle.get(k).copied().unwrap_or(0);
                ensure(int(got as i64) == *v, || {
                    format!("{label} {k}: oracle {got}, table {}", format(v))
                })?;
            }
        }
    }
    notes.push(format!("rooted censuses agree for n ≤ {upto}"));
    Ok(Outcome::Pass)
}

fn check_xi(table: &MapCountTable, notes: &mut Vec<String>) -> std::result::Result<Outcome, String> {
    for g in 1..=6 {
        for s in 1..=4 {
            let closed = lift(xi_closed(g, s))?;
            let logw = lift(xi_from_logw(g, s))?;
            ensure(closed == logw, || format!("g={g} s={s}: closed {closed} vs logW {logw}"))?;
        }
    }
    let xi11 = GammaPoly::from_coeffs(vec![rat(1, 12), rat(-1, 4), rat(1, 12)]);
    ensure(lift(xi_closed(1, 1))? == xi11, || "xi(1,1) closed form".into())?;
    if table.max_n() < 3 {
        notes.push(format!(
            "xi from maps skipped: insufficient truncation (need 3 edges, have {})",
            table.max_n()
        ));
    } else {
        let maps = lift(xi_from_maps(1, 1, table))?;
        ensure(maps == xi11, || format!("xi(1,1) from maps is {maps}"))?;
    }
    Ok(Outcome::Pass)
}

fn check_chi(max_g: u32, max_s: u32) -> std::result::Result<Outcome, String> {
    let specials = [((1, 0), rat(1, 2)), ((0, 0), int(1)), ((0, 1), int(1)), ((0, 2), int(0)), ((0, 5), int(0))];
    for ((g, s), v) in specials {
        ensure(chi_real(g, s).value == v, || format!("chi_real({g},{s}) special value"))?;
    }
    for g in 1..=max_g {
        for s in 1..=max_s {
            let xi = lift(xi_closed(g, s))?;
            let closure = pow(&int(2), s as i32 - 1) * (xi.eval(&int(2)) - xi.eval(&int(1)));
            let direct = chi_real(g, s).value;
            ensure(closure == direct, || {
                format!("g={g} s={s}: 2^(s-1)(xi(1/2) - xi(1)) = {}, closed formula gives {}", format(&closure), format(&direct))
            })?;
            lift(chi_real_from_lambda(g, s))?;
            lift(lambda_values(g, s))?;
            let complex = lift(chi_complex(g, s))?;
            ensure(g % 2 == 1 || complex.value.is_zero(), || format!("chi_complex({g},{s}) nonzero"))?;
            if g % 2 == 1 && g > 1 {
                ensure(direct.is_zero(), || format!("chi_real({g},{s}) nonzero for odd g"))?;
            }
            let fixed = lift(chi_fixed_curves(g, s, 0, false))?;
            ensure(fixed.value == direct, || format!("m=0 fixed curves differ at g={g} s={s}"))?;
        }
    }
    ensure(lift(chi_fixed_curves(2, 1, 1, true))?.value == rat(1, 12), || "separating (2,1,1)".into())?;
    ensure(chi_fixed_curves(3, 1, 1, true).is_err(), || "separating parity guard".into())?;
    Ok(Outcome::Pass)
}

fn check_lambda(notes: &mut Vec<String>) -> std::result::Result<Outcome, String> {
    let census = lift(glue_census(&[4]))?;
    ensure(census.raw_total == 12, || format!("square has {} raw gluings", census.raw_total))?;
    ensure(census.lambda_nonorientable(1) == 4, || {
        format!("lambda^N_1(2) = {}", census.lambda_nonorientable(1))
    })?;
    let digon = lift(glue_census(&[2]))?;
    ensure(digon.rows.values().map(|r| r.all).sum::<u64>() == 2, || "digon census".into())?;

    let mut lifted = 0;
    for sides in [[1u32, 3], [2, 2], [3, 1]] {
        for p in lift(enumerate_patterns(&sides))? {
            let s = p.classify();
            if !s.connected || s.orientable {
                continue;
            }
            let (count, vertices) = p.orientable_lifts();
            ensure(count == 2, || format!("{p} has {count} orientable lifts, expected 2"))?;
            ensure(vertices.iter().all(|&v| v == 2 * s.vertex_count()), || {
                format!("{p}: lifted vertex counts {vertices:?}")
            })?;
            lifted += 1;
        }
    }
    notes.push(format!("{lifted} two-polygon nonorientable gluings lift to 2 orientable covers"));
    let l = lift(lambda_from_census(1, 1))?;
    ensure(l.lambda == rat(-1, 12), || "Lambda(1,1) from census".into())?;
    Ok(Outcome::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn akiyama_tanigawa_leading() {
        let b = akiyama_tanigawa(4);
        assert_eq!(b, vec![int(1), rat(-1, 2), rat(1, 6), int(0), rat(-1, 30)]);
    }

    #[test]
    fn corrupted_bernoulli_fails_arith() {
        let config = VerifyConfig {
            bernoulli: Some(Arc::new(BernoulliCache::from_values(vec![int(1), rat(1, 2)]))),
            ..VerifyConfig::default()
        };
        assert!(matches!(check_arith(&config), Ok(Outcome::Fail(_)) | Err(_)));
    }

    #[test]
    fn exit_codes() {
        let mk = |outcome| CheckResult {
            name: "x",
            outcome,
            notes: vec![],
            elapsed: Duration::ZERO,
        };
        let mut r = VerifyReport { checks: vec![mk(Outcome::Pass), mk(Outcome::Skipped("s".into()))] };
        assert_eq!(r.exit_code(), 0);
        r.checks.push(mk(Outcome::Findings("f".into())));
        assert_eq!(r.exit_code(), 3);
        r.checks.push(mk(Outcome::Fail("bad".into())));
        assert_eq!(r.exit_code(), 2);
    }
}
