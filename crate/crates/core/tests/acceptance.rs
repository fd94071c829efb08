mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use num_traits::{One, Zero};

use moduli_core::arith::rational::{binomial, factorial, int, rat};
use moduli_core::eulerchar::{chi_real, xi_closed, xi_from_logw, xi_from_maps};
use moduli_core::mapseries::{map_count_table, nonneg_report, specialize_counts};
use moduli_core::maporacle::{
    enumerate_patterns, glue_census, rooted_locally_orientable_counts, rooted_orientable_counts,
};
use moduli_core::partitions::partitions_of;
use moduli_core::symfunc::{cauchy_check, inner_product, jack_monomial_matrix, jack_weight};
use moduli_core::scalar::Ring;
use moduli_core::{AlphaFn, GammaPoly, Partition, Rational};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bernoulli_numbers(max: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=max {
        let s = (0..m).fold(Rational::zero(), |acc, k| {
            acc + Rational::from_integer(binomial(m as u64 + 1, k as u64)) * &b[k]
        });
        b.push(-s / int(m as i64 + 1));
    }
    b
}

fn fact(n: u32) -> Rational {
    Rational::from_integer(factorial(u64::from(n)))
}

fn poly(cs: &[Rational]) -> GammaPoly {
    GammaPoly::from_coeffs(cs.to_vec())
}

fn table_reproduction() -> Outcome {
    let table = map_count_table(3).map_err(|e| e.to_string())?;
    let expected = common::table_one();
    for (key, p) in &expected {
        ensure(table.get(key) == Some(p), || {
            format!("{key}: expected {p}, got {:?}", table.get(key))
        })?;
    }
    ensure(table.len() == expected.len(), || {
        format!("{} computed entries, {} published", table.len(), expected.len())
    })?;
    Ok(format!("{} published entries match exactly", expected.len()))
}

fn klein_bottle_patterns() -> Outcome {
    let census = glue_census(&[4]).map_err(|e| e.to_string())?;
    let count = census.lambda_nonorientable(1);
    ensure(count == 4, || format!("lambda_1^N(2) = {count}"))?;
    let words: BTreeSet<String> = enumerate_patterns(&[4])
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|p| {
            let s = p.classify();
            s.connected && !s.orientable && s.euler_characteristic == 0 && s.min_valence_at_least(3)
        })
        .map(|p| p.word())
        .collect();
    ensure(words.len() == 4, || format!("distinct words {words:?}"))?;
    Ok(format!(
        "lambda_1^N(2) = 4 via {}",
        words.into_iter().collect::<Vec<_>>().join(", ")
    ))
}

fn route_triangle() -> Outcome {
    for g in 1..=6 {
        for s in 1..=4 {
            let closed = xi_closed(g, s).map_err(|e| e.to_string())?;
            let logw = xi_from_logw(g, s).map_err(|e| e.to_string())?;
            ensure(closed == logw, || format!("g={g} s={s}: {closed} vs {logw}"))?;
        }
    }
    let table = map_count_table(3).map_err(|e| e.to_string())?;
    let maps = xi_from_maps(1, 1, &table).map_err(|e| e.to_string())?;
    let expected = poly(&[rat(1, 12), rat(-1, 4), rat(1, 12)]);
    ensure(maps == expected, || format!("maps route gives {maps}"))?;
    ensure(xi_closed(1, 1).ok() == Some(expected), || "closed (1,1)".into())?;
    Ok("closed = logW for g ≤ 6, s ≤ 4; maps(1,1) = 1/12 - u/4 + u²/12".into())
}

fn real_moduli_closure() -> Outcome {
    let b = bernoulli_numbers(12);
    for g in 1..=10u32 {
        for s in 1..=4u32 {
            let xi = xi_closed(g, s).map_err(|e| e.to_string())?;
            let lhs = (xi.eval(&int(2)) - xi.eval(&int(1))) * int(1 << (s - 1));
            let minus_two = (0..s - 1).fold(int(1), |acc, _| acc * int(-2));
            let rhs = minus_two * (int(1) - int(1 << (g - 1))) * fact(g + s - 2) / fact(g)
                * &b[g as usize];
            ensure(lhs == rhs, || format!("g={g} s={s}: {lhs} vs {rhs}"))?;
            ensure(chi_real(g, s).value == rhs, || format!("chi_real({g},{s})"))?;
        }
    }
    let specials = [
        (1, 0, rat(1, 2)),
        (0, 0, int(1)),
        (0, 1, int(1)),
        (0, 2, int(0)),
        (0, 3, int(0)),
        (0, 7, int(0)),
    ];
    for (g, s, v) in specials {
        let got = chi_real(g, s).value;
        ensure(got == v, || format!("chi({g},{s}) = {got}, expected {v}"))?;
    }
    Ok("formula holds for g ≤ 10, s ≤ 4; special values match".into())
}

fn harer_zagier() -> Outcome {
    let b = bernoulli_numbers(12);
    for g in 1..=10u32 {
        for s in 1..=4u32 {
            let at_one = xi_closed(g, s).map_err(|e| e.to_string())?.eval(&int(1));
            let expected = if g % 2 == 1 {
                let sign = if s % 2 == 0 { int(1) } else { int(-1) };
                sign * fact(g + s - 2) * &b[g as usize + 1] / (int(i64::from(g) + 1) * fact(g - 1))
            } else {
                Rational::zero()
            };
            ensure(at_one == expected, || format!("g={g} s={s}: {at_one} vs {expected}"))?;
        }
    }
    Ok("xi(1) matches for odd g ≤ 9 and vanishes for even g ≤ 10".into())
}

fn oracle_agreement() -> Outcome {
    let table = map_count_table(3).map_err(|e| e.to_string())?;
    let mut compared = 0;
    for (b, counts) in [
        (0, rooted_orientable_counts(3).map_err(|e| e.to_string())?),
        (1, rooted_locally_orientable_counts(3).map_err(|e| e.to_string())?),
    ] {
        let algebra = specialize_counts(&table, &int(b));
        let mut lower = Vec::new();
        for n in 1..3 {
            let c = if b == 0 {
                rooted_orientable_counts(n)
            } else {
                rooted_locally_orientable_counts(n)
            };
            lower.extend(c.map_err(|e| e.to_string())?);
        }
        let mut oracle: std::collections::BTreeMap<_, _> = lower.into_iter().collect();
        oracle.extend(counts);
        let keys: BTreeSet<_> = algebra
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, _)| k.clone())
            .chain(oracle.keys().cloned())
            .collect();
        for key in keys {
            let got = oracle.get(&key).map_or(int(0), |&c| int(c as i64));
            let want = algebra.get(&key).cloned().unwrap_or_default();
            ensure(got == want, || format!("b={b} {key}: oracle {got}, algebra {want}"))?;
            compared += 1;
        }
    }
    Ok(format!("{compared} keys agree at b = 0 and b = 1 for n ≤ 3"))
}

fn jack_properties() -> Outcome {
    for n in 1..=6u32 {
        let records = jack_weight(n).map_err(|e| e.to_string())?;
        let (table, rows) = jack_monomial_matrix(n).map_err(|e| e.to_string())?;
        let one_n = Partition::rectangle(1, n as usize);
        for (a, ra) in records.iter().enumerate() {
            for rb in &records[..a] {
                let ip = inner_product(&ra.expansion, &rb.expansion);
                ensure(ip.is_zero(), || format!("<J{}, J{}> = {ip}", ra.shape, rb.shape))?;
            }
            let row = &rows[a];
            for (mu, c) in table.partitions.iter().zip(row) {
                ensure(mu <= &ra.shape || c.is_zero(), || {
                    format!("J{} has m{mu} coefficient {c}", ra.shape)
                })?;
            }
            let lead = &row[table.index_of(&one_n).unwrap()];
            let nf = AlphaFn::from_rational(fact(n));
            ensure(*lead == nf, || format!("J{} normalization {lead}", ra.shape))?;
            let p2 = if n % 2 == 0 {
                ra.expansion.coeff(&Partition::rectangle(2, n as usize / 2))
            } else {
                Zero::zero()
            };
            ensure(ra.p2coeff == p2, || format!("J{} p2coeff {}", ra.shape, ra.p2coeff))?;
        }
        ensure(records.len() == partitions_of(n).len(), || format!("weight {n} count"))?;
    }
    for d in 1..=4 {
        let report = cauchy_check(d, 4).map_err(|e| e.to_string())?;
        ensure(report.passed(), || report.to_string())?;
    }
    Ok("weights ≤ 6 orthogonal, triangular, normalized; Cauchy through degree 4 in 4 variables".into())
}

fn nonnegativity_report() -> Outcome {
    let table = map_count_table(4).map_err(|e| e.to_string())?;
    let report = nonneg_report(&table);
    if report.is_empty() {
        Ok(format!("report empty for n ≤ 4 ({} entries)", table.len()))
    } else {
        Ok(format!("FINDINGS (reported, exit code 3):\n{report}"))
    }
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 table reproduction", table_reproduction),
        ("2 gluing census", klein_bottle_patterns),
        ("3 xi route triangle", route_triangle),
        ("4 real moduli closure", real_moduli_closure),
        ("5 Harer-Zagier", harer_zagier),
        ("6 oracle agreement", oracle_agreement),
        ("7 Jack properties", jack_properties),
        ("8 nonnegativity report", nonnegativity_report),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name:24} {secs:7.2}s  {detail}"),
            Err(why) => {
                println!("FAIL  {name:24} {secs:7.2}s  {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
