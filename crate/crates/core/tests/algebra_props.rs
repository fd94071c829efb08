use num_traits::{One, Zero};
use proptest::prelude::*;

use moduli_core::arith::rational::rat;
use moduli_core::arith::var::Z;
use moduli_core::arith::TruncatedSeries;
use moduli_core::partitions::partitions_of;
use moduli_core::{AlphaFn, BPoly, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn bpoly() -> impl Strategy<Value = BPoly> {
    prop::collection::vec(rational(), 0..5).prop_map(BPoly::from_coeffs)
}

fn nonzero_bpoly() -> impl Strategy<Value = BPoly> {
    bpoly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn polynomial_ring_axioms(a in bpoly(), b in bpoly(), c in bpoly()) {
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!(a.clone() - &a, BPoly::zero());
        prop_assert_eq!(a.clone() * &BPoly::one(), a.clone());
    }

    #[test]
    fn division_with_remainder(a in bpoly(), d in nonzero_bpoly()) {
        let (q, r) = a.div_rem(&d);
        prop_assert_eq!(q * &d + &r, a);
        prop_assert!(r.degree().map_or(true, |rd| rd < d.degree().unwrap()));
    }

    #[test]
    fn polynomial_evaluation_is_a_homomorphism(a in bpoly(), b in bpoly(), x in rational()) {
        prop_assert_eq!((a.clone() * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((a.clone() + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn rational_functions_are_canonical(p in bpoly(), q in nonzero_bpoly(), r in nonzero_bpoly()) {
        let p = p.retag();
        let q = q.retag();
        let r = r.retag();
        let f = AlphaFn::new(p.clone(), q.clone());
        let g = AlphaFn::new(p.clone() * &r, q.clone() * &r);
        prop_assert_eq!(&f, &g);
        prop_assert!(f.denom().leading().unwrap().is_one());
        prop_assert!(f.numer().gcd(f.denom()).is_one() || f.numer().is_zero());
        prop_assert_eq!(f * &AlphaFn::from_poly(q), AlphaFn::from_poly(p));
    }

    #[test]
    fn rational_function_field_axioms(p in bpoly(), q in nonzero_bpoly(), s in nonzero_bpoly()) {
        let f = AlphaFn::new(p.retag(), q.retag());
        let g = AlphaFn::from_poly(s.retag());
        prop_assert_eq!(f.clone() / &g * &g, f.clone());
        prop_assert_eq!(g.clone() * &g.inv(), AlphaFn::one());
        prop_assert_eq!(f.clone() - &f, AlphaFn::zero());
    }

    #[test]
    fn series_log_and_exp_are_inverse(tail in prop::collection::vec(rational(), 1..6)) {
        let n = tail.len();
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(tail);
        let u: TruncatedSeries<Rational, Z> = TruncatedSeries::new(coeffs, n);
        let e = u.exp().unwrap();
        prop_assert_eq!(e.log().unwrap(), u.clone());
        let one_plus = &TruncatedSeries::one(n) + &u;
        prop_assert_eq!(one_plus.log().unwrap().exp().unwrap(), one_plus);
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=12).map(|n| partitions_of(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
}

#[test]
fn log_of_geometric_series() {
    let n = 6;
    let geometric: TruncatedSeries<Rational, Z> =
        TruncatedSeries::new(vec![Rational::one(); n + 1], n);
    let log = geometric.log().unwrap();
    let expected: Vec<Rational> = std::iter::once(Rational::zero())
        .chain((1..=n as i64).map(|m| rat(1, m)))
        .collect();
    assert_eq!(log.coeffs(), expected.as_slice());
}
