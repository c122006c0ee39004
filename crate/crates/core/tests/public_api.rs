use num_rational::BigRational;
use proptest::prelude::*;
use qident_core::identities::{build_side, check, filtered, registry, sides, Params};
use qident_core::partitions::{enumerate_distinct, enumerate_type1};
use qident_core::poly::p;
use qident_core::qfun::{qbinom, qtrinomial_t1};
use qident_core::series::equal_mod;
use qident_core::weights::partition_weight;
use qident_core::{LaurentPoly, QSeriesTrunc, Side, SideValue, Status};

fn q_at_one() -> std::collections::BTreeMap<qident_core::VarId, BigRational> {
    [(qident_core::VarId::Q, BigRational::from_integer(1.into()))].into_iter().collect()
}

fn params(items: &[(&str, i64)]) -> Params {
    items.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

#[test]
fn spec_side_examples() {
    let one = SideValue::Poly(LaurentPoly::one());
    assert_eq!(build_side("jacobi-1.12", Side::Right, &params(&[("L", 0)])).unwrap(), one);
    assert_eq!(build_side("gauss-4.11", Side::Left, &params(&[("L", 1)])).unwrap(), SideValue::Poly(p("1 + q")));
    let key = build_side("key-3.7", Side::Right, &params(&[("i", 0), ("j", 0), ("k", 0), ("L", 2)])).unwrap();
    assert_eq!(key, one);
}

#[test]
fn every_sided_identity_builds_both_sides() {
    for d in registry().iter().filter(|d| d.has_sides()) {
        let empty = Params::new();
        for side in [Side::Left, Side::Right] {
            build_side(d.id, side, &empty).unwrap_or_else(|e| panic!("{} {side:?}: {e}", d.id));
        }
    }
}

#[test]
fn filters_ignore_case() {
    assert_eq!(filtered("SYLVESTER").len(), filtered("sylvester").len());
    assert!(filtered("sylvester").iter().all(|d| d.id.contains("sylvester") || d.title.to_lowercase().contains("sylvester")));
    assert!(filtered("Eq 6.1").len() >= 5);
}

#[test]
fn type1_weights_sum_to_chain_weights() {
    // summing the colorings of each support recovers its weight
    for n in 0..=10 {
        for part in enumerate_distinct(n, None) {
            let total: LaurentPoly = enumerate_type1(n, None)
                .into_iter()
                .filter(|c| c.parts().iter().map(|&(x, _)| x).eq(part.parts().iter().copied()))
                .map(|c| c.weight())
                .sum();
            assert_eq!(total, partition_weight(&part), "{part}");
        }
    }
}

#[test]
fn trinomials_at_q_one_are_trinomial_coefficients() {
    let one = q_at_one();
    // coefficient of x^a in (1 + x + 1/x)^4
    let want = [19, 16, 10, 4, 1];
    for (a, &w) in want.iter().enumerate() {
        assert_eq!(qtrinomial_t1(4, a as i64).evaluate(&one).unwrap(), BigRational::from_integer(w.into()));
    }
}

#[test]
fn series_inverse_round_trips() {
    let s = QSeriesTrunc::from_poly(&p("1 - q*z + q^2*A - 3*q^5"), 15).unwrap();
    let prod = s.mul_series(&s.inverse().unwrap()).unwrap();
    assert!(equal_mod(&prod, &QSeriesTrunc::one(15)).unwrap().is_pass());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn key_identity_random_triples(i in 0i64..4, j in 0i64..4, k in 0i64..4, l in 0i64..6) {
        let r = check("key-3.7", &params(&[("L", l), ("i", i), ("j", j), ("k", k)]), 3).unwrap();
        prop_assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
    }

    #[test]
    fn qbinom_is_symmetric_and_sums_to_binomial(n in 0i64..18, k in 0i64..18) {
        prop_assume!(k <= n);
        prop_assert_eq!(qbinom(n, k, 1), qbinom(n, n - k, 1));
        let one = q_at_one();
        let v = qbinom(n, k, 1).evaluate(&one).unwrap();
        prop_assert_eq!(v.to_integer(), qident_core::qfun::binomial(n, k));
    }

    #[test]
    fn sylvester_bound_shift(l in 0i64..5) {
        prop_assert_eq!(sides::sylvester_7_1_lhs(3 * l - 1), sides::sylvester_7_1_rhs(l));
    }
}
