use super::*;
use crate::poly::p;

fn params(items: &[(&str, i64)]) -> Params {
    items.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

#[test]
fn ids_are_unique_and_sorted() {
    let ids: Vec<&str> = registry().iter().map(|d| d.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(ids, sorted);
}

#[test]
fn every_descriptor_can_be_checked() {
    for d in registry() {
        assert!(d.sides.is_some() || d.check.is_some(), "{}", d.id);
    }
}

#[test]
fn quick_values_lie_in_full_ranges() {
    for d in registry() {
        for def in d.params {
            assert!(def.min <= def.default && def.default <= def.max, "{} {}", d.id, def.name);
            if let Some((lo, hi)) = def.full {
                assert!(lo <= def.default && def.default <= hi, "{} {}", d.id, def.name);
                assert!(def.min <= lo && hi <= def.max, "{} {}", d.id, def.name);
            }
        }
    }
}

#[test]
fn lebesgue_filter_matches_several() {
    assert!(filtered("lebesgue").len() >= 4);
    assert!(filtered("no-such-identity").is_empty());
}

#[test]
fn build_side_examples() {
    let l = build_side("jacobi-1.12", Side::Right, &params(&[("L", 0)])).unwrap();
    assert_eq!(l.to_string(), "1");
    let g = build_side("gauss-4.11", Side::Left, &params(&[("L", 1)])).unwrap();
    assert_eq!(g, SideValue::Poly(p("1 + q")));
    let k = build_side("key-3.7", Side::Right, &params(&[("i", 0), ("j", 0), ("k", 0), ("L", 2)])).unwrap();
    assert_eq!(k, SideValue::Poly(LaurentPoly::one()));
}

#[test]
fn unknown_ids_and_params_are_rejected() {
    assert!(find("nope").is_err());
    assert!(check("euler-1.11", &params(&[("M", 1)]), 0).is_err());
    assert!(check("euler-1.11", &params(&[("L", 1000)]), 0).is_err());
}

#[test]
fn macmahon_as_printed_fails_with_witness() {
    let r = check("macmahon-1.8-as-printed", &params(&[("L", 1)]), 7).unwrap();
    assert_eq!(r.status, Status::Fail);
    assert!(r.witness.as_deref().is_some_and(|w| !w.is_empty()));
    assert!(r.as_expected());
}

#[test]
fn expected_failures_fail() {
    for id in ["macmahon-1.8-as-printed", "weight-5.11-as-printed", "sylvester-7.3-as-printed"] {
        let r = check(id, &Params::new(), 1).unwrap();
        assert_eq!(r.status, Status::Fail, "{id}");
    }
}

#[test]
fn quick_suite_passes() {
    let results = run_suite(Profile::Quick, 0, 42, None);
    for r in &results {
        assert!(r.as_expected(), "{} {:?} {:?} {:?}", r.id, r.params, r.status, r.witness);
    }
    assert!(suite_ok(&results));
}

#[test]
fn suite_is_deterministic() {
    let strip = |rs: Vec<CheckResult>| -> Vec<_> { rs.into_iter().map(|r| (r.id, r.params, r.status, r.witness, r.seed)).collect() };
    let a = strip(run_suite(Profile::Quick, 2, 9, Some("1.")));
    let b = strip(run_suite(Profile::Quick, 3, 9, Some("1.")));
    assert_eq!(a, b);
}

#[test]
fn recurrence_checks() {
    assert_eq!(check_recurrence("rec-1.13", 8, 0).unwrap().status, Status::Pass);
    assert_eq!(check_recurrence("rec-6.12", 10, 0).unwrap().status, Status::Pass);
    assert!(check_recurrence("euler-1.11", 8, 0).is_err());
}

#[test]
fn jacobi_substitution_reaches_base_q_squared() {
    let r = check("jacobi-1.1-trunc", &Params::new(), 0).unwrap();
    assert_eq!(r.status, Status::Pass, "{:?}", r.witness);
}

#[test]
fn empty_filter_result_gives_empty_suite() {
    assert!(run_suite(Profile::Quick, 1, 0, Some("zzz")).is_empty());
}

#[test]
#[ignore = "full profile; run with --ignored"]
fn full_suite_passes() {
    let results = run_suite(Profile::Full, 0, 42, None);
    let bad: Vec<_> = results.iter().filter(|r| !r.as_expected()).map(|r| (&r.id, &r.params, r.status, &r.witness)).collect();
    let mut slow: Vec<_> = results.iter().map(|r| (r.millis, &r.id, &r.params)).collect();
    slow.sort();
    eprintln!("slowest: {:?}", &slow[slow.len().saturating_sub(8)..]);
    assert!(bad.is_empty(), "{bad:#?}");
}
