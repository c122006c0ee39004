//! Acceptance criteria 1-15. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails. Checks run on one thread so the timings are
//! comparable to the limits.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qident_core::identities::{check, check_recurrence, Params};
use qident_core::{CheckResult, Status};

const SEED: u64 = 20_240_601;

struct Criterion {
    number: u32,
    what: &'static str,
    limit: Duration,
    run: fn() -> Result<(), String>,
}

fn params(items: &[(&str, i64)]) -> Params {
    items.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn run(id: &str, items: &[(&str, i64)]) -> Result<CheckResult, String> {
    check(id, &params(items), SEED).map_err(|e| format!("{id}: {e}"))
}

fn expect(id: &str, items: &[(&str, i64)], want: Status) -> Result<(), String> {
    let r = run(id, items)?;
    if r.status == want {
        Ok(())
    } else {
        Err(format!("{id} {:?}: {} (wanted {want}) {}", r.params, r.status, r.witness.unwrap_or_default()))
    }
}

fn pass(id: &str, items: &[(&str, i64)]) -> Result<(), String> {
    expect(id, items, Status::Pass)
}

fn pass_l(id: &str, lo: i64, hi: i64, extra: &[(&str, i64)]) -> Result<(), String> {
    for l in lo..=hi {
        let mut items = vec![("L", l)];
        items.extend_from_slice(extra);
        pass(id, &items)?;
    }
    Ok(())
}

fn c1() -> Result<(), String> {
    pass_l("jacobi-1.12", 0, 12, &[])
}

fn c2() -> Result<(), String> {
    let r = check_recurrence("rec-1.13", 8, SEED).map_err(|e| e.to_string())?;
    match r.status {
        Status::Pass => Ok(()),
        s => Err(format!("rec-1.13: {s} {}", r.witness.unwrap_or_default())),
    }
}

fn c3() -> Result<(), String> {
    pass_l("key-3.7", 0, 8, &[("max_ijk", 4)])
}

fn c4() -> Result<(), String> {
    pass_l("counts-3.8", 0, 8, &[("N", 16), ("max_ijk", 4)])
}

fn c5() -> Result<(), String> {
    pass("gollnitz-thm1", &[("N", 40)])?;
    pass("gollnitz-map-3.5", &[("N", 40)])
}

fn c6() -> Result<(), String> {
    pass_l("thm4-4.4", 0, 8, &[])
}

fn c7() -> Result<(), String> {
    pass("weights-appendix", &[("l", 20)])?;
    pass("weights-factorization", &[("N", 18)])?;
    for id in ["collapse-4.7", "collapse-4.8", "collapse-4.15"] {
        pass(id, &[("l", 20)])?;
    }
    Ok(())
}

fn c8() -> Result<(), String> {
    // the check includes the A = z, B = 1/z reduction
    pass("twoparam-5.1", &[("N", 25)])
}

fn c9() -> Result<(), String> {
    pass("lebesgue-4.20", &[("N", 25)])?;
    pass("lebesgue-5.15", &[("N", 25)])?;
    for id in ["kummer-poly-6.2", "new-lebesgue-6.10", "andrews-6.11", "combined-6.14"] {
        pass_l(id, 0, 10, &[])?;
    }
    pass("rec-6.12", &[("L", 10)])
}

fn c10() -> Result<(), String> {
    pass_l("santos-sills-6.15", 0, 10, &[])?;
    pass_l("santos-sills-6.16", 0, 10, &[])
}

fn c11() -> Result<(), String> {
    pass_l("sylvester-poly-7.1", 0, 8, &[])?;
    pass("sylvester-7.3", &[("N", 30)])?;
    pass("limit-7.1", &[("L", 16), ("N", 12)])
}

fn c12() -> Result<(), String> {
    pass("lemma1-5.2", &[("i", 5), ("N", 20)])?;
    pass("lemma2-5.8", &[("i", 5), ("N", 20)])?;
    pass_l("lemma3-6.3", 0, 8, &[("i", 6)])
}

fn c13() -> Result<(), String> {
    pass_l("sec2-2.13", 0, 10, &[])?;
    pass_l("sec2-2.17", 0, 8, &[])?;
    pass_l("sec2-2.18", 0, 8, &[])?;
    pass("limit-2.20", &[("N", 20)])?;
    pass("chu-vandermonde-1.17", &[("n", 8), ("points", 5)])?;
    pass("sears-carlitz-1.20", &[("n", 6), ("points", 5)])?;
    pass("kummer-1.18", &[("L", 6), ("N", 12)])?;
    pass("heine-1.19", &[("N", 12), ("points", 5)])
}

fn c14() -> Result<(), String> {
    let a = run("macmahon-1.8-as-printed", &[("L", 1)])?;
    let b = run("macmahon-1.8-as-printed", &[("L", 1)])?;
    if a.status != Status::Fail || a.witness.is_none() {
        return Err(format!("as printed: {} {:?}", a.status, a.witness));
    }
    if a.witness != b.witness {
        return Err("witness is not reproducible".into());
    }
    pass_l("macmahon-1.8-corrected", 0, 12, &[])
}

fn c15() -> Result<(), String> {
    pass_l("gauss-4.11", 0, 12, &[])?;
    pass("gauss-4.12", &[("N", 30)])?;
    pass_l("shanks-4.13", 0, 10, &[])?;
    pass_l("shanks-4.14", 0, 10, &[])?;
    pass("andrews-euler-4.18", &[("n", 20)])?;
    pass("euler-4.19", &[("n", 30)])
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { number: 1, what: "polynomial Jacobi identity, L <= 12", limit: secs(10), run: c1 },
        Criterion { number: 2, what: "order-4 recurrence for both sides, L <= 8", limit: secs(5), run: c2 },
        Criterion { number: 3, what: "bounded Key Identity, i,j,k <= 4, L <= 8", limit: secs(60), run: c3 },
        Criterion { number: 4, what: "bounded counts G_L = P_L, N <= 16, L <= 8, i+j+k <= 4", limit: secs(120), run: c4 },
        Criterion { number: 5, what: "Gollnitz A(N) = B(N), N <= 40", limit: secs(30), run: c5 },
        Criterion { number: 6, what: "weighted distinct partitions with parts <= L, L <= 8", limit: secs(60), run: c6 },
        Criterion { number: 7, what: "weight calculus: closed forms, oracle N <= 18, collapses l <= 20", limit: secs(60), run: c7 },
        Criterion { number: 8, what: "two-parameter Jacobi mod q^26 and its A = 1/B reduction", limit: secs(30), run: c8 },
        Criterion { number: 9, what: "Lebesgue family and the second-order recurrence", limit: secs(60), run: c9 },
        Criterion { number: 10, what: "Santos-Sills pair with q-trinomials, L <= 10", limit: secs(30), run: c10 },
        Criterion { number: 11, what: "Sylvester polynomial identity L <= 8, series mod q^31, L -> inf", limit: secs(60), run: c11 },
        Criterion { number: 12, what: "Lemmas 1-3 against brute-force oracles", limit: secs(60), run: c12 },
        Criterion { number: 13, what: "finite sums by clearing denominators, q-hypergeometric suite", limit: secs(60), run: c13 },
        Criterion { number: 14, what: "printed sign fails at L = 1 reproducibly; corrected passes L <= 12", limit: secs(5), run: c14 },
        Criterion { number: 15, what: "counting corollaries: Gauss, Shanks, Andrews-Euler, Euler", limit: secs(60), run: c15 },
    ];

    let mut failed = 0;
    let total = Instant::now();
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let verdict = match outcome {
            Ok(()) if took <= c.limit => "PASS".to_string(),
            Ok(()) => format!("FAIL (over the {:?} limit)", c.limit),
            Err(e) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {:2}: {verdict}  {}  [{:.2}s / {}s]", c.number, c.what, took.as_secs_f64(), c.limit.as_secs());
    }
    println!("{} of {} criteria passed in {:.1}s", criteria.len() - failed, criteria.len(), total.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
