use std::sync::OnceLock;

use super::sides::{self, mono, q, zp};
use super::{compare_exact, CheckFn, Expectation, IdentityDescriptor, ParamDef, Params, SideValue, SidesFn, Strategy};
use crate::check::{compare_counts, compare_polys, CheckOutcome, PointSampler};
use crate::error::{Error, Result};
use crate::partitions::{
    count_distinct_parts, count_gl, count_gollnitz_a, count_gollnitz_b, count_odd_parts, count_pl, decompose_chains,
    enumerate_distinct, euler_subtract, euler_unsubtract, gl_table, gollnitz_consistency, oracle_g, oracle_h,
};
use crate::poly::{LaurentPoly, VarId};
use crate::qhyper::{self, HalfSumRange, KummerMode};
use crate::series::equal_mod;
use crate::weights::{self, Specialization};
use crate::partitions::{color_weight_oracle, Color};

fn get(p: &Params, name: &str) -> i64 {
    p[name]
}

fn poly(pair: (LaurentPoly, LaurentPoly)) -> (SideValue, SideValue) {
    (SideValue::Poly(pair.0), SideValue::Poly(pair.1))
}

fn series(pair: (crate::series::QSeriesTrunc, crate::series::QSeriesTrunc)) -> (SideValue, SideValue) {
    (SideValue::Series(pair.0), SideValue::Series(pair.1))
}

fn n_order(p: &Params) -> usize {
    get(p, "N") as usize
}

/// First failure among `outcomes`, with a label.
fn first_fail(items: impl IntoIterator<Item = (String, Result<CheckOutcome>)>) -> Result<CheckOutcome> {
    for (label, out) in items {
        let out = out?;
        if !out.is_pass() {
            return Ok(out.context(label));
        }
    }
    Ok(CheckOutcome::Pass)
}

// ---- side builders ----

fn s_euler_1_11(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(sides::euler_1_11(get(p, "L"))))
}

fn s_macmahon_printed(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(sides::macmahon_1_8(get(p, "L"), false)))
}

fn s_macmahon_corrected(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(sides::macmahon_1_8(get(p, "L"), true)))
}

fn s_jacobi_1_1(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(series(sides::jacobi_1_1(n_order(p))?))
}

fn s_jacobi_1_5(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(series(sides::jacobi_1_5(n_order(p))?))
}

fn s_jacobi_1_7(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(series(sides::jacobi_1_7(n_order(p))?))
}

fn s_jacobi_1_12(p: &Params) -> Result<(SideValue, SideValue)> {
    let l = get(p, "L");
    Ok(poly((sides::jacobi_1_12_lhs(l)?, sides::jacobi_1_12_rhs(l))))
}

fn s_euler_6_5(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(series(sides::euler_6_5(get(p, "L"), n_order(p))?))
}

fn s_limit_2_20(p: &Params) -> Result<(SideValue, SideValue)> {
    let n = n_order(p);
    Ok(series((qhyper::triple_sum_series(n)?, qhyper::jacobi_product(n)?)))
}

fn s_cauchy_2_21(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(series(sides::cauchy_2_21(n_order(p))?))
}

fn s_sec2_2_13(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(qhyper::diagonal_sum_sides(get(p, "L") as usize)?))
}

fn s_sec2_2_17(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(qhyper::half_sum_sides(get(p, "L") as usize, false, HalfSumRange::Triangle)?))
}

fn s_sec2_2_18(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(qhyper::half_sum_sides(get(p, "L") as usize, true, HalfSumRange::Triangle)?))
}

fn ijk(p: &Params) -> (i64, i64, i64) {
    let g = |n: &str| p.get(n).copied().unwrap_or(0);
    (g("i"), g("j"), g("k"))
}

fn s_key_3_6(p: &Params) -> Result<(SideValue, SideValue)> {
    let (i, j, k) = ijk(p);
    Ok(series(sides::key_3_6(i, j, k, n_order(p))?))
}

fn s_key_3_7(p: &Params) -> Result<(SideValue, SideValue)> {
    let (i, j, k) = ijk(p);
    Ok(poly(sides::key_3_7(i, j, k, get(p, "L"))))
}

fn s_thm4(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(sides::thm4_4_4(get(p, "L"))))
}

fn s_cor1(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(series(sides::cor1_4_6(n_order(p))?))
}

fn s_jacobi_4_10(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(sides::jacobi_4_10(get(p, "L"))?))
}

fn s_gauss_4_11(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(sides::gauss_4_11(get(p, "L"))))
}

fn s_shanks_4_13(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(sides::shanks(get(p, "L"), true)))
}

fn s_shanks_4_14(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(sides::shanks(get(p, "L"), false)))
}

fn s_andrews_euler_4_17(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(sides::andrews_euler_4_17(get(p, "n") as u32)))
}

fn s_lebesgue_4_20(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(series(sides::lebesgue_4_20(n_order(p))?))
}

fn s_twoparam(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(series(sides::twoparam_5_1(n_order(p))?))
}

fn s_lemma1(p: &Params) -> Result<(SideValue, SideValue)> {
    let (i, n) = (get(p, "i"), n_order(p));
    Ok(series((oracle_g(i as u32, n), sides::lemma1_formula(i, n))))
}

fn s_lemma2(p: &Params) -> Result<(SideValue, SideValue)> {
    let (i, n) = (get(p, "i"), n_order(p));
    Ok(series((oracle_h(i as u32, n), sides::lemma2_formula(i, n))))
}

fn s_lemma3(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(sides::lemma3_6_3(get(p, "L"), get(p, "i"))))
}

fn s_lebesgue_5_15(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(series(sides::lebesgue_5_15(n_order(p))?))
}

fn s_kummer_poly(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(sides::kummer_poly_6_2(get(p, "L"))))
}

fn s_new_lebesgue(p: &Params) -> Result<(SideValue, SideValue)> {
    let l = get(p, "L");
    Ok(poly((sides::new_lebesgue_lhs(l), sides::new_lebesgue_rhs(l))))
}

fn s_andrews_6_11(p: &Params) -> Result<(SideValue, SideValue)> {
    let l = get(p, "L");
    Ok(poly((sides::new_lebesgue_lhs(l), sides::andrews_6_11_rhs(l))))
}

fn s_combined_6_14(p: &Params) -> Result<(SideValue, SideValue)> {
    let l = get(p, "L");
    Ok(poly((sides::andrews_6_11_rhs(l), sides::new_lebesgue_rhs(l))))
}

fn s_santos_sills_6_15(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(sides::santos_sills(get(p, "L"), false, 1)))
}

fn s_santos_sills_6_16(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(sides::santos_sills(get(p, "L"), true, 1)))
}

fn s_santos_sills_printed(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(poly(sides::santos_sills(get(p, "L"), false, -1)))
}

/// The left side's bound is `3L - 1`; with the same `L` on both sides the
/// identity fails from `L = 1`.
fn s_sylvester_7_1(p: &Params) -> Result<(SideValue, SideValue)> {
    let l = get(p, "L");
    Ok(poly((sides::sylvester_7_1_lhs(3 * l - 1), sides::sylvester_7_1_rhs(l))))
}

fn s_sylvester_7_1_printed(p: &Params) -> Result<(SideValue, SideValue)> {
    let l = get(p, "L");
    Ok(poly((sides::sylvester_7_1_lhs(l), sides::sylvester_7_1_rhs(l))))
}

fn s_sylvester_7_3(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(series(sides::sylvester_7_3(n_order(p), false)?))
}

fn s_sylvester_7_3_printed(p: &Params) -> Result<(SideValue, SideValue)> {
    Ok(series(sides::sylvester_7_3(n_order(p), true)?))
}

// ---- custom checks ----

/// `(1.1)` under `q -> q^2`, `z -> zq` gives `(1.7)`, compared through `q^N`.
fn c_jacobi_1_1(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let n = n_order(p);
    let (l1, r1) = sides::jacobi_1_1(n)?;
    let (l7, r7) = sides::jacobi_1_7(n)?;
    let transform = |s: &crate::series::QSeriesTrunc| -> Result<crate::series::QSeriesTrunc> {
        let poly = s
            .to_poly()
            .scale_var(VarId::Q, 2)
            .substitute(VarId::Z, &mono(1, &[(VarId::Z, 1), (VarId::Q, 1)]))?
            .truncate_q(n as i64);
        crate::series::QSeriesTrunc::from_poly(&poly, n)
    };
    first_fail([
        ("sides".to_string(), equal_mod(&l1, &r1)),
        ("lhs to (1.7)".to_string(), equal_mod(&transform(&l1)?, &l7)),
        ("rhs to (1.7)".to_string(), equal_mod(&transform(&r1)?, &r7)),
    ])
}

fn c_rec_1_13(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let lmax = get(p, "L");
    let lhs: Vec<LaurentPoly> = (0..=lmax.max(3)).map(sides::jacobi_1_12_lhs).collect::<Result<_>>()?;
    let rhs: Vec<LaurentPoly> = (0..=lmax.max(3)).map(sides::jacobi_1_12_rhs).collect();
    let mut items = Vec::new();
    for l in 0..=3 {
        items.push((format!("initial L={l}"), Ok(compare_polys(&lhs[l], &rhs[l]))));
    }
    for l in 0..=lmax - 4 {
        let zero = LaurentPoly::zero();
        items.push((format!("lhs recurrence at L={l}"), Ok(compare_polys(&sides::rec_1_13_residual(&lhs, l), &zero))));
        items.push((format!("rhs recurrence at L={l}"), Ok(compare_polys(&sides::rec_1_13_residual(&rhs, l), &zero))));
    }
    first_fail(items)
}

fn c_rec_6_12(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let lmax = get(p, "L");
    let upto = lmax.max(1);
    let lhs: Vec<LaurentPoly> = (0..=upto).map(sides::new_lebesgue_lhs).collect();
    let rhs: Vec<LaurentPoly> = (0..=upto).map(sides::andrews_6_11_rhs).collect();
    let f1 = &LaurentPoly::one() + &q(1);
    let mut items = Vec::new();
    for (name, seq) in [("lhs", &lhs), ("rhs", &rhs)] {
        items.push((format!("{name} F_0"), Ok(compare_polys(&seq[0], &LaurentPoly::one()))));
        items.push((format!("{name} F_1"), Ok(compare_polys(&seq[1], &f1))));
        for l in 2..=lmax {
            let r = sides::rec_6_12_residual(seq, l);
            items.push((format!("{name} recurrence at L={l}"), Ok(compare_polys(&r, &LaurentPoly::zero()))));
        }
    }
    first_fail(items)
}

fn c_key_3_6(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let m = get(p, "max_ijk");
    let n = n_order(p);
    let explicit = p.contains_key("i") || p.contains_key("j") || p.contains_key("k");
    let triples = triples(m, explicit.then(|| ijk(p)));
    first_fail(triples.into_iter().map(|(i, j, k)| {
        let out = sides::key_3_6(i, j, k, n).and_then(|(l, r)| equal_mod(&l, &r));
        (format!("i={i} j={j} k={k}"), out)
    }))
}

fn triples(m: i64, only: Option<(i64, i64, i64)>) -> Vec<(i64, i64, i64)> {
    if let Some(t) = only {
        return vec![t];
    }
    let mut out = Vec::new();
    for i in 0..=m {
        for j in 0..=m {
            for k in 0..=m {
                out.push((i, j, k));
            }
        }
    }
    out
}

fn c_key_3_7(p: &Params, sampler: &mut PointSampler) -> Result<CheckOutcome> {
    let l = get(p, "L");
    let m = get(p, "max_ijk");
    let explicit = p.contains_key("i") || p.contains_key("j") || p.contains_key("k");
    for (i, j, k) in triples(m, explicit.then(|| ijk(p))) {
        let (lhs, rhs) = sides::key_3_7(i, j, k, l);
        let out = compare_exact(&lhs, &rhs, sampler)?;
        if !out.is_pass() {
            return Ok(out.context(format!("i={i} j={j} k={k}")));
        }
    }
    Ok(CheckOutcome::Pass)
}

fn c_jacobi_4_10(p: &Params, sampler: &mut PointSampler) -> Result<CheckOutcome> {
    let l = get(p, "L");
    let (weighted, lhs12) = sides::jacobi_4_10(l)?;
    let rhs12 = sides::jacobi_1_12_rhs(l);
    let thm4_specialized = Specialization::ReciprocalZ.apply(&sides::thm4_rhs(l));
    first_fail([
        ("weighted sum vs closed left side".to_string(), compare_exact(&weighted, &lhs12, sampler)),
        ("weighted sum vs triple sum".to_string(), compare_exact(&weighted, &rhs12, sampler)),
        ("specialized theorem vs triple sum".to_string(), Ok(compare_polys(&thm4_specialized, &rhs12))),
    ])
}

fn c_gauss_4_12(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let forms = sides::gauss_4_12(n_order(p))?;
    let names = ["sum", "(-q)^2(q)", "(-q)(q^2;q^2)", "(q^2;q^2)/(q;q^2)"];
    let mut items = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            items.push((format!("{} vs {}", names[a], names[b]), equal_mod(&forms[a], &forms[b])));
        }
    }
    first_fail(items)
}

fn c_lebesgue_4_16(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let forms = sides::lebesgue_4_16(n_order(p))?;
    let names = ["(-zq,zq,-q)", "(z^2q^2;q^2)(-q)", "(z^2q^2;q^2)/(q;q^2)", "sum E(n,j)"];
    let mut items = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            items.push((format!("{} vs {}", names[a], names[b]), equal_mod(&forms[a], &forms[b])));
        }
    }
    first_fail(items)
}

fn c_andrews_euler_4_18(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let nmax = get(p, "n") as u32;
    let mut items = Vec::new();
    for n in 0..=nmax {
        for (j, e, v) in sides::andrews_euler_4_18(n) {
            items.push((String::new(), Ok(compare_counts(format!("n={n} j={j}"), e, v))));
        }
    }
    first_fail(items).map(strip_empty_context)
}

fn strip_empty_context(o: CheckOutcome) -> CheckOutcome {
    match o {
        CheckOutcome::Fail { witness } => CheckOutcome::fail(witness.trim_start_matches(": ").to_string()),
        pass => pass,
    }
}

fn c_euler_4_19(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let nmax = get(p, "n") as u32;
    for n in 0..=nmax {
        let out = compare_counts(format!("n={n}"), count_odd_parts(n) as i128, count_distinct_parts(n) as i128);
        if !out.is_pass() {
            return Ok(out);
        }
    }
    Ok(CheckOutcome::Pass)
}

fn c_twoparam(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let n = n_order(p);
    let (lhs, rhs) = sides::twoparam_5_1(n)?;
    let main = equal_mod(&lhs, &rhs)?;
    if !main.is_pass() {
        return Ok(main);
    }
    // A = z, B = 1/z: the cleared left side is (1 + 1/z) sum q^{T_j} (z^{-j} + z^{1+j})
    let reduced = lhs
        .substitute(VarId::A, &zp(1))?
        .substitute(VarId::B, &zp(-1))?;
    let (jac, _) = sides::jacobi_1_5(n)?;
    let want = jac.mul_poly(&(&LaurentPoly::one() + &zp(-1)))?;
    Ok(equal_mod(&reduced, &want)?.context("A = z, B = 1/z"))
}

fn c_lemma_sweep(p: &Params, _: &mut PointSampler, second: bool) -> Result<CheckOutcome> {
    let (imax, n) = (get(p, "i"), n_order(p));
    for i in 0..=imax {
        let (oracle, formula) = if second {
            (oracle_h(i as u32, n), sides::lemma2_formula(i, n))
        } else {
            (oracle_g(i as u32, n), sides::lemma1_formula(i, n))
        };
        let out = equal_mod(&oracle, &formula)?;
        if !out.is_pass() {
            return Ok(out.context(format!("i={i}")));
        }
    }
    Ok(CheckOutcome::Pass)
}

fn c_lemma1(p: &Params, s: &mut PointSampler) -> Result<CheckOutcome> {
    c_lemma_sweep(p, s, false)
}

fn c_lemma2(p: &Params, s: &mut PointSampler) -> Result<CheckOutcome> {
    c_lemma_sweep(p, s, true)
}

fn c_lemma3(p: &Params, sampler: &mut PointSampler) -> Result<CheckOutcome> {
    let (l, imax) = (get(p, "L"), get(p, "i"));
    for i in 0..=imax {
        let (a, b) = sides::lemma3_6_3(l, i);
        let out = compare_exact(&a, &b, sampler)?;
        if !out.is_pass() {
            return Ok(out.context(format!("i={i}")));
        }
    }
    Ok(CheckOutcome::Pass)
}

/// Polynomial identities at large `L` agree with their infinite forms
/// through a fixed order.
fn c_limit_1_12(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let (l, n) = (get(p, "L"), n_order(p));
    let poly = crate::series::QSeriesTrunc::from_poly(&sides::jacobi_1_12_rhs(l).truncate_q(n as i64), n)?;
    let (jac, _) = sides::jacobi_1_5(n)?;
    let product = sides::jacobi_product(n)?;
    // the polynomial is the (1+z)-free form; compare after multiplying by 1+z
    let lifted = poly.mul_poly(&(&LaurentPoly::one() + &zp(1)))?;
    first_fail([
        ("against the sum".to_string(), equal_mod(&lifted, &jac)),
        ("against the product".to_string(), equal_mod(&poly, &product)),
    ])
}

fn c_limit_6_10(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let (l, n) = (get(p, "L"), n_order(p));
    let poly = crate::series::QSeriesTrunc::from_poly(&sides::new_lebesgue_rhs(l).truncate_q(n as i64), n)?;
    equal_mod(&poly, &sides::lebesgue_product(n)?)
}

fn c_limit_3_7(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let (l, n, m) = (get(p, "L"), n_order(p), get(p, "max_ijk"));
    first_fail(triples(m, None).into_iter().map(|(i, j, k)| {
        let out = (|| {
            let (lhs, _) = sides::key_3_7(i, j, k, l);
            let poly = crate::series::QSeriesTrunc::from_poly(&lhs.truncate_q(n as i64), n)?;
            let (_, rhs) = sides::key_3_6(i, j, k, n)?;
            equal_mod(&poly, &rhs)
        })();
        (format!("i={i} j={j} k={k}"), out)
    }))
}

fn c_limit_7_1(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let (l, n) = (get(p, "L"), n_order(p));
    let (_, product) = sides::sylvester_7_3(n, false)?;
    let lhs = crate::series::QSeriesTrunc::from_poly(&sides::sylvester_7_1_lhs(3 * l - 1).truncate_q(n as i64), n)?;
    let rhs = crate::series::QSeriesTrunc::from_poly(&sides::sylvester_7_1_rhs(l).truncate_q(n as i64), n)?;
    first_fail([
        ("left side".to_string(), equal_mod(&lhs, &product)),
        ("right side".to_string(), equal_mod(&rhs, &product)),
    ])
}

fn c_weights_appendix(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let lmax = get(p, "l") as u32;
    let table = weights::omega_table(lmax);
    for l in 1..=lmax {
        for x in Color::ALL {
            let out = compare_polys(&table[l as usize][x as usize], &weights::omega_closed(x, l));
            if !out.is_pass() {
                return Ok(out.context(format!("omega_{l}({x})")));
            }
        }
        let all: LaurentPoly = table[l as usize].iter().cloned().sum();
        let primary: LaurentPoly = Color::PRIMARY.iter().map(|&x| table[l as usize][x as usize].clone()).sum();
        let out = compare_polys(&weights::chain_weight(2, l), &all)
            .and(|| compare_polys(&weights::chain_weight(1, l), &primary));
        if !out.is_pass() {
            return Ok(out.context(format!("chain weight l={l}")));
        }
    }
    Ok(CheckOutcome::Pass)
}

fn c_weights_factorization(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let nmax = get(p, "N") as u32;
    for n in 0..=nmax {
        for part in enumerate_distinct(n, None) {
            let out = compare_polys(&weights::partition_weight(&part), &color_weight_oracle(&part));
            if !out.is_pass() {
                return Ok(out.context(format!("partition {part}")));
            }
        }
    }
    Ok(CheckOutcome::Pass)
}

fn collapse_check(p: &Params, spec: Specialization, want: impl Fn(u32, u32) -> LaurentPoly) -> Result<CheckOutcome> {
    let lmax = get(p, "l") as u32;
    for l in 1..=lmax {
        for s in [1, 2] {
            let out = compare_polys(&weights::chain_weight_specialized(s, l, spec), &want(s, l));
            if !out.is_pass() {
                return Ok(out.context(format!("s={s} l={l}")));
            }
        }
    }
    Ok(CheckOutcome::Pass)
}

fn c_collapse_4_7(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    collapse_check(p, Specialization::CMinusOne, weights::collapse_c_minus_one)
}

fn c_collapse_4_8(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    collapse_check(p, Specialization::ReciprocalZ, weights::collapse_reciprocal_z)
}

fn c_collapse_4_15(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    collapse_check(p, Specialization::OppositeZ, |s, _| weights::collapse_opposite_z(s))
}

fn c_chain_size_4_9(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let nmax = get(p, "N") as u32;
    for n in 0..=nmax {
        for part in enumerate_distinct(n, None) {
            for c in decompose_chains(&part) {
                if c.start == 1 && c.size() as i64 != crate::qfun::triangular(c.len as i64)? {
                    return Ok(CheckOutcome::fail(format!("chain {c} in {part} has size {}", c.size())));
                }
            }
        }
    }
    Ok(CheckOutcome::Pass)
}

fn c_weight_5_11(p: &Params, printed: bool) -> Result<CheckOutcome> {
    let jmax = get(p, "j") as u32;
    for j in 0..=jmax {
        let (l, r) = weights::alternating_sum_sides(j, printed);
        let out = compare_polys(&l, &r);
        if !out.is_pass() {
            return Ok(out.context(format!("j={j}")));
        }
    }
    Ok(CheckOutcome::Pass)
}

fn c_weight_5_11_corrected(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    c_weight_5_11(p, false)
}

fn c_weight_5_11_printed(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    c_weight_5_11(p, true)
}

fn c_gollnitz_thm1(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let nmax = get(p, "N") as u32;
    for n in 0..=nmax {
        let out = compare_counts(format!("N={n}"), count_gollnitz_a(n) as i128, count_gollnitz_b(n) as i128);
        if !out.is_pass() {
            return Ok(out);
        }
    }
    Ok(CheckOutcome::Pass)
}

fn c_gollnitz_map(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    Ok(gollnitz_consistency(get(p, "N") as u32))
}

fn counting_theorem(nmax: u32, bound: Option<u32>, m: u32) -> CheckOutcome {
    let gl = gl_table(nmax, bound);
    for n in 0..=nmax {
        for i in 0..=m {
            for j in 0..=m - i {
                for k in 0..=m - i - j {
                    let g = gl.get(&(n, i, j, k)).copied().unwrap_or(0);
                    let out = compare_counts(format!("N={n} i={i} j={j} k={k}"), g as i128, count_pl(n, i, j, k, bound) as i128);
                    if !out.is_pass() {
                        return out;
                    }
                }
            }
        }
    }
    CheckOutcome::Pass
}

fn c_thm2(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    Ok(counting_theorem(get(p, "N") as u32, None, get(p, "max_ijk") as u32))
}

fn c_thm3(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let l = get(p, "L") as u32;
    Ok(counting_theorem(get(p, "N") as u32, Some(l), get(p, "max_ijk") as u32).context(format!("L={l}")))
}

fn c_gl_examples(_: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    // a single part A_1, and BC_2 on its own
    Ok(compare_counts("A_1", count_gl(1, [1, 0, 0, 0, 0, 0], Some(1)) as i128, 1)
        .and(|| compare_counts("BC_2", count_gl(2, [0, 0, 0, 0, 0, 1], Some(2)) as i128, 1)))
}

fn c_euler_subtraction(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let nmax = get(p, "N") as u32;
    for n in 0..=nmax {
        for part in enumerate_distinct(n, None) {
            let m = euler_subtract(&part);
            let t = part.len() as u32;
            if m.iter().sum::<u32>() != n - t * (t + 1) / 2 || euler_unsubtract(&m) != part {
                return Ok(CheckOutcome::fail(format!("{part} -> {m:?} does not round-trip")));
            }
        }
    }
    Ok(CheckOutcome::Pass)
}

fn c_cauchy_1_16(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let n = get(p, "n") as usize;
    first_fail(
        (0..=n)
            .map(|k| (format!("terminating n={k}"), qhyper::check_cauchy_terminating(k)))
            .chain([("truncated".to_string(), qhyper::check_cauchy_truncated(n_order(p)))]),
    )
}

/// Draws points until `count` of them evaluate without a vanishing
/// denominator; gives up after a generous number of draws.
fn at_points(
    sampler: &mut PointSampler,
    vars: &[VarId],
    count: usize,
    mut f: impl FnMut(&std::collections::BTreeMap<VarId, num_rational::BigRational>) -> Result<CheckOutcome>,
) -> Result<CheckOutcome> {
    let mut done = 0;
    let mut draws = 0;
    while done < count {
        draws += 1;
        if draws > 50 * count {
            return Err(Error::InvalidArgument("too many singular sample points".into()));
        }
        let at = sampler.point(vars);
        match f(&at) {
            Ok(CheckOutcome::Pass) => done += 1,
            Ok(fail) => return Ok(fail),
            Err(Error::Singular(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(CheckOutcome::Pass)
}

fn c_chu_vandermonde(p: &Params, sampler: &mut PointSampler) -> Result<CheckOutcome> {
    let nmax = get(p, "n") as usize;
    let points = get(p, "points") as usize;
    for n in 0..=nmax {
        let out = qhyper::check_chu_vandermonde(n)?
            .and(|| at_points(sampler, &[VarId::A, VarId::C, VarId::Q], points, |at| qhyper::check_chu_vandermonde_at(n, at))
                .unwrap_or_else(|e| CheckOutcome::fail(e.to_string())));
        if !out.is_pass() {
            return Ok(out.context(format!("n={n}")));
        }
    }
    Ok(CheckOutcome::Pass)
}

fn c_kummer(p: &Params, _: &mut PointSampler) -> Result<CheckOutcome> {
    let lmax = get(p, "L") as usize;
    let n = n_order(p);
    let a = mono(1, &[(VarId::Z, 2), (VarId::Q, 1)]);
    let mut items: Vec<(String, Result<CheckOutcome>)> = (0..=lmax)
        .map(|l| (format!("terminating L={l}"), qhyper::check_kummer(&a, KummerMode::Terminating { l }, 0)))
        .collect();
    items.push(("limit".into(), qhyper::check_kummer(&a, KummerMode::Limit, n)));
    items.push(("generic b".into(), qhyper::check_kummer(&LaurentPoly::var(VarId::A), KummerMode::Generic, n.min(10))));
    first_fail(items)
}

fn c_heine(p: &Params, sampler: &mut PointSampler) -> Result<CheckOutcome> {
    let n = n_order(p);
    let points = get(p, "points") as usize;
    let m = |s: &[(VarId, i64)]| mono(1, s);
    let (a, b, c) = (m(&[(VarId::A, 1), (VarId::Q, 1)]), m(&[(VarId::B, 1), (VarId::Q, 1)]), m(&[(VarId::C, 1), (VarId::Q, 1)]));
    let items = vec![
        ("generic".to_string(), qhyper::check_heine3_truncated(&a, &b, &c, &m(&[(VarId::Z, 1), (VarId::Q, 1)]), n.min(10))),
        (
            "a = q^-2".to_string(),
            qhyper::check_heine3_truncated(&q(-2), &b, &c, &m(&[(VarId::Z, 1), (VarId::Q, 3)]), n),
        ),
        (
            "a = q^-1".to_string(),
            qhyper::check_heine3_truncated(&q(-1), &b, &c, &m(&[(VarId::Z, 1), (VarId::Q, 2)]), n),
        ),
        (
            "points".to_string(),
            at_points(sampler, &[VarId::A, VarId::B, VarId::C, VarId::Z], points, |at| qhyper::check_heine3_at(n.min(10), at)),
        ),
    ];
    first_fail(items)
}

fn c_sears_carlitz(p: &Params, sampler: &mut PointSampler) -> Result<CheckOutcome> {
    let nmax = get(p, "n") as usize;
    let points = get(p, "points") as usize;
    first_fail((0..=nmax).map(|n| {
        (
            format!("n={n}"),
            at_points(sampler, &[VarId::B, VarId::C, VarId::Z, VarId::Q], points, |at| qhyper::check_sears_carlitz_at(n, at)),
        )
    }))
}

// ---- the table ----

const fn l_param(max: i64, default: i64, full: i64) -> ParamDef {
    ParamDef::swept("L", 0, max, default, (0, full))
}

const fn n_trunc(default: i64) -> ParamDef {
    ParamDef::fixed("N", 0, 60, default)
}

#[allow(clippy::too_many_arguments)]
const fn entry(
    id: &'static str,
    tag: &'static str,
    title: &'static str,
    strategy: Strategy,
    expect: Expectation,
    params: &'static [ParamDef],
    sides: Option<SidesFn>,
    check: Option<CheckFn>,
) -> IdentityDescriptor {
    IdentityDescriptor { id, tag, title, strategy, expect, params, sides, check }
}

use Expectation::{Fail, Pass};
use Strategy::{ClearDenominators, Counts, Exact, RationalPoints, Recurrence, TruncatedSeries};

static PARAMS_L15: [ParamDef; 1] = [l_param(30, 3, 15)];
static PARAMS_L12: [ParamDef; 1] = [l_param(24, 3, 12)];
static PARAMS_L12_FROM1: [ParamDef; 1] = [ParamDef::swept("L", 1, 24, 1, (1, 12))];
static PARAMS_L10: [ParamDef; 1] = [l_param(20, 3, 10)];
static PARAMS_L10_FROM1: [ParamDef; 1] = [ParamDef::swept("L", 1, 20, 3, (1, 10))];
static PARAMS_L8: [ParamDef; 1] = [l_param(16, 3, 8)];
static PARAMS_N20: [ParamDef; 1] = [n_trunc(20)];
static PARAMS_N25: [ParamDef; 1] = [n_trunc(25)];
static PARAMS_N30: [ParamDef; 1] = [n_trunc(30)];
static PARAMS_REC_1_13: [ParamDef; 1] = [ParamDef::fixed("L", 4, 16, 8)];
static PARAMS_REC_6_12: [ParamDef; 1] = [ParamDef::fixed("L", 1, 20, 10)];
static PARAMS_EULER_6_5: [ParamDef; 2] = [l_param(12, 2, 6), n_trunc(30)];
static PARAMS_KEY_3_6: [ParamDef; 5] = [
    n_trunc(20),
    ParamDef::fixed("max_ijk", 0, 6, 4),
    ParamDef::optional("i", 0, 8, 0),
    ParamDef::optional("j", 0, 8, 0),
    ParamDef::optional("k", 0, 8, 0),
];
static PARAMS_KEY_3_7: [ParamDef; 5] = [
    l_param(16, 3, 8),
    ParamDef::fixed("max_ijk", 0, 6, 4),
    ParamDef::optional("i", 0, 8, 0),
    ParamDef::optional("j", 0, 8, 0),
    ParamDef::optional("k", 0, 8, 0),
];
static PARAMS_SEC2_13: [ParamDef; 1] = [l_param(14, 3, 10)];
static PARAMS_SEC2_17: [ParamDef; 1] = [l_param(12, 3, 8)];
static PARAMS_COUNT_N20: [ParamDef; 1] = [ParamDef::swept("n", 0, 40, 6, (0, 20))];
static PARAMS_COUNT_N30: [ParamDef; 1] = [ParamDef::fixed("n", 0, 60, 30)];
static PARAMS_COUNT_UPTO20: [ParamDef; 1] = [ParamDef::fixed("n", 0, 40, 20)];
static PARAMS_LEMMA12: [ParamDef; 2] = [ParamDef::fixed("i", 0, 8, 5), n_trunc(20)];
static PARAMS_LEMMA3: [ParamDef; 2] = [l_param(12, 3, 8), ParamDef::fixed("i", 0, 8, 6)];
static PARAMS_SYL_LIMIT: [ParamDef; 2] = [ParamDef::fixed("L", 0, 30, 16), n_trunc(12)];
static PARAMS_JAC_LIMIT: [ParamDef; 2] = [ParamDef::fixed("L", 0, 30, 12), n_trunc(12)];
static PARAMS_KEY_LIMIT: [ParamDef; 3] = [ParamDef::fixed("L", 0, 30, 16), n_trunc(8), ParamDef::fixed("max_ijk", 0, 4, 2)];
static PARAMS_WEIGHT_L: [ParamDef; 1] = [ParamDef::fixed("l", 1, 30, 20)];
static PARAMS_WEIGHT_N18: [ParamDef; 1] = [ParamDef::fixed("N", 0, 24, 18)];
static PARAMS_WEIGHT_J: [ParamDef; 1] = [ParamDef::fixed("j", 0, 40, 12)];
static PARAMS_GOLLNITZ_N40: [ParamDef; 1] = [ParamDef::fixed("N", 0, 60, 40)];
static PARAMS_THM2: [ParamDef; 2] = [ParamDef::fixed("N", 0, 24, 16), ParamDef::fixed("max_ijk", 0, 6, 4)];
static PARAMS_THM3: [ParamDef; 3] = [
    ParamDef::swept("L", 0, 12, 4, (0, 8)),
    ParamDef::fixed("N", 0, 24, 16),
    ParamDef::fixed("max_ijk", 0, 6, 4),
];
static PARAMS_NONE: [ParamDef; 0] = [];
static PARAMS_EULER_SUB: [ParamDef; 1] = [ParamDef::fixed("N", 0, 40, 25)];
static PARAMS_CAUCHY: [ParamDef; 2] = [ParamDef::fixed("n", 0, 16, 8), n_trunc(20)];
static PARAMS_CHU: [ParamDef; 2] = [ParamDef::fixed("n", 0, 16, 8), ParamDef::fixed("points", 1, 50, 5)];
static PARAMS_KUMMER: [ParamDef; 2] = [ParamDef::fixed("L", 0, 12, 6), n_trunc(12)];
static PARAMS_HEINE: [ParamDef; 2] = [n_trunc(12), ParamDef::fixed("points", 1, 50, 5)];
static PARAMS_SEARS: [ParamDef; 2] = [ParamDef::fixed("n", 0, 10, 6), ParamDef::fixed("points", 1, 50, 5)];

fn build() -> Vec<IdentityDescriptor> {
    let mut v = vec![
        entry("jacobi-1.1-trunc", "Eq 1.1", "Jacobi triple product, and its image under q -> q^2, z -> zq", TruncatedSeries, Pass, &PARAMS_N30, Some(s_jacobi_1_1), Some(c_jacobi_1_1)),
        entry("jacobi-1.5-trunc", "Eq 1.5", "Jacobi triple product, single-sum form times (1+z)", TruncatedSeries, Pass, &PARAMS_N30, Some(s_jacobi_1_5), None),
        entry("jacobi-1.7-trunc", "Eq 1.7", "Jacobi triple product in base q^2", TruncatedSeries, Pass, &PARAMS_N30, Some(s_jacobi_1_7), None),
        entry("macmahon-1.8-as-printed", "Eq 1.8", "MacMahon's polynomial Jacobi identity with the printed sign", Exact, Fail, &PARAMS_L12_FROM1, Some(s_macmahon_printed), None),
        entry("macmahon-1.8-corrected", "Eq 1.8", "MacMahon's polynomial Jacobi identity, sign corrected", Exact, Pass, &PARAMS_L12, Some(s_macmahon_corrected), None),
        entry("euler-1.11", "Eq 1.11", "Euler's finite q-binomial sum", Exact, Pass, &PARAMS_L15, Some(s_euler_1_11), None),
        entry("jacobi-1.12", "Eq 1.12", "Polynomial analogue of Jacobi's identity (cross-multiplied by 1+z)", Exact, Pass, &PARAMS_L12, Some(s_jacobi_1_12), None),
        entry("rec-1.13", "Eq 1.13", "Order-4 recurrence for both sides of the polynomial Jacobi identity", Recurrence, Pass, &PARAMS_REC_1_13, None, Some(c_rec_1_13)),
        entry("cauchy-1.16", "Eq 1.16", "q-binomial theorem, terminating and truncated", Exact, Pass, &PARAMS_CAUCHY, None, Some(c_cauchy_1_16)),
        entry("chu-vandermonde-1.17", "Eq 1.17", "q-Chu-Vandermonde sum, symbolic and at rational points", RationalPoints, Pass, &PARAMS_CHU, None, Some(c_chu_vandermonde)),
        entry("kummer-1.18", "Eq 1.18", "q-Kummer (Bailey-Daum) sum: terminating, limit and generic", TruncatedSeries, Pass, &PARAMS_KUMMER, None, Some(c_kummer)),
        entry("heine-1.19", "Eq 1.19", "Heine's third transformation", TruncatedSeries, Pass, &PARAMS_HEINE, None, Some(c_heine)),
        entry("sears-carlitz-1.20", "Eq 1.20", "Sears-Carlitz transformation of a terminating 3phi2", RationalPoints, Pass, &PARAMS_SEARS, None, Some(c_sears_carlitz)),
        entry("sec2-2.13", "Eq 2.13", "Diagonal sum of the hypergeometric derivation", ClearDenominators, Pass, &PARAMS_SEC2_13, Some(s_sec2_2_13), None),
        entry("sec2-2.17", "Eq 2.17", "Half-plane sum of the hypergeometric derivation (triangle i+j <= L)", ClearDenominators, Pass, &PARAMS_SEC2_17, Some(s_sec2_2_17), None),
        entry("sec2-2.18", "Eq 2.18", "Reflected half-plane sum (triangle i+j <= L)", ClearDenominators, Pass, &PARAMS_SEC2_17, Some(s_sec2_2_18), None),
        entry("limit-2.20", "Eq 2.20", "Infinite triple sum equals the Jacobi product", TruncatedSeries, Pass, &PARAMS_N20, Some(s_limit_2_20), None),
        entry("cauchy-2.21", "Eq 2.21", "Limiting form of Euler's sum", TruncatedSeries, Pass, &PARAMS_N30, Some(s_cauchy_2_21), None),
        entry("gollnitz-thm1", "Thm 1", "Gollnitz's theorem A(N) = B(N)", Counts, Pass, &PARAMS_GOLLNITZ_N40, None, Some(c_gollnitz_thm1)),
        entry("gollnitz-map-3.5", "Eq 3.5", "Residue map sends Type-1 partitions onto the first Gollnitz family", Counts, Pass, &PARAMS_GOLLNITZ_N40, None, Some(c_gollnitz_map)),
        entry("counts-thm2", "Thm 2", "Type-1 counts G versus triples of distinct partitions P", Counts, Pass, &PARAMS_THM2, None, Some(c_thm2)),
        entry("counts-3.8", "Eq 3.8", "Bounded counting theorem G_L versus P_L", Counts, Pass, &PARAMS_THM3, None, Some(c_thm3)),
        entry("counts-examples", "Eq 3.8", "Hand-countable Type-1 examples", Counts, Pass, &PARAMS_NONE, None, Some(c_gl_examples)),
        entry("key-3.6", "Eq 3.6", "Key Identity at fixed i, j, k", TruncatedSeries, Pass, &PARAMS_KEY_3_6, Some(s_key_3_6), Some(c_key_3_6)),
        entry("key-3.7", "Eq 3.7", "Bounded Key Identity", Exact, Pass, &PARAMS_KEY_3_7, Some(s_key_3_7), Some(c_key_3_7)),
        entry("limit-3.7", "Eq 3.7", "Bounded Key Identity at large L agrees with the Key Identity", TruncatedSeries, Pass, &PARAMS_KEY_LIMIT, None, Some(c_limit_3_7)),
        entry("weights-appendix", "Eq A.1-A.16", "Color recurrences equal the closed forms; chain weights", Exact, Pass, &PARAMS_WEIGHT_L, None, Some(c_weights_appendix)),
        entry("weights-factorization", "Eq 4.2", "Partition weight is the product of chain weights (coloring oracle)", Counts, Pass, &PARAMS_WEIGHT_N18, None, Some(c_weights_factorization)),
        entry("thm4-4.4", "Eq 4.4", "Theorem 4: weighted distinct partitions with parts <= L", Exact, Pass, &PARAMS_L8, Some(s_thm4), None),
        entry("cor1-4.6", "Eq 4.6", "Corollary 1: weighted distinct partitions equal (-Aq,-Bq,-Cq)_inf", TruncatedSeries, Pass, &PARAMS_N20, Some(s_cor1), None),
        entry("collapse-4.7", "Eq 4.7", "Chain weights at C = -1", Exact, Pass, &PARAMS_WEIGHT_L, None, Some(c_collapse_4_7)),
        entry("collapse-4.8", "Eq 4.8", "Chain weights at A = 1/B = z, C = -1", Exact, Pass, &PARAMS_WEIGHT_L, None, Some(c_collapse_4_8)),
        entry("chain-size-4.9", "Eq 4.9", "Chains starting at 1 have size T_l", Counts, Pass, &PARAMS_WEIGHT_N18, None, Some(c_chain_size_4_9)),
        entry("jacobi-4.10", "Eq 4.10", "Theorem 4 specialized reproduces the polynomial Jacobi identity term by term", Exact, Pass, &PARAMS_L8, Some(s_jacobi_4_10), Some(c_jacobi_4_10)),
        entry("gauss-4.11", "Eq 4.11", "Polynomial version of Gauss's triangular-number formula", Exact, Pass, &PARAMS_L12, Some(s_gauss_4_11), None),
        entry("gauss-4.12", "Eq 4.12", "Gauss's formula: sum and three product forms pairwise", TruncatedSeries, Pass, &PARAMS_N30, None, Some(c_gauss_4_12)),
        entry("shanks-4.13", "Eq 4.13", "Shanks's formula, odd length (cleared by (q;q^2)_L)", ClearDenominators, Pass, &PARAMS_L10, Some(s_shanks_4_13), None),
        entry("shanks-4.14", "Eq 4.14", "Shanks's formula, even length (cleared by (q;q^2)_L)", ClearDenominators, Pass, &PARAMS_L10, Some(s_shanks_4_14), None),
        entry("collapse-4.15", "Eq 4.15", "Chain weights at A = -B = z, C = 1", Exact, Pass, &PARAMS_WEIGHT_L, None, Some(c_collapse_4_15)),
        entry("lebesgue-4.16", "Eq 4.16", "Lebesgue-type product forms and the E(n,j) count series", TruncatedSeries, Pass, &PARAMS_N20, None, Some(c_lebesgue_4_16)),
        entry("andrews-euler-4.17", "Eq 4.17", "V(n,k) and E(n,j) generating polynomials", Counts, Pass, &PARAMS_COUNT_N20, Some(s_andrews_euler_4_17), None),
        entry("andrews-euler-4.18", "Eq 4.18", "Andrews's generalization of Euler's partition theorem", Counts, Pass, &PARAMS_COUNT_UPTO20, None, Some(c_andrews_euler_4_18)),
        entry("euler-4.19", "Eq 4.19", "Euler's odd-distinct partition theorem", Counts, Pass, &PARAMS_COUNT_N30, None, Some(c_euler_4_19)),
        entry("lebesgue-4.20", "Eq 4.20", "Lebesgue's identity", TruncatedSeries, Pass, &PARAMS_N25, Some(s_lebesgue_4_20), None),
        entry("twoparam-5.1", "Eq 5.1", "Two-parameter Jacobi identity (cleared by (1+A)(1+B)) and its A = 1/B reduction", TruncatedSeries, Pass, &PARAMS_N25, Some(s_twoparam), Some(c_twoparam)),
        entry("lemma1-5.2", "Eq 5.2", "Lemma 1: weighted partitions into exactly i parts", Counts, Pass, &PARAMS_LEMMA12, Some(s_lemma1), Some(c_lemma1)),
        entry("lemma2-5.8", "Eq 5.8", "Lemma 2: weighted partitions into i nonnegative parts", Counts, Pass, &PARAMS_LEMMA12, Some(s_lemma2), Some(c_lemma2)),
        entry("euler-subtraction", "Eq 5.9", "Subtracting 1, 2, ..., t from distinct parts is a bijection", Counts, Pass, &PARAMS_EULER_SUB, None, Some(c_euler_subtraction)),
        entry("weight-5.11-corrected", "Eq 5.11", "Partial fractions of the chain weight at 1, sum from s = 1", Exact, Pass, &PARAMS_WEIGHT_J, None, Some(c_weight_5_11_corrected)),
        entry("weight-5.11-as-printed", "Eq 5.11", "Partial fractions of the chain weight at 1, printed sum from s = 0", Exact, Fail, &PARAMS_WEIGHT_J, None, Some(c_weight_5_11_printed)),
        entry("lebesgue-5.15", "Eq 5.15", "Lebesgue's identity from the Lemma 2 oracle with y = z^2", TruncatedSeries, Pass, &PARAMS_N25, Some(s_lebesgue_5_15), None),
        entry("kummer-poly-6.2", "Eq 6.2", "Polynomial Lebesgue identity from terminating q-Kummer", Exact, Pass, &PARAMS_L10, Some(s_kummer_poly), None),
        entry("lemma3-6.3", "Eq 6.3", "Lemma 3: bounded nonnegative parts", Counts, Pass, &PARAMS_LEMMA3, Some(s_lemma3), Some(c_lemma3)),
        entry("euler-6.5", "Eq 6.5", "Euler's expansion of 1/(t)_{L+1} at t = zq", TruncatedSeries, Pass, &PARAMS_EULER_6_5, Some(s_euler_6_5), None),
        entry("new-lebesgue-6.10", "Eq 6.10", "New polynomial Lebesgue identity (also Eq 1.14)", Exact, Pass, &PARAMS_L10, Some(s_new_lebesgue), None),
        entry("limit-6.10", "Eq 6.10", "Polynomial Lebesgue identity at large L agrees with the product", TruncatedSeries, Pass, &PARAMS_JAC_LIMIT, None, Some(c_limit_6_10)),
        entry("andrews-6.11", "Eq 6.11", "Andrews's polynomial Lebesgue identity", Exact, Pass, &PARAMS_L10, Some(s_andrews_6_11), None),
        entry("rec-6.12", "Eq 6.12", "Second-order recurrence with F_0 = 1, F_1 = 1+q for both sides of 6.11", Recurrence, Pass, &PARAMS_REC_6_12, None, Some(c_rec_6_12)),
        entry("combined-6.14", "Eq 6.14", "Andrews's sum equals the triple sum", Exact, Pass, &PARAMS_L10, Some(s_combined_6_14), None),
        entry("santos-sills-6.15", "Eq 6.15", "Santos-Sills polynomial Lebesgue analogue with q-trinomials", Exact, Pass, &PARAMS_L10, Some(s_santos_sills_6_15), None),
        entry("santos-sills-6.16", "Eq 6.16", "Santos-Sills second analogue with q-trinomials", Exact, Pass, &PARAMS_L10, Some(s_santos_sills_6_16), None),
        entry("santos-sills-6.17-as-printed", "Eq 6.17", "Santos-Sills identity with the trinomial weight printed as q^{T_r}", Exact, Fail, &PARAMS_L10_FROM1, Some(s_santos_sills_printed), None),
        entry("sylvester-poly-7.1", "Eq 7.1", "Polynomial Sylvester identity with q^3-binomials, left bound 3L-1", Exact, Pass, &PARAMS_L8, Some(s_sylvester_7_1), None),
        entry("sylvester-poly-7.1-as-printed", "Eq 7.1", "Polynomial Sylvester identity with the same bound L on both sides", Exact, Fail, &PARAMS_L10_FROM1, Some(s_sylvester_7_1_printed), None),
        entry("limit-7.1", "Eq 7.1", "Polynomial Sylvester identity at large L agrees with (-zq)_inf", TruncatedSeries, Pass, &PARAMS_SYL_LIMIT, None, Some(c_limit_7_1)),
        entry("sylvester-7.3", "Eq 7.3", "Sylvester's identity (with the factor z^n)", TruncatedSeries, Pass, &PARAMS_N30, Some(s_sylvester_7_3), None),
        entry("sylvester-7.3-as-printed", "Eq 7.3", "Sylvester's identity as printed, without z^n", TruncatedSeries, Fail, &PARAMS_N30, Some(s_sylvester_7_3_printed), None),
        entry("limit-1.12", "Eq 1.12", "Polynomial Jacobi identity at large L agrees with the product", TruncatedSeries, Pass, &PARAMS_JAC_LIMIT, None, Some(c_limit_1_12)),
    ];
    v.sort_by_key(|d| d.id);
    v
}

/// All descriptors, sorted by id.
pub fn registry() -> &'static [IdentityDescriptor] {
    static REG: OnceLock<Vec<IdentityDescriptor>> = OnceLock::new();
    REG.get_or_init(build)
}
