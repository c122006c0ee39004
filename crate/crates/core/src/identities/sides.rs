//! Side builders. Each function constructs both sides of one identity from
//! independent code paths; nothing here compares them.

use crate::error::Result;
use crate::partitions::{count_e, count_v, for_each_distinct, oracle_h, oracle_hl, DistinctPartition};
use crate::poly::{LaurentPoly, VarId};
use crate::qfun::{binomial, poch_base, poch_q, qbinom, qbinom_shared, qfact, qmultinom, qtrinomial, tri};
use crate::series::{inv_qfact, poch_inf_of, QSeriesTrunc, SumTerm};
use crate::weights::{partition_weight, Specialization};

pub(crate) fn q(k: i64) -> LaurentPoly {
    LaurentPoly::q_pow(k)
}

pub(crate) fn zp(k: i64) -> LaurentPoly {
    LaurentPoly::var_pow(VarId::Z, k as i32)
}

pub(crate) fn mono(c: i64, powers: &[(VarId, i64)]) -> LaurentPoly {
    let powers: Vec<(VarId, i32)> = powers.iter().map(|&(v, e)| (v, e as i32)).collect();
    LaurentPoly::term(c, &powers)
}

fn sgn(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn qb(top: i64, bottom: i64) -> std::sync::Arc<LaurentPoly> {
    qbinom_shared(top, bottom)
}

fn ser(p: &LaurentPoly, order: usize) -> Result<QSeriesTrunc> {
    QSeriesTrunc::from_poly(p, order)
}

fn one_plus_z() -> LaurentPoly {
    &LaurentPoly::one() + &zp(1)
}

/// `sum_{i,j,k} pre(i,j,k) [L-i; j][L-j; k][L-k; i]` with the binomials in
/// base `q^base`. `pre` supplies the whole prefactor, powers of `q`
/// included. Out-of-range binomials vanish, so indices run over `0..=L`.
pub fn triple_binomial_sum(l: i64, base: u32, pre: impl Fn(i64, i64, i64) -> LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for i in 0..=l.max(0) {
        for j in 0..=l.max(0) {
            let bij = qb(l - i, j);
            if bij.is_zero() {
                continue;
            }
            for k in 0..=l.max(0) {
                let bjk = qb(l - j, k);
                let bki = qb(l - k, i);
                if bjk.is_zero() || bki.is_zero() {
                    continue;
                }
                let prod = &(&*bij * &*bjk) * &*bki;
                let prod = if base == 1 { prod } else { prod.scale_var(VarId::Q, base as i32) };
                out += &(&prod * &pre(i, j, k));
            }
        }
    }
    out
}

fn t3(i: i64, j: i64, k: i64) -> i64 {
    tri(i) + tri(j) + tri(k)
}

// ---- Section 1 ----

/// `sum_j q^{T_j} z^j [L; j]` and `(-qz; q)_L`.
pub fn euler_1_11(l: i64) -> (LaurentPoly, LaurentPoly) {
    let lhs = (0..=l)
        .map(|j| &*qb(l, j) * &mono(1, &[(VarId::Q, tri(j)), (VarId::Z, j)]))
        .sum();
    (lhs, poch_q(&mono(-1, &[(VarId::Q, 1), (VarId::Z, 1)]), l as usize))
}

/// `sum_{|j|<=L} z^j q^{j^2} [2L; L+j]_{q^2}` against
/// `(-qz, s q/z; q^2)_L`, where `s = -1` gives the correct product and
/// `s = +1` the printed `(qz^{-1}; q^2)_L`.
pub fn macmahon_1_8(l: i64, corrected: bool) -> (LaurentPoly, LaurentPoly) {
    let lhs = (-l..=l)
        .map(|j| &qbinom(2 * l, l + j, 2) * &mono(1, &[(VarId::Z, j), (VarId::Q, j * j)]))
        .sum();
    let second = mono(if corrected { -1 } else { 1 }, &[(VarId::Q, 1), (VarId::Z, -1)]);
    let rhs = &poch_base(&mono(-1, &[(VarId::Q, 1), (VarId::Z, 1)]), 2, l as usize) * &poch_base(&second, 2, l as usize);
    (lhs, rhs)
}

/// Left side of the polynomial Jacobi identity: `sum_{n<=L} q^{T_n} (z^{-n} + z^{1+n})/(1+z)`,
/// each quotient divided out exactly.
pub fn jacobi_1_12_lhs(l: i64) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::zero();
    for n in 0..=l {
        let num = &zp(-n) + &zp(n + 1);
        out += &num.exact_divide(&one_plus_z())?.shift_q(tri(n));
    }
    Ok(out)
}

/// `sum q^{T_i+T_j+T_k} z^{i-j} (-1)^k [L-i; j][L-j; k][L-k; i]`.
pub fn jacobi_1_12_rhs(l: i64) -> LaurentPoly {
    triple_binomial_sum(l, 1, |i, j, k| mono(sgn(k), &[(VarId::Q, t3(i, j, k)), (VarId::Z, i - j)]))
}

/// The order-4 recurrence residual at `L` for the sequence `s`
/// (`s[L..=L+4]` are used).
pub fn rec_1_13_residual(s: &[LaurentPoly], l: i64) -> LaurentPoly {
    let at = |m: i64| &s[m as usize];
    let z = zp(1);
    let qz = |e: i64, ze: i64, c: i64| mono(c, &[(VarId::Q, e), (VarId::Z, ze)]);
    let c3 = &(&(&-&z + &qz(l + 4, 0, -1)) + &qz(l + 4, 1, 1)) + &qz(l + 4, 2, -1);
    let c2 = &(&(&LaurentPoly::one() - &z) + &zp(2)) * &(&q(l + 4) - &q(2 * l + 7));
    let c1 = &(&(&(&LaurentPoly::one() - &z) + &zp(2)) + &qz(l + 2, 1, 1)) * &q(2 * l + 7);
    let c0 = qz(3 * l + 9, 1, -1);
    let mut r = &z * at(l + 4);
    r += &(&c3 * at(l + 3));
    r += &(&c2 * at(l + 2));
    r += &(&c1 * at(l + 1));
    r += &(&c0 * at(l));
    r
}

/// `F_L - (1 + q^L) F_{L-1} + z^2 q^L F_{L-2}`.
pub fn rec_6_12_residual(f: &[LaurentPoly], l: i64) -> LaurentPoly {
    let at = |m: i64| &f[m as usize];
    &(at(l) - &(&(&LaurentPoly::one() + &q(l)) * at(l - 1))) + &(&mono(1, &[(VarId::Q, l), (VarId::Z, 2)]) * at(l - 2))
}

/// Largest `m >= 0` with `f(m) <= order`, for increasing `f`.
fn max_index(order: usize, f: impl Fn(i64) -> i64) -> i64 {
    let mut m = 0;
    while f(m + 1) <= order as i64 {
        m += 1;
    }
    m
}

/// `sum_{j in Z} z^j q^{j(j-1)/2}` and `(-z, -q/z, q; q)_inf`.
pub fn jacobi_1_1(order: usize) -> Result<(QSeriesTrunc, QSeriesTrunc)> {
    let m = max_index(order, |j| j * (j + 1) / 2) + 1;
    let lhs: LaurentPoly = (-m..=m)
        .filter(|j| j * (j - 1) / 2 <= order as i64)
        .map(|j| mono(1, &[(VarId::Z, j), (VarId::Q, j * (j - 1) / 2)]))
        .sum();
    let rhs = poch_inf_of(&mono(-1, &[(VarId::Z, 1)]), 1, order)?
        .mul_series(&poch_inf_of(&mono(-1, &[(VarId::Q, 1), (VarId::Z, -1)]), 1, order)?)?
        .mul_series(&poch_inf_of(&q(1), 1, order)?)?;
    Ok((ser(&lhs, order)?, rhs))
}

/// `sum_{j in Z} z^j q^{j^2}` and `(q^2, -qz, -q/z; q^2)_inf`.
pub fn jacobi_1_7(order: usize) -> Result<(QSeriesTrunc, QSeriesTrunc)> {
    let m = max_index(order, |j| j * j);
    let lhs: LaurentPoly = (-m..=m).map(|j| mono(1, &[(VarId::Z, j), (VarId::Q, j * j)])).sum();
    let rhs = poch_inf_of(&q(2), 2, order)?
        .mul_series(&poch_inf_of(&mono(-1, &[(VarId::Q, 1), (VarId::Z, 1)]), 2, order)?)?
        .mul_series(&poch_inf_of(&mono(-1, &[(VarId::Q, 1), (VarId::Z, -1)]), 2, order)?)?;
    Ok((ser(&lhs, order)?, rhs))
}

/// `(-qz, -q/z, q; q)_inf` through `q^order`.
pub fn jacobi_product(order: usize) -> Result<QSeriesTrunc> {
    crate::qhyper::jacobi_product(order)
}

/// Both sides of the single-sum Jacobi form times `1 + z`:
/// `sum_j q^{T_j} (z^{-j} + z^{1+j})` and `(1+z) (-qz, -q/z, q; q)_inf`.
pub fn jacobi_1_5(order: usize) -> Result<(QSeriesTrunc, QSeriesTrunc)> {
    let m = max_index(order, tri);
    let lhs: LaurentPoly = (0..=m).map(|j| (&zp(-j) + &zp(1 + j)).shift_q(tri(j))).sum();
    let rhs = jacobi_product(order)?.mul_poly(&one_plus_z())?;
    Ok((ser(&lhs, order)?, rhs))
}

/// `sum_i q^{T_i} z^i / (q)_i` and `(-qz)_inf`.
pub fn cauchy_2_21(order: usize) -> Result<(QSeriesTrunc, QSeriesTrunc)> {
    let lhs = QSeriesTrunc::from_sum(
        (0..).map(|i: i64| {
            SumTerm::lazy(tri(i), move |o| {
                inv_qfact(i as usize, o).mul_poly(&mono(1, &[(VarId::Q, tri(i)), (VarId::Z, i)]))
            })
        }),
        order,
    )?;
    Ok((lhs, poch_inf_of(&mono(-1, &[(VarId::Q, 1), (VarId::Z, 1)]), 1, order)?))
}

/// `1 / (t)_{L+1}` and `sum_n t^n [n+L; n]` at `t = zq`.
pub fn euler_6_5(l: i64, order: usize) -> Result<(QSeriesTrunc, QSeriesTrunc)> {
    let t = mono(1, &[(VarId::Z, 1), (VarId::Q, 1)]);
    let lhs = ser(&poch_q(&t, l as usize + 1), order)?.inverse()?;
    let rhs = QSeriesTrunc::from_sum(
        (0..).map(|n: i64| {
            SumTerm::lazy(n, move |o| {
                ser(&(&*qb(n + l, n) * &mono(1, &[(VarId::Z, n), (VarId::Q, n)])), o)
            })
        }),
        order,
    )?;
    Ok((lhs, rhs))
}

// ---- Section 3 ----

/// Constrained tuples `(a, b, c, ab, ac, bc)` for given `i, j, k`.
pub fn constrained_tuples(i: i64, j: i64, k: i64) -> Vec<[i64; 6]> {
    let mut out = Vec::new();
    for ab in 0..=i.min(j) {
        for ac in 0..=(i - ab).min(k) {
            for bc in 0..=(j - ab).min(k - ac) {
                let (a, b, c) = (i - ab - ac, j - ab - bc, k - ac - bc);
                out.push([a, b, c, ab, ac, bc]);
            }
        }
    }
    out
}

/// Both sides of the Key Identity at fixed `i, j, k` through `q^order`.
pub fn key_3_6(i: i64, j: i64, k: i64, order: usize) -> Result<(QSeriesTrunc, QSeriesTrunc)> {
    let mut lhs = QSeriesTrunc::zero(order);
    for [a, b, c, ab, ac, bc] in constrained_tuples(i, j, k) {
        let t = a + b + c + ab + ac + bc;
        let e = tri(t) + tri(ab) + tri(ac) + tri(bc - 1);
        let num = &(&(&LaurentPoly::one() - &q(a)) + &q(a + bc)) * &q(e);
        let den: LaurentPoly = [a, b, c, ab, ac, bc].iter().map(|&x| qfact(x as usize)).product();
        lhs.add_assign(&ser(&num, order)?.mul_series(&ser(&den, order)?.inverse()?)?)?;
    }
    let den = &(&qfact(i as usize) * &qfact(j as usize)) * &qfact(k as usize);
    let rhs = ser(&q(t3(i, j, k)), order)?.mul_series(&ser(&den, order)?.inverse()?)?;
    Ok((lhs, rhs))
}

/// Both sides of the bounded Key Identity at `i, j, k, L`.
pub fn key_3_7(i: i64, j: i64, k: i64, l: i64) -> (LaurentPoly, LaurentPoly) {
    let mut lhs = LaurentPoly::zero();
    for [a, b, c, ab, ac, bc] in constrained_tuples(i, j, k) {
        let t = a + b + c + ab + ac + bc;
        let m = l - t;
        let common = &(&*qb(m + b, b) * &*qb(m + c, c)) * &(&*qb(m, ab) * &*qb(m, ac));
        if common.is_zero() {
            continue;
        }
        let first = &(&*qb(m + a, a) * &*qb(m, bc)) * &q(bc);
        let second = &*qb(m + a - 1, a - 1) * &*qb(m, bc - 1);
        let braces = &common * &(&first + &second);
        lhs += &braces.shift_q(tri(t) + tri(ab) + tri(ac) + tri(bc - 1));
    }
    let rhs = (&(&*qb(l - i, j) * &*qb(l - j, k)) * &*qb(l - k, i)).shift_q(t3(i, j, k));
    (lhs, rhs)
}

// ---- Section 4 ----

/// `sum_{pi in D_L} w(pi) q^{|pi|}` with `w` applied to each distinct
/// partition with parts `<= L`.
pub fn weighted_distinct_sum(l: i64, w: impl Fn(&DistinctPartition) -> LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let max = l.max(0) as u32;
    for_each_distinct(max, max * (max + 1) / 2, &mut |ps| {
        let p = DistinctPartition::new(ps.to_vec()).expect("increasing parts");
        out += &w(&p).shift_q(p.size() as i64);
    });
    out
}

/// Theorem 4: weighted sum over `D_L` and the triple binomial sum in `q, A, B, C`.
pub fn thm4_4_4(l: i64) -> (LaurentPoly, LaurentPoly) {
    let lhs = weighted_distinct_sum(l, partition_weight);
    let rhs = thm4_rhs(l);
    (lhs, rhs)
}

pub fn thm4_rhs(l: i64) -> LaurentPoly {
    triple_binomial_sum(l, 1, |i, j, k| {
        mono(1, &[(VarId::Q, t3(i, j, k)), (VarId::A, i), (VarId::B, j), (VarId::C, k)])
    })
}

/// Distinct partitions with weights through `q^order` against
/// `(-Aq, -Bq, -Cq; q)_inf`.
pub fn cor1_4_6(order: usize) -> Result<(QSeriesTrunc, QSeriesTrunc)> {
    let mut lhs = LaurentPoly::zero();
    for_each_distinct(order as u32, order as u32, &mut |ps| {
        let p = DistinctPartition::new(ps.to_vec()).expect("increasing parts");
        lhs += &partition_weight(&p).shift_q(p.size() as i64);
    });
    let mut rhs = QSeriesTrunc::one(order);
    for v in [VarId::A, VarId::B, VarId::C] {
        rhs = rhs.mul_series(&poch_inf_of(&mono(-1, &[(v, 1), (VarId::Q, 1)]), 1, order)?)?;
    }
    Ok((ser(&lhs, order)?, rhs))
}

/// The weighted sum over `D_L` at `A = z, B = 1/z, C = -1`, against the
/// left side of the polynomial Jacobi identity.
pub fn jacobi_4_10(l: i64) -> Result<(LaurentPoly, LaurentPoly)> {
    let lhs = weighted_distinct_sum(l, |p| Specialization::ReciprocalZ.apply(&partition_weight(p)));
    Ok((lhs, jacobi_1_12_lhs(l)?))
}

/// `sum_{l<=L} q^{T_l}` and the triple sum with `(-1)^k`.
pub fn gauss_4_11(l: i64) -> (LaurentPoly, LaurentPoly) {
    let lhs = (0..=l).map(|n| q(tri(n))).sum();
    let rhs = triple_binomial_sum(l, 1, |i, j, k| mono(sgn(k), &[(VarId::Q, t3(i, j, k))]));
    (lhs, rhs)
}

/// `sum_l q^{T_l}` and its three product forms, in that order.
pub fn gauss_4_12(order: usize) -> Result<[QSeriesTrunc; 4]> {
    let m = max_index(order, tri);
    let sum = ser(&(0..=m).map(|n| q(tri(n))).sum(), order)?;
    let mq = poch_inf_of(&-q(1), 1, order)?;
    let first = mq.mul_series(&mq)?.mul_series(&poch_inf_of(&q(1), 1, order)?)?;
    let q2 = poch_inf_of(&q(2), 2, order)?;
    let second = mq.mul_series(&q2)?;
    let third = q2.mul_series(&poch_inf_of(&q(1), 2, order)?.inverse()?)?;
    Ok([sum, first, second, third])
}

/// Both sides of the Shanks formula times `(q; q^2)_L`. `odd` selects the
/// sum up to `2L - 1` (with `i < L`); otherwise up to `2L` (with `i <= L`).
pub fn shanks(l: i64, odd: bool) -> (LaurentPoly, LaurentPoly) {
    let clear = poch_base(&q(1), 2, l as usize);
    let top = if odd { 2 * l - 1 } else { 2 * l };
    let sum: LaurentPoly = (0..=top).map(|n| q(tri(n))).sum();
    let imax = if odd { l - 1 } else { l };
    let rhs = (0..=imax)
        .map(|i| {
            let tail = &poch_base(&q(2 * i + 2), 2, (l - i) as usize) * &poch_base(&q(1), 2, i as usize);
            tail.shift_q(i * (2 * l + 1))
        })
        .sum();
    (&sum * &clear, rhs)
}

/// The four forms of the `A = -B = z, C = 1` product: `(-zq, zq, -q; q)_inf`,
/// `(z^2q^2; q^2)_inf (-q)_inf`, `(z^2q^2; q^2)_inf / (q; q^2)_inf` and the
/// count series `sum E(n, j) q^n (-z^2)^j`.
pub fn lebesgue_4_16(order: usize) -> Result<[QSeriesTrunc; 4]> {
    let a = poch_inf_of(&mono(-1, &[(VarId::Z, 1), (VarId::Q, 1)]), 1, order)?
        .mul_series(&poch_inf_of(&mono(1, &[(VarId::Z, 1), (VarId::Q, 1)]), 1, order)?)?
        .mul_series(&poch_inf_of(&-q(1), 1, order)?)?;
    let z2q2 = poch_inf_of(&mono(1, &[(VarId::Z, 2), (VarId::Q, 2)]), 2, order)?;
    let b = z2q2.mul_series(&poch_inf_of(&-q(1), 1, order)?)?;
    let c = z2q2.mul_series(&poch_inf_of(&q(1), 2, order)?.inverse()?)?;
    let mut counts = LaurentPoly::zero();
    for n in 0..=order as i64 {
        for j in 0..=n {
            let e = count_e(n as u32, j as u32);
            if e > 0 {
                counts += &mono(sgn(j) * e as i64, &[(VarId::Q, n), (VarId::Z, 2 * j)]);
            }
        }
    }
    Ok([a, b, c, ser(&counts, order)?])
}

/// `sum_k V(n,k) (1 - z^2)^k` and `sum_j E(n,j) (-z^2)^j`.
pub fn andrews_euler_4_17(n: u32) -> (LaurentPoly, LaurentPoly) {
    let one_minus = &LaurentPoly::one() - &zp(2);
    let lhs = (0..=n)
        .map(|k| one_minus.pow(k).scale(&count_v(n, k).into()))
        .sum();
    let rhs = (0..=n)
        .map(|j| mono(sgn(j as i64), &[(VarId::Z, 2 * j as i64)]).scale(&count_e(n, j).into()))
        .sum();
    (lhs, rhs)
}

/// `E(n, j)` and `sum_k C(k, j) V(n, k)` for every `j`.
pub fn andrews_euler_4_18(n: u32) -> Vec<(u32, i128, i128)> {
    (0..=n)
        .map(|j| {
            let rhs: num_bigint::BigInt = (j..=n).map(|k| binomial(k as i64, j as i64) * count_v(n, k)).sum();
            (j, count_e(n, j) as i128, i128::try_from(rhs).expect("small count"))
        })
        .collect()
}

/// `(z^2q^2; q^2)_inf (-q)_inf` through `q^order`.
pub fn lebesgue_product(order: usize) -> Result<QSeriesTrunc> {
    poch_inf_of(&mono(1, &[(VarId::Z, 2), (VarId::Q, 2)]), 2, order)?.mul_series(&poch_inf_of(&-q(1), 1, order)?)
}

/// `sum_i q^{T_i} (z^2 q)_i / (q)_i` and the Lebesgue product.
pub fn lebesgue_4_20(order: usize) -> Result<(QSeriesTrunc, QSeriesTrunc)> {
    let lhs = QSeriesTrunc::from_sum(
        (0..).map(|i: i64| {
            SumTerm::lazy(tri(i), move |o| {
                let num = poch_q(&mono(1, &[(VarId::Z, 2), (VarId::Q, 1)]), i as usize).shift_q(tri(i));
                inv_qfact(i as usize, o).mul_poly(&num)
            })
        }),
        order,
    )?;
    Ok((lhs, lebesgue_product(order)?))
}

// ---- Section 5 ----

/// Both sides of the two-parameter Jacobi identity times `(1+A)(1+B)`.
pub fn twoparam_5_1(order: usize) -> Result<(QSeriesTrunc, QSeriesTrunc)> {
    let lhs = twoparam_lhs(order)?;
    let clear = LaurentPoly::term(1, &[]) + p_ab_clear();
    let rhs = poch_inf_of(&mono(-1, &[(VarId::A, 1), (VarId::Q, 1)]), 1, order)?
        .mul_series(&poch_inf_of(&mono(-1, &[(VarId::B, 1), (VarId::Q, 1)]), 1, order)?)?
        .mul_series(&poch_inf_of(&q(1), 1, order)?)?
        .mul_poly(&clear)?;
    Ok((lhs, rhs))
}

/// `A + B + AB`, so that `1 + p_ab_clear() = (1+A)(1+B)`.
fn p_ab_clear() -> LaurentPoly {
    &(&mono(1, &[(VarId::A, 1)]) + &mono(1, &[(VarId::B, 1)])) + &mono(1, &[(VarId::A, 1), (VarId::B, 1)])
}

/// Cleared left side:
/// `sum_{i,j} (-1)^i q^{T_{i+j}+i} (AB)_i/(q)_i {A^{1+j}(1+B) + B^{1+j}(1+A) + (-1)^j (1 - AB)}`.
pub fn twoparam_lhs(order: usize) -> Result<QSeriesTrunc> {
    let ab = mono(1, &[(VarId::A, 1), (VarId::B, 1)]);
    let one_a = &LaurentPoly::one() + &mono(1, &[(VarId::A, 1)]);
    let one_b = &LaurentPoly::one() + &mono(1, &[(VarId::B, 1)]);
    let one_minus_ab = &LaurentPoly::one() - &ab;
    let mut out = QSeriesTrunc::zero(order);
    let imax = max_index(order, |i| i);
    for i in 0..=imax {
        let jmax = (0..).take_while(|&j| tri(i + j) + i <= order as i64).last();
        let Some(jmax) = jmax else { continue };
        let mut inner = LaurentPoly::zero();
        for j in 0..=jmax {
            let braces = &(&(&mono(1, &[(VarId::A, 1 + j)]) * &one_b) + &(&mono(1, &[(VarId::B, 1 + j)]) * &one_a))
                + &one_minus_ab.scale(&sgn(j).into());
            inner += &braces.shift_q(tri(i + j) + i);
        }
        let num = &(&poch_q(&ab, i as usize) * &inner).scale(&sgn(i).into());
        out.add_assign(&inv_qfact(i as usize, order).mul_poly(num)?)?;
    }
    Ok(out)
}

/// `g_i` from its closed form `(-q)^i (y)_i / (q)_i`, `y` carried by `z`.
pub fn lemma1_formula(i: i64, order: usize) -> QSeriesTrunc {
    let num = poch_q(&zp(1), i as usize).shift_q(i).scale(&sgn(i).into());
    inv_qfact(i as usize, order).mul_poly(&num).expect("nonnegative powers")
}

/// `h_i` from its closed form `(yq)_i / (q)_i`.
pub fn lemma2_formula(i: i64, order: usize) -> QSeriesTrunc {
    let num = poch_q(&mono(1, &[(VarId::Z, 1), (VarId::Q, 1)]), i as usize);
    inv_qfact(i as usize, order).mul_poly(&num).expect("nonnegative powers")
}

/// `sum_t q^{T_t} h_t` with `h_t` taken from the partition oracle and
/// `y = z^2`, against the Lebesgue product.
pub fn lebesgue_5_15(order: usize) -> Result<(QSeriesTrunc, QSeriesTrunc)> {
    let mut lhs = QSeriesTrunc::zero(order);
    let tmax = max_index(order, tri);
    for t in 0..=tmax {
        let h = oracle_h(t as u32, order).substitute(VarId::Z, &zp(2))?;
        lhs.add_assign(&h.shift(tri(t) as usize))?;
    }
    Ok((lhs, lebesgue_product(order)?))
}

// ---- Section 6 ----

/// `h_{L,i}` by the partition oracle and by
/// `sum_j q^{T_j} (-y)^j [L+i-j; i][i; j]`.
pub fn lemma3_6_3(l: i64, i: i64) -> (LaurentPoly, LaurentPoly) {
    let formula = (0..=i)
        .map(|j| &(&*qb(l + i - j, i) * &*qb(i, j)) * &mono(sgn(j), &[(VarId::Q, tri(j)), (VarId::Z, j)]))
        .sum();
    (oracle_hl(l as u32, i as u32), formula)
}

/// `sum_j [L; j] q^{T_j} (z^2 q)_j (z^2 q^{2+L+j})_{L-j}` and `(-q)_L (z^2q^2; q^2)_L`.
pub fn kummer_poly_6_2(l: i64) -> (LaurentPoly, LaurentPoly) {
    let lhs = (0..=l)
        .map(|j| {
            let a = poch_q(&mono(1, &[(VarId::Z, 2), (VarId::Q, 1)]), j as usize);
            let b = poch_q(&mono(1, &[(VarId::Z, 2), (VarId::Q, 2 + l + j)]), (l - j) as usize);
            (&(&*qb(l, j) * &a) * &b).shift_q(tri(j))
        })
        .sum();
    let rhs = &poch_q(&-q(1), l as usize) * &poch_base(&mono(1, &[(VarId::Z, 2), (VarId::Q, 2)]), 2, l as usize);
    (lhs, rhs)
}

/// `sum_{i,j} q^{T_i+T_j} (-z^2)^j [L-j; i][i; j]`.
pub fn new_lebesgue_lhs(l: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for i in 0..=l {
        for j in 0..=i {
            let b = &*qb(l - j, i) * &*qb(i, j);
            out += &(&b * &mono(sgn(j), &[(VarId::Q, tri(i) + tri(j)), (VarId::Z, 2 * j)]));
        }
    }
    out
}

/// `sum (-1)^j z^{i+j} q^{T_i+T_j+T_k} [L-i; j][L-j; k][L-k; i]`.
pub fn new_lebesgue_rhs(l: i64) -> LaurentPoly {
    triple_binomial_sum(l, 1, |i, j, k| mono(sgn(j), &[(VarId::Q, t3(i, j, k)), (VarId::Z, i + j)]))
}

/// `sum_j (z^2q^2; q^2)_j q^{T_{L-2j-1}} [L+1; 2j+1]`.
pub fn andrews_6_11_rhs(l: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let mut j = 0;
    while 2 * j <= l {
        let p = poch_base(&mono(1, &[(VarId::Z, 2), (VarId::Q, 2)]), 2, j as usize);
        out += &(&p * &*qb(l + 1, 2 * j + 1)).shift_q(tri(l - 2 * j - 1));
        j += 1;
    }
    out
}

/// The Santos-Sills pair. `shifted` selects the `T_{j-1}`, `q^{2j^2}`
/// variant; `trinomial` is the index `n` of the trinomial `T_n` on the right.
pub fn santos_sills(l: i64, shifted: bool, trinomial: i64) -> (LaurentPoly, LaurentPoly) {
    let mut lhs = LaurentPoly::zero();
    for i in 0..=l {
        for j in 0..=i {
            let e = tri(i) + if shifted { tri(j - 1) } else { tri(j) };
            lhs += &(&*qb(l - j, i) * &*qb(i, j)).shift_q(e);
        }
    }
    let mut rhs = LaurentPoly::zero();
    for j in -(l + 1)..=(l + 1) {
        let t = qtrinomial(l + 1, 4 * j + 1, trinomial);
        if t.is_zero() {
            continue;
        }
        let e = 2 * j * j + if shifted { 0 } else { j };
        rhs += &t.shift_q(e).scale(&sgn(j).into());
    }
    (lhs, rhs)
}

// ---- Section 7 ----

/// Left side of the Sylvester polynomial identity.
pub fn sylvester_7_1_lhs(l: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for n in 0..=l + 1 {
        for i in 0..=n {
            let first = qmultinom(l - i - 2 * n + 2, i, n - i, 1);
            if !first.is_zero() {
                out += &(&first * &mono(1, &[(VarId::Q, (3 * n * n - n) / 2 + tri(i)), (VarId::Z, n + i)]));
            }
            let second = qmultinom(l - i - 2 * n, i, n - 1 - i, 1);
            if !second.is_zero() {
                out -= &(&second * &mono(1, &[(VarId::Q, (3 * n * n + n) / 2 + tri(i)), (VarId::Z, n + 1 + i)]));
            }
        }
    }
    out
}

fn sylvester_triple(l: i64) -> LaurentPoly {
    triple_binomial_sum(l, 3, |i, j, k| {
        mono(1, &[(VarId::Q, 3 * t3(i, j, k) - 2 * i - j), (VarId::Z, i + j + k)])
    })
}

/// Right side of the Sylvester polynomial identity, binomials in base `q^3`.
pub fn sylvester_7_1_rhs(l: i64) -> LaurentPoly {
    let head = sylvester_triple(l);
    if l == 0 {
        return head;
    }
    &head - &(&sylvester_triple(l - 1) * &mono(1, &[(VarId::Z, 1), (VarId::Q, 3 * l)]))
}

/// `sum_n q^{(3n^2-n)/2} z^n (1 + z q^{2n}) (-zq)_{n-1} / (q)_n` (the
/// `n = 0` term is 1) and `(-zq)_inf`. `printed` drops the factor `z^n`.
pub fn sylvester_7_3(order: usize, printed: bool) -> Result<(QSeriesTrunc, QSeriesTrunc)> {
    let lhs = QSeriesTrunc::from_sum(
        (0..).map(|n: i64| {
            SumTerm::lazy((3 * n * n - n) / 2, move |o| {
                if n == 0 {
                    return Ok(QSeriesTrunc::one(o));
                }
                let zn = if printed { 0 } else { n };
                let head = &(&LaurentPoly::one() + &mono(1, &[(VarId::Z, 1), (VarId::Q, 2 * n)]))
                    * &mono(1, &[(VarId::Q, (3 * n * n - n) / 2), (VarId::Z, zn)]);
                let num = &head * &poch_q(&mono(-1, &[(VarId::Z, 1), (VarId::Q, 1)]), (n - 1) as usize);
                inv_qfact(n as usize, o).mul_poly(&num)
            })
        }),
        order,
    )?;
    Ok((lhs, poch_inf_of(&mono(-1, &[(VarId::Z, 1), (VarId::Q, 1)]), 1, order)?))
}
