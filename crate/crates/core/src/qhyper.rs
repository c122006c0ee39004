//! Basic hypergeometric series and the classical summation and
//! transformation formulas, checked symbolically, as truncated series, or at
//! rational points.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::check::{compare_polys, compare_values, CheckOutcome};
use crate::error::{Error, Result};
use crate::poly::{exp32, LaurentPoly, VarId};
use crate::qfun::{poch_base, poch_q, poch_qk, qfact, sign, tri};
use crate::series::{equal_mod, poch_inf_of, QSeriesTrunc};

/// Parameters of `r+1 phi r`.
///
/// Term `j` is `prod (u)_j * prod (x; q^2)_j / (prod (l)_j (q)_j) * arg^j`
/// over the upper parameters `u`, the square-root pairs `x` and the lower
/// parameters `l`. A pair `x` stands for the two upper parameters `sqrt(x)`
/// and `-sqrt(x)`, whose Pochhammer symbols only ever occur multiplied
/// together, so `sqrt(q)` is never needed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiSpec {
    upper: Vec<LaurentPoly>,
    pairs: Vec<LaurentPoly>,
    lower: Vec<LaurentPoly>,
    arg: LaurentPoly,
    base: i64,
    cap: Option<usize>,
}

fn monomial(x: LaurentPoly) -> Result<LaurentPoly> {
    if x.as_monomial().is_none() {
        return Err(Error::NotMonomial(x.to_string()));
    }
    Ok(x)
}

impl PhiSpec {
    pub fn new(upper: Vec<LaurentPoly>, lower: Vec<LaurentPoly>, arg: LaurentPoly) -> Result<Self> {
        Ok(PhiSpec {
            upper: upper.into_iter().map(monomial).collect::<Result<_>>()?,
            pairs: Vec::new(),
            lower: lower.into_iter().map(monomial).collect::<Result<_>>()?,
            arg: monomial(arg)?,
            base: 1,
            cap: None,
        })
    }

    /// Adds square-root pairs; see the type docs.
    pub fn with_pairs(mut self, pairs: Vec<LaurentPoly>) -> Result<Self> {
        self.pairs = pairs.into_iter().map(monomial).collect::<Result<_>>()?;
        Ok(self)
    }

    pub fn with_base(mut self, base: i64) -> Result<Self> {
        if base <= 0 {
            return Err(Error::InvalidArgument(format!("base q^{base} must be positive")));
        }
        self.base = base;
        Ok(self)
    }

    /// Sums at most terms `0..=cap`.
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = Some(cap);
        self
    }

    /// If `x = q^{-n*step}` exactly, the product `(x; q^step)_j` vanishes
    /// for `j > n`.
    fn vanishing_index(x: &LaurentPoly, step: i64) -> Option<usize> {
        let (c, e) = x.as_monomial()?;
        let k = e.get(VarId::Q) as i64;
        let only_q = VarId::ALL[1..].iter().all(|&v| e.get(v) == 0);
        (c.is_one() && only_q && k <= 0 && k % step == 0).then(|| (-k / step) as usize)
    }

    /// Index of the last term that can be nonzero: the smallest of the cap
    /// and every terminating upper parameter.
    pub fn last_index(&self) -> Option<usize> {
        let from_upper = self
            .upper
            .iter()
            .filter_map(|u| Self::vanishing_index(u, self.base));
        let from_pairs = self
            .pairs
            .iter()
            .filter_map(|x| Self::vanishing_index(x, 2 * self.base));
        from_upper.chain(from_pairs).chain(self.cap).min()
    }

    fn shifted(x: &LaurentPoly, shift: i64) -> LaurentPoly {
        let (c, e) = x.as_monomial().expect("validated monomial");
        let mut e = *e;
        e.0[VarId::Q.index()] += exp32(shift);
        let mut f = LaurentPoly::one();
        f.add_term(e, -c);
        f
    }

    /// Factors gained by the numerator when passing from term `j` to `j+1`.
    fn numerator_step(&self, j: usize) -> LaurentPoly {
        let j = j as i64;
        let mut f: LaurentPoly = self
            .upper
            .iter()
            .map(|u| Self::shifted(u, self.base * j))
            .product();
        for x in &self.pairs {
            f = &f * &Self::shifted(x, 2 * self.base * j);
        }
        &f * &self.arg
    }

    /// Factors gained by the denominator when passing from term `j` to `j+1`.
    fn denominator_step(&self, j: usize) -> LaurentPoly {
        let j = j as i64;
        let f: LaurentPoly = self
            .lower
            .iter()
            .map(|l| Self::shifted(l, self.base * j))
            .product();
        &f * &(&LaurentPoly::one() - &LaurentPoly::q_pow(self.base * (j + 1)))
    }

    fn require_last(&self) -> Result<usize> {
        self.last_index().ok_or_else(|| {
            Error::InvalidArgument("series neither terminates nor has a term cap".into())
        })
    }

    /// Numerator and denominator of every term up to the last one.
    fn fractions(&self) -> Result<Vec<(LaurentPoly, LaurentPoly)>> {
        let last = self.require_last()?;
        let mut out = Vec::with_capacity(last + 1);
        let (mut num, mut den) = (LaurentPoly::one(), LaurentPoly::one());
        for j in 0..=last {
            if j > 0 {
                num = &num * &self.numerator_step(j - 1);
                den = &den * &self.denominator_step(j - 1);
            }
            if den.is_zero() {
                return Err(Error::Singular(format!("lower parameter vanishes at term {j}")));
            }
            out.push((num.clone(), den.clone()));
        }
        Ok(out)
    }
}

/// Symbolic value of a terminating series whose terms are all Laurent
/// polynomials.
pub fn eval_phi(spec: &PhiSpec) -> Result<LaurentPoly> {
    eval_phi_cleared(spec, &LaurentPoly::one())
}

/// `clear` times the series, each term divided exactly. Used when `clear`
/// is a common multiple of the term denominators.
pub fn eval_phi_cleared(spec: &PhiSpec, clear: &LaurentPoly) -> Result<LaurentPoly> {
    let mut sum = LaurentPoly::zero();
    for (num, den) in spec.fractions()? {
        if !num.is_zero() {
            sum += &(clear * &num).exact_divide(&den)?;
        }
    }
    Ok(sum)
}

/// Exact rational value of a terminating series at a point assigning every
/// variable that occurs (including `q`).
pub fn eval_phi_at(spec: &PhiSpec, point: &BTreeMap<VarId, BigRational>) -> Result<BigRational> {
    let last = spec.require_last()?;
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    for j in 0..=last {
        if j > 0 {
            // keep checking denominators after the terms vanish: a later
            // zero denominator makes those terms 0/0, not 0
            let den = spec.denominator_step(j - 1).evaluate(point)?;
            if den.is_zero() {
                return Err(Error::Singular(format!("lower parameter vanishes at term {j}")));
            }
            if !term.is_zero() {
                term = term * spec.numerator_step(j - 1).evaluate(point)? / den;
            }
        }
        sum += &term;
    }
    Ok(sum)
}

/// The series truncated at `q^order`.
///
/// Either the series terminates, or every parameter carries a nonnegative
/// power of `q` and the argument a positive one, so that term `j` starts at
/// `q^{j v}` with `v` the argument's valuation. Lower parameters must make
/// each denominator start with a unit.
pub fn phi_series(spec: &PhiSpec, order: usize) -> Result<QSeriesTrunc> {
    let q_exp = |x: &LaurentPoly| x.as_monomial().expect("monomial").1.get(VarId::Q) as i64;
    let last = match spec.last_index() {
        Some(n) => n,
        None => {
            let v = q_exp(&spec.arg);
            let params_ok = spec
                .upper
                .iter()
                .chain(&spec.pairs)
                .chain(&spec.lower)
                .all(|x| q_exp(x) >= 0);
            if v <= 0 || !params_ok {
                return Err(Error::InvalidArgument(
                    "nonterminating series needs nonnegative q-powers and a positive argument valuation".into(),
                ));
            }
            order / v as usize
        }
    };
    let mut sum = QSeriesTrunc::zero(order);
    let mut num = LaurentPoly::one();
    let mut den = QSeriesTrunc::one(order);
    for j in 0..=last {
        if j > 0 {
            num = &num * &spec.numerator_step(j - 1);
            den = den.mul_poly(&spec.denominator_step(j - 1))?;
        }
        if num.is_zero() {
            break;
        }
        let term = QSeriesTrunc::from_poly(&num, order)?.mul_series(&den.inverse()?)?;
        sum.add_assign(&term)?;
    }
    Ok(sum)
}

fn q(k: i64) -> LaurentPoly {
    LaurentPoly::q_pow(k)
}

fn v(x: VarId) -> LaurentPoly {
    LaurentPoly::var(x)
}

fn mono(c: i64, powers: &[(VarId, i32)]) -> LaurentPoly {
    LaurentPoly::term(c, powers)
}

/// `2phi1(a, q^-n; q, q | c) = a^n (c/a)_n / (c)_n`, checked at a point
/// assigning `A = a`, `C = c` and `q`.
pub fn check_chu_vandermonde_at(n: usize, point: &BTreeMap<VarId, BigRational>) -> Result<CheckOutcome> {
    let spec = PhiSpec::new(vec![v(VarId::A), q(-(n as i64))], vec![v(VarId::C)], q(1))?;
    let lhs = eval_phi_at(&spec, point)?;
    let get = |x: VarId| point.get(&x).cloned().ok_or(Error::UnassignedVariable(x));
    let (a, c, qv) = (get(VarId::A)?, get(VarId::C)?, get(VarId::Q)?);
    if a.is_zero() {
        return Err(Error::Singular("a = 0".into()));
    }
    let mut rhs = BigRational::one();
    let mut qi = BigRational::one();
    for _ in 0..n {
        let den = BigRational::one() - &c * &qi;
        if den.is_zero() {
            return Err(Error::Singular("(c;q)_n vanishes".into()));
        }
        rhs = rhs * (&a - &c * &qi) / den;
        qi *= &qv;
    }
    Ok(compare_values(&lhs, &rhs, point))
}

/// Chu-Vandermonde in `A`, `C`, `q` after multiplying by `(C)_n (q)_n`;
/// the right side is `prod (A - C q^i) (q)_n`.
pub fn check_chu_vandermonde(n: usize) -> Result<CheckOutcome> {
    let spec = PhiSpec::new(vec![v(VarId::A), q(-(n as i64))], vec![v(VarId::C)], q(1))?;
    let clear = &poch_q(&v(VarId::C), n) * &qfact(n);
    let lhs = eval_phi_cleared(&spec, &clear)?;
    let rhs: LaurentPoly = (0..n as i32)
        .map(|i| &v(VarId::A) - &mono(1, &[(VarId::C, 1), (VarId::Q, i)]))
        .product();
    Ok(compare_polys(&lhs, &(&rhs * &qfact(n))))
}

/// The terminating Sears-Carlitz transformation with `a = q^-n`, checked
/// at a point assigning `B = b`, `C = c`, `Z = z` and `q`.
///
/// With `a = q^-n` the prefactor `(az)_inf / (z)_inf` is the finite product
/// `(z q^-n; q)_n`.
pub fn check_sears_carlitz_at(n: usize, point: &BTreeMap<VarId, BigRational>) -> Result<CheckOutcome> {
    use VarId::{B, C, Q, Z};
    let n32 = n as i32;
    let a = q(-(n as i64));
    let aq_b = mono(1, &[(Q, 1 - n32), (B, -1)]);
    let aq_c = mono(1, &[(Q, 1 - n32), (C, -1)]);
    let lhs_spec = PhiSpec::new(
        vec![a.clone(), v(B), v(C)],
        vec![aq_b.clone(), aq_c.clone()],
        mono(1, &[(Q, 1 - n32), (Z, 1), (B, -1), (C, -1)]),
    )?;
    let rhs_spec = PhiSpec::new(
        vec![mono(1, &[(Q, 1 - n32), (B, -1), (C, -1)])],
        vec![aq_b, aq_c, mono(1, &[(Q, -n32), (Z, 1)]), mono(1, &[(Q, 1), (Z, -1)])],
        q(1),
    )?
    .with_pairs(vec![a, q(1 - n as i64)])?;
    let lhs = eval_phi_at(&lhs_spec, point)?;
    let prefactor = poch_q(&mono(1, &[(Q, -n32), (Z, 1)]), n).evaluate(point)?;
    let rhs = prefactor * eval_phi_at(&rhs_spec, point)?;
    Ok(compare_values(&lhs, &rhs, point))
}

/// The `q`-binomial theorem for `a = q^-n`:
/// `1phi0(q^-n; q, Z) = (Z q^-n; q)_n`.
pub fn check_cauchy_terminating(n: usize) -> Result<CheckOutcome> {
    let spec = PhiSpec::new(vec![q(-(n as i64))], vec![], v(VarId::Z))?;
    let lhs = eval_phi(&spec)?;
    let rhs = poch_q(&mono(1, &[(VarId::Q, -(n as i32)), (VarId::Z, 1)]), n);
    Ok(compare_polys(&lhs, &rhs))
}

/// The `q`-binomial theorem as series with `a = A`, `z = Zq`:
/// `sum (A)_n/(q)_n (Zq)^n = (AZq)_inf / (Zq)_inf`.
pub fn check_cauchy_truncated(order: usize) -> Result<CheckOutcome> {
    use VarId::{A, Q, Z};
    let spec = PhiSpec::new(vec![v(A)], vec![], mono(1, &[(Z, 1), (Q, 1)]))?;
    let lhs = phi_series(&spec, order)?;
    let rhs = poch_inf_of(&mono(1, &[(A, 1), (Z, 1), (Q, 1)]), 1, order)?
        .mul_series(&poch_inf_of(&mono(1, &[(Z, 1), (Q, 1)]), 1, order)?.inverse()?)?;
    equal_mod(&lhs, &rhs)
}

/// How the `q`-Kummer sum is specialized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KummerMode {
    /// `b = q^-L`. Both sides times `(a q^{1+L})_{L+1}` are polynomials; the
    /// right side becomes `(-q)_L (aq; q^2)_{L+1}`.
    Terminating { l: usize },
    /// `b -> infinity`: `sum q^{T_j} (a)_j/(q)_j = (-q)_inf (aq; q^2)_inf`.
    Limit,
    /// `b = B` kept symbolic.
    Generic,
}

/// The `q`-Kummer (Bailey-Daum) sum
/// `2phi1(a, b; q, -q/b | aq/b) = (-q)_inf (aq, aq^2/b^2; q^2)_inf / (-q/b, aq/b; q)_inf`
/// for a monomial `a` with a nonnegative power of `q`. Truncated modes
/// compare through `q^order`; the terminating mode is exact.
pub fn check_kummer(a: &LaurentPoly, mode: KummerMode, order: usize) -> Result<CheckOutcome> {
    use VarId::{B, Q};
    let a = monomial(a.clone())?;
    if a.q_degree_bounds().is_some_and(|(lo, _)| lo < 0) {
        return Err(Error::NegativeQPower(a.to_string()));
    }
    let aq = a.shift_q(1);
    match mode {
        KummerMode::Terminating { l } => {
            let li = l as i64;
            let spec = PhiSpec::new(vec![a.clone(), q(-li)], vec![a.shift_q(1 + li)], -q(1 + li))?;
            let lhs = eval_phi_cleared(&spec, &poch_q(&a.shift_q(1 + li), l + 1))?;
            let rhs = &poch_q(&-q(1), l) * &poch_base(&aq, 2, l + 1);
            Ok(compare_polys(&lhs, &rhs))
        }
        KummerMode::Limit => {
            let mut lhs = QSeriesTrunc::zero(order);
            let mut j = 0usize;
            while tri(j as i64) <= order as i64 {
                let num = poch_q(&a, j).shift_q(tri(j as i64));
                let term = QSeriesTrunc::from_poly(&num, order)?
                    .mul_series(&QSeriesTrunc::from_poly(&qfact(j), order)?.inverse()?)?;
                lhs.add_assign(&term)?;
                j += 1;
            }
            let rhs = poch_inf_of(&-q(1), 1, order)?.mul_series(&poch_inf_of(&aq, 2, order)?)?;
            equal_mod(&lhs, &rhs)
        }
        KummerMode::Generic => {
            let b = v(B);
            let aq_b = &aq * &mono(1, &[(B, -1)]);
            let spec = PhiSpec::new(vec![a.clone(), b], vec![aq_b.clone()], mono(-1, &[(Q, 1), (B, -1)]))?;
            let lhs = phi_series(&spec, order)?;
            let num = poch_inf_of(&-q(1), 1, order)?
                .mul_series(&poch_inf_of(&aq, 2, order)?)?
                .mul_series(&poch_inf_of(&(&a * &mono(1, &[(Q, 2), (B, -2)])), 2, order)?)?;
            let den = poch_inf_of(&mono(-1, &[(Q, 1), (B, -1)]), 1, order)?
                .mul_series(&poch_inf_of(&aq_b, 1, order)?)?;
            equal_mod(&lhs, &num.mul_series(&den.inverse()?)?)
        }
    }
}

/// Both sides of Heine's third transformation
/// `2phi1(a, b; q, z | c) = (abz/c)_inf / (z)_inf 2phi1(c/a, c/b; q, abz/c | c)`
/// through `q^order`.
pub fn heine3_sides(
    a: &LaurentPoly,
    b: &LaurentPoly,
    c: &LaurentPoly,
    z: &LaurentPoly,
    order: usize,
) -> Result<(QSeriesTrunc, QSeriesTrunc)> {
    let inv = |x: &LaurentPoly| -> Result<LaurentPoly> {
        let (coef, e) = x.as_monomial().ok_or_else(|| Error::NotMonomial(x.to_string()))?;
        if !crate::qfun::is_unit_constant(&LaurentPoly::constant(coef.clone())) {
            return Err(Error::NotMonomial(format!("{x} has no Laurent inverse")));
        }
        Ok(LaurentPoly::monomial(coef.clone(), -*e))
    };
    let abz_c = &(&(a * b) * z) * &inv(c)?;
    let lhs = phi_series(&PhiSpec::new(vec![a.clone(), b.clone()], vec![c.clone()], z.clone())?, order)?;
    let inner = phi_series(
        &PhiSpec::new(vec![c * &inv(a)?, c * &inv(b)?], vec![c.clone()], abz_c.clone())?,
        order,
    )?;
    let rhs = poch_inf_of(&abz_c, 1, order)?
        .mul_series(&poch_inf_of(z, 1, order)?.inverse()?)?
        .mul_series(&inner)?;
    Ok((lhs, rhs))
}

/// Heine's transformation as an exact truncated-series identity.
pub fn check_heine3_truncated(
    a: &LaurentPoly,
    b: &LaurentPoly,
    c: &LaurentPoly,
    z: &LaurentPoly,
    order: usize,
) -> Result<CheckOutcome> {
    let (lhs, rhs) = heine3_sides(a, b, c, z, order)?;
    equal_mod(&lhs, &rhs)
}

/// Heine's transformation with `a = Aq, b = Bq, c = Cq, z = Zq`, both sides
/// truncated and every coefficient evaluated at `point` (which assigns
/// `A, B, C, Z`).
pub fn check_heine3_at(order: usize, point: &BTreeMap<VarId, BigRational>) -> Result<CheckOutcome> {
    use VarId::{A, B, C, Q, Z};
    let with_q = |x: VarId| mono(1, &[(x, 1), (Q, 1)]);
    let (lhs, rhs) = heine3_sides(&with_q(A), &with_q(B), &with_q(C), &with_q(Z), order)?;
    let (l, r) = (lhs.evaluate_coeffs(point)?, rhs.evaluate_coeffs(point)?);
    for (k, (x, y)) in l.iter().zip(&r).enumerate() {
        if x != y {
            return Ok(compare_values(x, y, point).context(format!("order q^{k}")));
        }
    }
    Ok(CheckOutcome::Pass)
}

/// `(q^{-L})_n` and friends: the pure-`q` Pochhammer `(q^k; q)_n`.
fn pq(k: i64, n: usize) -> LaurentPoly {
    poch_qk(k, n)
}

/// The diagonal sum of the Section-2 argument,
/// `sum_j q^j (q)_L (q^{j-L})_j / ((q)_j^2 (q^{-L})_j) = sum_n (-1)^n q^{T_n}`,
/// with both sides multiplied by `(q)_L (q^{-L})_L`.
pub fn diagonal_sum_sides(l: usize) -> Result<(LaurentPoly, LaurentPoly)> {
    let li = l as i64;
    let clear = &qfact(l) * &pq(-li, l);
    let mut lhs = LaurentPoly::zero();
    for j in 0..=l {
        let num = &(&clear * &qfact(l)) * &pq(j as i64 - li, j).shift_q(j as i64);
        let den = &qfact(j).pow(2) * &pq(-li, j);
        lhs += &num.exact_divide(&den)?;
    }
    let rhs: LaurentPoly = (0..=li)
        .map(|n| q(tri(n)).scale(&sign(n)))
        .sum();
    Ok((lhs, &rhs * &clear))
}

/// Index range of the half-plane sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfSumRange {
    /// `i + j <= L`, the range inherited from the original triangle sum.
    Triangle,
    /// The full square `0 <= i, j <= L`.
    Square,
}

/// The half-plane sums of the Section-2 argument,
/// `sum z^{±i} q^{T_i+j} (q)_L (q^{i+j-L})_j / ((q)_{i+j} (q)_j (q^{-L})_j)`
/// against `sum_n (-1)^n q^{T_n} (1 + (-1)^n z^{n+1})/(1+z)` for `+i`, or
/// `sum_n (-1)^n q^{T_n} (z + (-1)^n z^{-n})/(1+z)` for `-i`.
///
/// Both sides are multiplied by `(1+z) (q)_{2L} (q^{-L})_L`. The identity
/// holds on the triangle only: for `i + j > L` the factor `(q^{i+j-L})_j`
/// no longer vanishes.
pub fn half_sum_sides(l: usize, reflected: bool, range: HalfSumRange) -> Result<(LaurentPoly, LaurentPoly)> {
    let li = l as i64;
    let clear = &qfact(2 * l) * &pq(-li, l);
    let zdir = if reflected { -1 } else { 1 };
    let mut lhs = LaurentPoly::zero();
    for i in 0..=l {
        for j in 0..=l {
            if range == HalfSumRange::Triangle && i + j > l {
                continue;
            }
            let num = &(&clear * &qfact(l)) * &pq((i + j) as i64 - li, j);
            if num.is_zero() {
                continue;
            }
            let den = &(&qfact(i + j) * &qfact(j)) * &pq(-li, j);
            let shift = mono(1, &[(VarId::Z, zdir * i as i32), (VarId::Q, exp32(tri(i as i64) + j as i64))]);
            lhs += &(&num.exact_divide(&den)? * &shift);
        }
    }
    let mut rhs = LaurentPoly::zero();
    for n in 0..=li {
        let s = sign(n);
        let tail = if reflected {
            mono(1, &[(VarId::Z, -(n as i32))])
        } else {
            mono(1, &[(VarId::Z, n as i32 + 1)])
        };
        let head = if reflected { v(VarId::Z) } else { LaurentPoly::one() };
        let inner = &head + &tail.scale(&s);
        rhs += &inner.scale(&s).shift_q(tri(n));
    }
    let one_plus_z = &LaurentPoly::one() + &v(VarId::Z);
    Ok((&lhs * &one_plus_z, &rhs * &clear))
}

/// `sum_{i,j,k} q^{T_i+T_j+T_k} z^{i-j} (-1)^k / ((q)_i (q)_j (q)_k)`
/// through `q^order`, summed term by term.
pub fn triple_sum_series(order: usize) -> Result<QSeriesTrunc> {
    let max = (0..).take_while(|&i| tri(i as i64) <= order as i64).last().unwrap_or(0);
    let inv: Vec<QSeriesTrunc> = (0..=max)
        .map(|i| QSeriesTrunc::from_poly(&qfact(i), order).and_then(|s| s.inverse()))
        .collect::<Result<_>>()?;
    let mut sum = QSeriesTrunc::zero(order);
    for i in 0..=max {
        for j in 0..=max {
            for k in 0..=max {
                let e = tri(i as i64) + tri(j as i64) + tri(k as i64);
                if e > order as i64 {
                    continue;
                }
                let m = mono(1, &[(VarId::Q, e as i32), (VarId::Z, i as i32 - j as i32)]).scale(&sign(k as i64));
                let t = inv[i].mul_series(&inv[j])?.mul_series(&inv[k])?.mul_poly(&m)?;
                sum.add_assign(&t)?;
            }
        }
    }
    Ok(sum)
}

/// `(-qz, -q/z, q; q)_inf` through `q^order`.
pub fn jacobi_product(order: usize) -> Result<QSeriesTrunc> {
    use VarId::{Q, Z};
    poch_inf_of(&mono(-1, &[(Q, 1), (Z, 1)]), 1, order)?
        .mul_series(&poch_inf_of(&mono(-1, &[(Q, 1), (Z, -1)]), 1, order)?)?
        .mul_series(&poch_inf_of(&q(1), 1, order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::PointSampler;
    use crate::poly::p;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn pt(vals: &[(VarId, BigRational)]) -> BTreeMap<VarId, BigRational> {
        vals.iter().cloned().collect()
    }

    #[test]
    fn eval_phi_examples() {
        let spec = PhiSpec::new(vec![p("A"), p("q^-1")], vec![p("C")], p("q")).unwrap();
        let at = pt(&[(VarId::A, rat(2, 1)), (VarId::C, rat(3, 1)), (VarId::Q, rat(5, 1))]);
        assert_eq!(eval_phi_at(&spec, &at).unwrap(), rat(1, 2));
        assert!(check_chu_vandermonde_at(1, &at).unwrap().is_pass());

        let cauchy = PhiSpec::new(vec![p("q^-2")], vec![], p("z")).unwrap();
        assert_eq!(eval_phi(&cauchy).unwrap(), poch_q(&p("q^-2*z"), 2));
        assert_eq!(cauchy.last_index(), Some(2));

        let one = PhiSpec::new(vec![p("1"), p("A")], vec![p("B")], p("z")).unwrap();
        assert_eq!(one.last_index(), Some(0));
        assert_eq!(eval_phi(&one).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn termination_and_singularities() {
        let open = PhiSpec::new(vec![p("A")], vec![], p("z")).unwrap();
        assert!(eval_phi(&open).is_err());
        assert_eq!(open.clone().with_cap(3).last_index(), Some(3));
        let paired = PhiSpec::new(vec![], vec![], p("q")).unwrap().with_pairs(vec![p("q^-4")]).unwrap();
        assert_eq!(paired.last_index(), Some(2));
        // (q^-2; q)_j in the denominator vanishes at j = 3 before q^-5 terminates
        let bad = PhiSpec::new(vec![p("q^-5")], vec![p("q^-2")], p("q")).unwrap();
        assert!(matches!(eval_phi(&bad), Err(Error::Singular(_))));
        let at = pt(&[(VarId::Q, rat(2, 1))]);
        assert!(matches!(eval_phi_at(&bad, &at), Err(Error::Singular(_))));
        assert!(PhiSpec::new(vec![p("1 + q")], vec![], p("q")).is_err());
    }

    #[test]
    fn vanishing_terms_do_not_hide_a_zero_denominator() {
        // c q = 1 kills the terms from j = 2, and (aq/c)_j vanishes from j = 3
        let at = pt(&[(VarId::Q, rat(-2, 1)), (VarId::Z, rat(9, 4)), (VarId::B, rat(-3, 5)), (VarId::C, rat(-1, 2))]);
        assert!(matches!(check_sears_carlitz_at(4, &at), Err(Error::Singular(_))));
    }

    #[test]
    fn chu_vandermonde_symbolic_and_at_points() {
        for n in 0..=8 {
            assert!(check_chu_vandermonde(n).unwrap().is_pass(), "n = {n}");
        }
        let mut sampler = PointSampler::new(7);
        for n in 0..=8 {
            let mut done = 0;
            while done < 5 {
                let at = sampler.point(&[VarId::A, VarId::C, VarId::Q]);
                match check_chu_vandermonde_at(n, &at) {
                    Ok(o) => {
                        assert!(o.is_pass(), "n = {n}: {o:?}");
                        done += 1;
                    }
                    Err(Error::Singular(_)) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn sears_carlitz_at_points() {
        let fixed = pt(&[
            (VarId::B, rat(2, 1)),
            (VarId::C, rat(-3, 1)),
            (VarId::Z, rat(5, 2)),
            (VarId::Q, rat(3, 1)),
        ]);
        for n in 0..=2 {
            assert!(check_sears_carlitz_at(n, &fixed).unwrap().is_pass(), "n = {n}");
        }
        let mut sampler = PointSampler::new(11);
        for n in 0..=6 {
            let mut done = 0;
            while done < 5 {
                let at = sampler.point(&[VarId::B, VarId::C, VarId::Z, VarId::Q]);
                match check_sears_carlitz_at(n, &at) {
                    Ok(o) => {
                        assert!(o.is_pass(), "n = {n}: {o:?}");
                        done += 1;
                    }
                    Err(Error::Singular(_)) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn sears_carlitz_detects_a_wrong_side() {
        // a perturbed point value on one side only must be caught
        let at = pt(&[
            (VarId::B, rat(2, 1)),
            (VarId::C, rat(-3, 1)),
            (VarId::Z, rat(5, 2)),
            (VarId::Q, rat(3, 1)),
        ]);
        let spec = PhiSpec::new(vec![p("q^-2"), p("B"), p("C")], vec![p("q^-1*B^-1"), p("q^-1*C^-1")], p("q^-1*z*B^-1*C^-1")).unwrap();
        let lhs = eval_phi_at(&spec, &at).unwrap();
        assert_ne!(lhs, BigRational::zero());
    }

    #[test]
    fn cauchy_forms() {
        for n in 0..=8 {
            assert!(check_cauchy_terminating(n).unwrap().is_pass());
        }
        assert!(check_cauchy_truncated(15).unwrap().is_pass());
    }

    #[test]
    fn kummer_modes() {
        let a = p("z^2*q");
        for l in 0..=6 {
            assert!(check_kummer(&a, KummerMode::Terminating { l }, 0).unwrap().is_pass(), "L = {l}");
        }
        assert!(check_kummer(&p("A"), KummerMode::Terminating { l: 4 }, 0).unwrap().is_pass());
        assert!(check_kummer(&a, KummerMode::Limit, 11).unwrap().is_pass());
        assert!(check_kummer(&a, KummerMode::Limit, 0).unwrap().is_pass());
        assert!(check_kummer(&p("A"), KummerMode::Generic, 10).unwrap().is_pass());
        assert!(check_kummer(&p("q^-1"), KummerMode::Limit, 3).is_err());
    }

    #[test]
    fn heine_truncated_and_terminating() {
        let s = |x: &str| p(x);
        assert!(check_heine3_truncated(&s("A*q"), &s("B*q"), &s("C*q"), &s("z*q"), 10)
            .unwrap()
            .is_pass());
        assert!(check_heine3_truncated(&s("q^-2"), &s("B*q"), &s("C*q"), &s("z*q^3"), 12)
            .unwrap()
            .is_pass());
        assert!(check_heine3_truncated(&s("q^-1"), &s("B*q"), &s("C*q"), &s("z*q^2"), 12)
            .unwrap()
            .is_pass());
        // a deliberately wrong right side: swap the inner parameters' roles
        let (lhs, _) = heine3_sides(&s("A*q"), &s("B*q"), &s("C*q"), &s("z*q"), 4).unwrap();
        let (other, _) = heine3_sides(&s("A*q"), &s("B*q"), &s("C*q"), &s("z*q^2"), 4).unwrap();
        assert!(!equal_mod(&lhs, &other).unwrap().is_pass());
    }

    #[test]
    fn heine_at_points() {
        let zero_z = pt(&[
            (VarId::A, rat(2, 1)),
            (VarId::B, rat(3, 1)),
            (VarId::C, rat(5, 1)),
            (VarId::Z, rat(0, 1)),
        ]);
        let (lhs, rhs) = heine3_sides(&p("A*q"), &p("B*q"), &p("C*q"), &p("z*q"), 6).unwrap();
        let one: Vec<BigRational> = (0..=6).map(|k| if k == 0 { rat(1, 1) } else { rat(0, 1) }).collect();
        assert_eq!(lhs.evaluate_coeffs(&zero_z).unwrap(), one);
        assert_eq!(rhs.evaluate_coeffs(&zero_z).unwrap(), one);
        let mut sampler = PointSampler::new(3);
        let at = sampler.point(&[VarId::A, VarId::B, VarId::C, VarId::Z]);
        assert!(check_heine3_at(15, &at).unwrap().is_pass());
    }

    #[test]
    fn section_two_finite_sums() {
        for l in 0..=6 {
            let (a, b) = diagonal_sum_sides(l).unwrap();
            assert_eq!(a, b, "diagonal L = {l}");
        }
        for l in 0..=5 {
            for reflected in [false, true] {
                let (a, b) = half_sum_sides(l, reflected, HalfSumRange::Triangle).unwrap();
                assert_eq!(a, b, "half sum L = {l}, reflected = {reflected}");
            }
        }
    }

    #[test]
    fn half_sums_fail_on_the_full_square() {
        for reflected in [false, true] {
            let (a, b) = half_sum_sides(0, reflected, HalfSumRange::Square).unwrap();
            assert_eq!(a, b);
            let (a, b) = half_sum_sides(1, reflected, HalfSumRange::Square).unwrap();
            assert_ne!(a, b);
        }
    }

    #[test]
    fn triple_sum_matches_product() {
        let n = 12;
        assert!(equal_mod(&triple_sum_series(n).unwrap(), &jacobi_product(n).unwrap())
            .unwrap()
            .is_pass());
    }
}
