//! q-combinatorial building blocks: triangular numbers, q-Pochhammer
//! symbols, Gaussian binomials, q-multinomials and the q-trinomial `T1`.
//!
//! A "base" is a positive power of `q`: base 2 means `q^2`. Results in base
//! `k` are the base-`q` results with `q -> q^k`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::{exp32, ExponentVector, LaurentPoly, VarId};

/// `j(j+1)/2`. Defined for `j >= -1`, with `T_{-1} = 0`.
pub fn triangular(j: i64) -> Result<i64> {
    if j < -1 {
        return Err(Error::InvalidArgument(format!(
            "triangular number T_{j} is only defined for j >= -1"
        )));
    }
    Ok(j * (j + 1) / 2)
}

/// Shorthand for [`triangular`] on arguments known to be valid.
#[inline]
pub(crate) fn tri(j: i64) -> i64 {
    triangular(j).expect("triangular index >= -1")
}

/// Length of a Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochLen {
    Finite(usize),
    Infinite,
}

/// `(a; q^step)_len`: the product of `1 - a q^{step*j}` for `j < len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochSpec {
    lead: LaurentPoly,
    step: i64,
    len: PochLen,
}

impl PochSpec {
    /// `lead` must be a single signed monomial and `step` positive.
    pub fn new(lead: LaurentPoly, step: i64, len: PochLen) -> Result<Self> {
        if lead.as_monomial().is_none() {
            return Err(Error::NotMonomial(lead.to_string()));
        }
        if step <= 0 {
            return Err(Error::InvalidArgument(format!(
                "Pochhammer base q^{step} must have a positive exponent"
            )));
        }
        Ok(PochSpec { lead, step, len })
    }

    pub fn finite(lead: LaurentPoly, step: i64, n: usize) -> Result<Self> {
        Self::new(lead, step, PochLen::Finite(n))
    }

    pub fn infinite(lead: LaurentPoly, step: i64) -> Result<Self> {
        Self::new(lead, step, PochLen::Infinite)
    }

    pub fn lead(&self) -> &LaurentPoly {
        &self.lead
    }

    pub fn step(&self) -> i64 {
        self.step
    }

    pub fn len(&self) -> PochLen {
        self.len
    }

    /// The `j`-th factor `1 - a q^{step*j}`.
    pub fn factor(&self, j: usize) -> LaurentPoly {
        let (c, e) = self.lead.as_monomial().expect("validated monomial");
        let mut e = *e;
        e.0[VarId::Q.index()] += exp32(self.step * j as i64);
        let mut f = LaurentPoly::one();
        f.add_term(e, -c);
        f
    }
}

/// Finite Pochhammer product; an infinite spec is an error here (use
/// [`crate::series::poch_inf`]).
pub fn poch(spec: &PochSpec) -> Result<LaurentPoly> {
    match spec.len {
        PochLen::Finite(n) => Ok((0..n).map(|j| spec.factor(j)).product()),
        PochLen::Infinite => Err(Error::InvalidArgument(
            "infinite Pochhammer product needs a truncation order".into(),
        )),
    }
}

/// `(a; q)_n` for a monomial `a`; panics if `a` is not a monomial.
pub fn poch_q(a: &LaurentPoly, n: usize) -> LaurentPoly {
    poch_base(a, 1, n)
}

/// `(a; q^step)_n` for a monomial `a`; panics if `a` is not a monomial.
pub fn poch_base(a: &LaurentPoly, step: i64, n: usize) -> LaurentPoly {
    poch(&PochSpec::finite(a.clone(), step, n).expect("monomial lead, positive step"))
        .expect("finite")
}

/// `(q^k; q)_n` written as a pure `q` product.
pub fn poch_qk(k: i64, n: usize) -> LaurentPoly {
    poch_q(&LaurentPoly::q_pow(k), n)
}

/// `(q; q)_n`.
pub fn qfact(n: usize) -> LaurentPoly {
    poch_qk(1, n)
}

type Memo = RwLock<HashMap<(i64, i64), Arc<LaurentPoly>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Gaussian polynomial `[top; bottom]` in base `q`, shared from the memo.
/// Zero unless `0 <= bottom <= top`.
pub fn qbinom_shared(top: i64, bottom: i64) -> Arc<LaurentPoly> {
    if bottom < 0 || bottom > top {
        static ZERO: OnceLock<Arc<LaurentPoly>> = OnceLock::new();
        return ZERO.get_or_init(|| Arc::new(LaurentPoly::zero())).clone();
    }
    let bottom = bottom.min(top - bottom);
    if let Some(hit) = memo().read().expect("memo lock").get(&(top, bottom)) {
        return hit.clone();
    }
    // Racing workers may both compute the entry; the values are equal.
    let value = Arc::new(qbinom_product(top, bottom));
    memo()
        .write()
        .expect("memo lock")
        .entry((top, bottom))
        .or_insert(value)
        .clone()
}

/// `prod_{i=1..k} (1 - q^{n-k+i}) / (1 - q^i)`, dividing exactly at every
/// step (each partial quotient is itself a Gaussian polynomial).
fn qbinom_product(n: i64, k: i64) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for i in 1..=k {
        let num = one_minus_q(n - k + i);
        acc = (&acc * &num)
            .exact_divide(&one_minus_q(i))
            .expect("partial Gaussian quotient is a polynomial");
    }
    acc
}

fn one_minus_q(k: i64) -> LaurentPoly {
    let mut f = LaurentPoly::one();
    f.add_term(ExponentVector::single(VarId::Q, exp32(k)), -BigInt::one());
    f
}

/// `[top; bottom]` computed from scratch, bypassing the shared table.
pub fn qbinom_uncached(top: i64, bottom: i64) -> LaurentPoly {
    if bottom < 0 || top < 0 || bottom > top {
        return LaurentPoly::zero();
    }
    qbinom_product(top, bottom.min(top - bottom))
}

/// Gaussian binomial `[top; bottom]` in base `q^base`.
pub fn qbinom(top: i64, bottom: i64, base: u32) -> LaurentPoly {
    let b = qbinom_shared(top, bottom);
    if base == 1 {
        (*b).clone()
    } else {
        b.scale_var(VarId::Q, base as i32)
    }
}

/// `[L; i, j] = [L; i][L - i; j]`.
pub fn qmultinom(total: i64, i: i64, j: i64, base: u32) -> LaurentPoly {
    let first = qbinom_shared(total, i);
    if first.is_zero() {
        return LaurentPoly::zero();
    }
    let second = qbinom_shared(total - i, j);
    let prod = &*first * &*second;
    if base == 1 {
        prod
    } else {
        prod.scale_var(VarId::Q, base as i32)
    }
}

/// The q-trinomial coefficient `T_n(L; A)`: the sum over `0 <= r <= L - |A|`
/// with `r = L + A (mod 2)` of `q^{r(r-n)/2} (q)_L / ((q)_{(L-A-r)/2} (q)_{(L+A-r)/2} (q)_r)`.
pub fn qtrinomial(total: i64, a: i64, n: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    if total < 0 {
        return out;
    }
    let top = total - a.abs();
    let mut r = (total + a).rem_euclid(2);
    while r <= top {
        let lower = (total - a - r) / 2;
        // (q)_L / ((q)_r (q)_lower (q)_upper) = [L; r] [L - r; lower]
        let coeff = qmultinom(total, r, lower, 1);
        out += &coeff.shift_q(r * (r - n) / 2);
        r += 2;
    }
    out
}

/// `T_1(L; A)`, weight `q^{T_{r-1}}`. Printing the weight as `q^{T_r}`
/// gives `T_{-1}`, which does not satisfy the Santos-Sills identities.
pub fn qtrinomial_t1(total: i64, a: i64) -> LaurentPoly {
    qtrinomial(total, a, 1)
}

/// Integer binomial coefficient, zero out of range.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Sign `(-1)^k` as a constant.
pub(crate) fn sign(k: i64) -> BigInt {
    if k.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Whether `p` equals `c` for an integer `c` with `|c| = 1`.
pub(crate) fn is_unit_constant(p: &LaurentPoly) -> bool {
    p.as_monomial()
        .is_some_and(|(c, e)| e.is_zero() && c.abs().is_one())
}
