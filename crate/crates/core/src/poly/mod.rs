//! Exact sparse Laurent polynomials in the fixed variables `q, z, A, B, C`.
//!
//! Coefficients are arbitrary-precision integers and exponents may be
//! negative. A polynomial is a map from [`ExponentVector`] to a nonzero
//! coefficient; the map is kept canonical (no stored zeros) so structural
//! equality is polynomial equality. Terms are ordered lexicographically over
//! the exponents of `q, z, A, B, C`, which makes iteration order, rendering and
//! failure witnesses reproducible.

mod text;

pub use text::p;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the five symbols every identity is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VarId {
    Q,
    Z,
    A,
    B,
    C,
}

impl VarId {
    pub const ALL: [VarId; 5] = [VarId::Q, VarId::Z, VarId::A, VarId::B, VarId::C];

    #[inline]
    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn symbol(self) -> &'static str {
        match self {
            VarId::Q => "q",
            VarId::Z => "z",
            VarId::A => "A",
            VarId::B => "B",
            VarId::C => "C",
        }
    }

    pub fn from_symbol(s: &str) -> Option<VarId> {
        VarId::ALL.into_iter().find(|v| v.symbol() == s)
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Exponents of `q, z, A, B, C`, in that order. Ordering is lexicographic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(pub [i32; 5]);

impl ExponentVector {
    pub const ZERO: ExponentVector = ExponentVector([0; 5]);

    pub fn single(v: VarId, e: i32) -> Self {
        let mut x = [0; 5];
        x[v.index()] = e;
        ExponentVector(x)
    }

    #[inline]
    pub fn get(&self, v: VarId) -> i32 {
        self.0[v.index()]
    }

    #[inline]
    pub fn set(&mut self, v: VarId, e: i32) {
        self.0[v.index()] = e;
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 5]
    }
}

impl Add for ExponentVector {
    type Output = ExponentVector;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o += r;
        }
        ExponentVector(out)
    }
}

impl Sub for ExponentVector {
    type Output = ExponentVector;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        let mut out = self.0;
        for (o, r) in out.iter_mut().zip(rhs.0) {
            *o -= r;
        }
        ExponentVector(out)
    }
}

impl Neg for ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> Self {
        ExponentVector(self.0.map(|e| -e))
    }
}

/// Exact sparse multivariate Laurent polynomial with big-integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, ExponentVector::ZERO)
    }

    pub fn monomial(c: impl Into<BigInt>, exps: ExponentVector) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { terms }
    }

    /// `c * prod v^e` for the listed `(v, e)` pairs.
    pub fn term(c: impl Into<BigInt>, powers: &[(VarId, i32)]) -> Self {
        let mut e = ExponentVector::ZERO;
        for &(v, k) in powers {
            e.0[v.index()] += k;
        }
        Self::monomial(c, e)
    }

    pub fn var(v: VarId) -> Self {
        Self::monomial(1, ExponentVector::single(v, 1))
    }

    /// `v^e` with coefficient one.
    pub fn var_pow(v: VarId, e: i32) -> Self {
        Self::monomial(1, ExponentVector::single(v, e))
    }

    pub fn q_pow(e: i64) -> Self {
        Self::var_pow(VarId::Q, exp32(e))
    }

    /// Builds from `(exponents, coefficient)` pairs, combining duplicates.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
        C: Into<BigInt>,
    {
        let mut out = LaurentPoly::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ExponentVector::ZERO)
                .is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExponentVector) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// The constant term.
    pub fn constant_term(&self) -> BigInt {
        self.coeff(&ExponentVector::ZERO)
    }

    pub fn leading_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn trailing_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.first_key_value()
    }

    /// `Some((c, e))` when the polynomial is the single term `c * x^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, &ExponentVector)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, e))
        } else {
            None
        }
    }

    /// Whether the polynomial mentions `v` with a nonzero exponent.
    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.keys().any(|e| e.get(v) != 0)
    }

    /// Adds `c * x^e` in place, keeping the map canonical.
    pub fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn add_scaled_shifted(&mut self, other: &LaurentPoly, c: &BigInt, shift: ExponentVector) {
        for (e, k) in &other.terms {
            self.add_term(*e + shift, k * c);
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Multiplies by the monomial `c * x^shift`.
    pub fn mul_monomial(&self, c: &BigInt, shift: ExponentVector) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e + shift, k * c)).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: i64) -> LaurentPoly {
        self.mul_monomial(&BigInt::one(), ExponentVector::single(VarId::Q, exp32(k)))
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    fn mul_impl(&self, other: &LaurentPoly, q_max: Option<i32>) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((c, e)) = other.as_monomial() {
            if q_max.is_none() {
                return self.mul_monomial(c, *e);
            }
        }
        let mut acc: HashMap<ExponentVector, BigInt> =
            HashMap::with_capacity(self.len() * other.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = *e1 + *e2;
                if q_max.is_some_and(|m| e.get(VarId::Q) > m) {
                    continue;
                }
                *acc.entry(e).or_default() += c1 * c2;
            }
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Product with every term of `q`-degree above `q_max` dropped.
    pub fn mul_truncated(&self, other: &LaurentPoly, q_max: i64) -> LaurentPoly {
        self.mul_impl(other, Some(exp32(q_max)))
    }

    /// Drops every term whose `q`-exponent exceeds `q_max`.
    pub fn truncate_q(&self, q_max: i64) -> LaurentPoly {
        let m = exp32(q_max);
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.get(VarId::Q) <= m)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `q^k` as a polynomial in the remaining variables.
    pub fn q_coefficient(&self, k: i64) -> LaurentPoly {
        let k = exp32(k);
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.get(VarId::Q) == k)
                .map(|(e, c)| {
                    let mut e = *e;
                    e.set(VarId::Q, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Minimum and maximum exponent of `v`, or `None` for the zero polynomial.
    pub fn degree_bounds(&self, v: VarId) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e.get(v));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    /// Tight `(min, max)` bounds on the exponent of `q`; `None` marks the
    /// zero polynomial.
    pub fn q_degree_bounds(&self) -> Option<(i32, i32)> {
        self.degree_bounds(VarId::Q)
    }

    /// Replaces `v` by `v^k`.
    pub fn scale_var(&self, v: VarId, k: i32) -> LaurentPoly {
        if k == 1 {
            return self.clone();
        }
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2.set(v, e.get(v) * k);
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Exact substitution `v -> image`.
    ///
    /// A negative power of `v` needs the image to be invertible, so it must be
    /// a single monomial with coefficient `±1`.
    pub fn substitute(&self, v: VarId, image: &LaurentPoly) -> Result<LaurentPoly> {
        if !self.contains_var(v) {
            return Ok(self.clone());
        }
        let (lo, _) = self.degree_bounds(v).expect("nonzero");
        let inverse = if lo < 0 {
            match image.as_monomial() {
                Some((c, e)) if c.abs().is_one() => Some(LaurentPoly::monomial(c.clone(), -*e)),
                _ => {
                    return Err(Error::NonMonomialImage {
                        var: v,
                        image: image.to_string(),
                    })
                }
            }
        } else {
            None
        };

        let mut powers: HashMap<i32, LaurentPoly> = HashMap::new();
        let mut power = |k: i32| -> LaurentPoly {
            powers
                .entry(k)
                .or_insert_with(|| {
                    if k >= 0 {
                        image.pow(k as u32)
                    } else {
                        inverse.as_ref().expect("checked above").pow((-k) as u32)
                    }
                })
                .clone()
        };

        // group the remaining cofactor by exponent of v
        let mut groups: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e.get(v);
            let mut rest = *e;
            rest.set(v, 0);
            groups.entry(k).or_default().add_term(rest, c.clone());
        }
        let mut out = LaurentPoly::zero();
        for (k, cofactor) in groups {
            out += &(&cofactor * &power(k));
        }
        Ok(out)
    }

    /// Quotient `t` with `t * d == self`, or [`Error::NotDivisible`].
    ///
    /// Runs multivariate division in lex order. The quotient's support must
    /// lie in the box `[min(self) - min(d), max(self) - max(d)]` per
    /// variable, which bounds the search when no exact quotient exists.
    pub fn exact_divide(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if let Some((c, e)) = d.as_monomial() {
            let mut out = LaurentPoly::zero();
            for (pe, pc) in &self.terms {
                let (quo, rem) = pc.div_rem(c);
                if !rem.is_zero() {
                    return Err(self.not_divisible(d));
                }
                out.terms.insert(*pe - *e, quo);
            }
            return Ok(out);
        }

        let mut lo = [0i32; 5];
        let mut hi = [0i32; 5];
        for v in VarId::ALL {
            let (plo, phi) = self.degree_bounds(v).expect("nonzero");
            let (dlo, dhi) = d.degree_bounds(v).expect("nonzero");
            lo[v.index()] = plo - dlo;
            hi[v.index()] = phi - dhi;
            if lo[v.index()] > hi[v.index()] {
                return Err(self.not_divisible(d));
            }
        }

        let (dlead_e, dlead_c) = d.leading_term().map(|(e, c)| (*e, c.clone())).expect("nonzero");
        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero();
        while let Some((re, rc)) = rem.leading_term().map(|(e, c)| (*e, c.clone())) {
            let qe = re - dlead_e;
            let in_box = (0..5).all(|i| lo[i] <= qe.0[i] && qe.0[i] <= hi[i]);
            let (qc, r) = rc.div_rem(&dlead_c);
            if !in_box || !r.is_zero() {
                return Err(self.not_divisible(d));
            }
            rem.add_scaled_shifted(d, &-&qc, qe);
            quotient.terms.insert(qe, qc);
        }
        Ok(quotient)
    }

    fn not_divisible(&self, d: &LaurentPoly) -> Error {
        Error::NotDivisible {
            dividend: abbreviate(&self.to_string()),
            divisor: abbreviate(&d.to_string()),
        }
    }

    /// Exact value at a rational point. Variables absent from the polynomial
    /// need not be assigned.
    pub fn evaluate(&self, point: &BTreeMap<VarId, BigRational>) -> Result<BigRational> {
        let mut values: [Option<&BigRational>; 5] = [None; 5];
        for v in VarId::ALL {
            if self.contains_var(v) {
                let x = point.get(&v).ok_or(Error::UnassignedVariable(v))?;
                if x.is_zero() && self.degree_bounds(v).is_some_and(|(lo, _)| lo < 0) {
                    return Err(Error::ZeroAtNegativeExponent(v));
                }
                values[v.index()] = Some(x);
            }
        }
        let mut cache: HashMap<(usize, i32), BigRational> = HashMap::new();
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let x = values[i].expect("assigned above");
                let p = cache
                    .entry((i, k))
                    .or_insert_with(|| num_traits::pow::Pow::pow(x, k));
                t *= &*p;
            }
            total += t;
        }
        Ok(total)
    }

    /// Smallest term in the canonical order, used as a failure witness.
    pub fn first_term(&self) -> Option<LaurentPoly> {
        self.trailing_term()
            .map(|(e, c)| LaurentPoly::monomial(c.clone(), *e))
    }
}

fn abbreviate(s: &str) -> String {
    const MAX: usize = 120;
    if s.len() <= MAX {
        s.to_string()
    } else {
        let cut = (0..=MAX).rev().find(|&i| s.is_char_boundary(i)).unwrap_or(0);
        format!("{}...", &s[..cut])
    }
}

/// Narrows an exponent to the stored width. Exponents in this crate stay far
/// below `i32::MAX`; overflow is a logic error.
#[inline]
pub(crate) fn exp32(e: i64) -> i32 {
    i32::try_from(e).expect("exponent out of i32 range")
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += &lhs;
        } else {
            for (e, c) in rhs.terms {
                self.add_term(e, c);
            }
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_impl(rhs, None)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        self.mul_impl(&rhs, None)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}
