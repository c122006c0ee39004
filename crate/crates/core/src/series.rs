//! Power series in `q` truncated at a fixed order.
//!
//! Coefficients are Laurent polynomials in `z, A, B, C` (never in `q`).
//! Infinite products and sums are consumed from iterators whose
//! `q`-valuations are nondecreasing and unbounded; consumption stops at the
//! first item whose valuation exceeds the truncation order.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::check::CheckOutcome;
use crate::error::{Error, Result};
use crate::poly::{ExponentVector, LaurentPoly, VarId};
use crate::qfun::PochSpec;

/// Coefficients of `q^0 ..= q^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeriesTrunc {
    order: usize,
    coeffs: Vec<LaurentPoly>,
}

impl QSeriesTrunc {
    pub fn zero(order: usize) -> Self {
        QSeriesTrunc {
            order,
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = LaurentPoly::one();
        s
    }

    /// Reads a polynomial with nonnegative `q`-exponents, dropping every
    /// order above `order`.
    pub fn from_poly(p: &LaurentPoly, order: usize) -> Result<Self> {
        let mut s = Self::zero(order);
        for (e, c) in p.terms() {
            let k = e.get(VarId::Q);
            if k < 0 {
                return Err(Error::NegativeQPower(p.to_string()));
            }
            if k as usize <= order {
                let mut rest = *e;
                rest.set(VarId::Q, 0);
                s.coeffs[k as usize].add_term(rest, c.clone());
            }
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &LaurentPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient, `None` if all vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn to_poly(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            out += &c.shift_q(k as i64);
        }
        out
    }

    /// Drops to a lower order.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order {
            return Err(Error::OrderMismatch {
                left: order,
                right: self.order,
            });
        }
        Ok(QSeriesTrunc {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.same_order(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        QSeriesTrunc {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product through `q^order`.
    pub fn mul_series(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let mut out = Self::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Product with a polynomial in `q, z, A, B, C` having no negative power
    /// of `q`.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<Self> {
        let mut by_q: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
        for (e, c) in p.terms() {
            let k = e.get(VarId::Q);
            if k < 0 {
                return Err(Error::NegativeQPower(p.to_string()));
            }
            if k as usize <= self.order {
                let mut rest = *e;
                rest.set(VarId::Q, 0);
                by_q.entry(k as usize).or_default().add_term(rest, c.clone());
            }
        }
        let mut out = Self::zero(self.order);
        for (k, c) in by_q {
            for i in 0..=self.order - k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    out.coeffs[i + k] += &(a * &c);
                }
            }
        }
        Ok(out)
    }

    /// Multiplies by `q^k`, `k >= 0`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order);
        for i in 0..=self.order.saturating_sub(k) {
            if i + k <= self.order {
                out.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// Multiplicative inverse. The constant coefficient must be a unit of
    /// the Laurent ring, i.e. `±` a monomial in `z, A, B, C`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let inv0 = match c0.as_monomial() {
            Some((c, e)) if c.abs().is_one() => LaurentPoly::monomial(c.clone(), -*e),
            _ => return Err(Error::NonUnitConstant(c0.to_string())),
        };
        let mut out = Self::zero(self.order);
        out.coeffs[0] = inv0.clone();
        let neg_inv0 = -&inv0;
        for n in 1..=self.order {
            let mut acc = LaurentPoly::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() && !out.coeffs[n - k].is_zero() {
                    acc += &(a * &out.coeffs[n - k]);
                }
            }
            out.coeffs[n] = &acc * &neg_inv0;
        }
        Ok(out)
    }

    /// Applies a substitution to every coefficient. `v` must not be `q` and
    /// the image must be free of `q`.
    pub fn substitute(&self, v: VarId, image: &LaurentPoly) -> Result<Self> {
        if v == VarId::Q || image.contains_var(VarId::Q) {
            return Err(Error::InvalidArgument(
                "series substitution must not involve q".into(),
            ));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.substitute(v, image))
            .collect::<Result<_>>()?;
        Ok(QSeriesTrunc {
            order: self.order,
            coeffs,
        })
    }

    /// Evaluates every coefficient at a point in `z, A, B, C`.
    pub fn evaluate_coeffs(&self, point: &BTreeMap<VarId, BigRational>) -> Result<Vec<BigRational>> {
        self.coeffs.iter().map(|c| c.evaluate(point)).collect()
    }

    /// Exact product of a stream of factors `1 + O(q^v)` through `q^order`.
    ///
    /// Each factor's valuation is the `q`-valuation of `factor - 1`; these
    /// must be nondecreasing. The stream is read until a factor's valuation
    /// exceeds `order`, so it has to be unbounded or finite.
    pub fn from_product<I>(factors: I, order: usize) -> Result<Self>
    where
        I: IntoIterator<Item = LaurentPoly>,
    {
        let mut acc = Self::one(order);
        let mut previous: Option<i64> = None;
        for f in factors {
            let delta = &f - &LaurentPoly::one();
            let Some((v, _)) = delta.q_degree_bounds() else {
                continue;
            };
            let v = v as i64;
            if v < 0 {
                return Err(Error::NegativeQPower(f.to_string()));
            }
            if let Some(prev) = previous {
                if v < prev {
                    return Err(Error::NonMonotoneValuation {
                        previous: prev,
                        current: v,
                    });
                }
            }
            previous = Some(v);
            if v as usize > order {
                break;
            }
            acc = acc.mul_poly(&f)?;
        }
        Ok(acc)
    }

    /// Exact sum of a stream of terms through `q^order`; the declared term
    /// valuations must be nondecreasing.
    pub fn from_sum<'a, I>(terms: I, order: usize) -> Result<Self>
    where
        I: IntoIterator<Item = SumTerm<'a>>,
    {
        let mut acc = Self::zero(order);
        let mut previous: Option<i64> = None;
        for term in terms {
            if let Some(prev) = previous {
                if term.valuation < prev {
                    return Err(Error::NonMonotoneValuation {
                        previous: prev,
                        current: term.valuation,
                    });
                }
            }
            previous = Some(term.valuation);
            if term.valuation > order as i64 {
                break;
            }
            let declared = term.valuation;
            let s = (term.build)(order)?;
            if s.order != order {
                return Err(Error::OrderMismatch {
                    left: order,
                    right: s.order,
                });
            }
            if let Some(actual) = s.valuation() {
                if (actual as i64) < declared {
                    return Err(Error::InvalidArgument(format!(
                        "term declared valuation {declared} but starts at q^{actual}"
                    )));
                }
            }
            acc.add_assign(&s)?;
        }
        Ok(acc)
    }

    /// Compact rendering `c0 + (c1)*q + ...`, zero orders omitted.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*q"),
                _ => format!("({c})*q^{k}"),
            })
            .collect();
        if parts.is_empty() {
            format!("O(q^{})", self.order + 1)
        } else {
            format!("{} + O(q^{})", parts.join(" + "), self.order + 1)
        }
    }
}

/// One summand of an infinite sum: a lower bound on its `q`-valuation and a
/// deferred builder, so terms beyond the truncation are never computed.
pub struct SumTerm<'a> {
    valuation: i64,
    build: Box<dyn FnOnce(usize) -> Result<QSeriesTrunc> + 'a>,
}

impl<'a> SumTerm<'a> {
    pub fn lazy<F>(valuation: i64, build: F) -> Self
    where
        F: FnOnce(usize) -> Result<QSeriesTrunc> + 'a,
    {
        SumTerm {
            valuation,
            build: Box::new(build),
        }
    }

    /// A polynomial term; its valuation is read off the polynomial.
    pub fn poly(p: LaurentPoly) -> Self {
        let valuation = p
            .q_degree_bounds()
            .map(|(lo, _)| lo as i64)
            .unwrap_or(i64::MIN);
        SumTerm::lazy(valuation, move |order| QSeriesTrunc::from_poly(&p, order))
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }
}

/// `(a; q^step)_inf` through `q^order`. The lead must have a nonnegative
/// power of `q`.
pub fn poch_inf(spec: &PochSpec, order: usize) -> Result<QSeriesTrunc> {
    QSeriesTrunc::from_product((0..).map(|j| spec.factor(j)), order)
}

/// `(a; q^step)_inf` for a monomial lead.
pub fn poch_inf_of(lead: &LaurentPoly, step: i64, order: usize) -> Result<QSeriesTrunc> {
    poch_inf(&PochSpec::infinite(lead.clone(), step)?, order)
}

/// `1 / (q; q)_n` through `q^order`.
pub fn inv_qfact(n: usize, order: usize) -> QSeriesTrunc {
    QSeriesTrunc::from_poly(&crate::qfun::qfact(n), order)
        .and_then(|s| s.inverse())
        .expect("(q)_n has constant term 1")
}

/// Coefficient-wise comparison; on failure reports the first differing
/// order and the coefficient difference there.
pub fn equal_mod(a: &QSeriesTrunc, b: &QSeriesTrunc) -> Result<CheckOutcome> {
    a.same_order(b)?;
    for (k, (x, y)) in a.coeffs.iter().zip(&b.coeffs).enumerate() {
        if x != y {
            return Ok(CheckOutcome::fail(format!(
                "order q^{k}: lhs - rhs = {}",
                x - y
            )));
        }
    }
    Ok(CheckOutcome::Pass)
}

/// `sum_j q^{j(3j-1)/2} (-1)^j` through `q^order`: the pentagonal-number
/// expansion, used as an external anchor for `(q; q)_inf`.
pub fn pentagonal_series(order: usize) -> QSeriesTrunc {
    let mut s = QSeriesTrunc::zero(order);
    for j in -(order as i64)..=order as i64 {
        let e = j * (3 * j - 1) / 2;
        if (0..=order as i64).contains(&e) {
            let c = if j.rem_euclid(2) == 0 { 1 } else { -1 };
            s.coeffs[e as usize].add_term(ExponentVector::ZERO, BigInt::from(c));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::p;
    use crate::qfun::{qfact, tri};

    fn series(cs: &[&str]) -> QSeriesTrunc {
        let mut s = QSeriesTrunc::zero(cs.len() - 1);
        for (k, c) in cs.iter().enumerate() {
            s.coeffs[k] = p(c);
        }
        s
    }

    /// Counts distinct-part partitions of n by brute force over subsets.
    fn distinct_counts(max: usize) -> Vec<i64> {
        let mut counts = vec![0i64; max + 1];
        for mask in 0u32..(1 << max) {
            let sum: usize = (0..max).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).sum();
            if sum <= max {
                counts[sum] += 1;
            }
        }
        counts
    }

    #[test]
    fn from_product_examples() {
        let d = distinct_counts(3);
        assert_eq!(d, vec![1, 1, 1, 2]);
        let s = poch_inf_of(&p("-q"), 1, 3).unwrap();
        assert_eq!(s, series(&["1", "1", "1", "2"]));
        let s = poch_inf_of(&p("q"), 1, 2).unwrap();
        assert_eq!(s, series(&["1", "-1", "-1"]));
        let s = QSeriesTrunc::from_product(std::iter::empty(), 4).unwrap();
        assert_eq!(s, QSeriesTrunc::one(4));
    }

    #[test]
    fn from_product_matches_distinct_partition_counts() {
        let d = distinct_counts(18);
        let s = poch_inf_of(&p("-q"), 1, 18).unwrap();
        for (k, c) in d.iter().enumerate() {
            assert_eq!(s.coeff(k), &LaurentPoly::constant(*c), "q^{k}");
        }
    }

    #[test]
    fn from_product_rejects_decreasing_valuation() {
        let factors = vec![p("1 - q^2"), p("1 - q")];
        assert!(matches!(
            QSeriesTrunc::from_product(factors, 5),
            Err(Error::NonMonotoneValuation { previous: 2, current: 1 })
        ));
        assert!(QSeriesTrunc::from_product(vec![p("1 - q^-1")], 5).is_err());
    }

    #[test]
    fn from_sum_examples() {
        // sum q^{T_i} z^i / (q)_i agrees with (-qz)_inf
        let terms = (0..).map(|i: usize| {
            SumTerm::lazy(tri(i as i64), move |order| {
                inv_qfact(i, order).mul_poly(&LaurentPoly::term(1, &[(VarId::Q, tri(i as i64) as i32), (VarId::Z, i as i32)]))
            })
        });
        let s = QSeriesTrunc::from_sum(terms, 3).unwrap();
        assert_eq!(s, series(&["1", "z", "z", "z + z^2"]));
        assert_eq!(s, poch_inf_of(&p("-q*z"), 1, 3).unwrap());

        let s = QSeriesTrunc::from_sum([SumTerm::poly(LaurentPoly::one())], 3).unwrap();
        assert_eq!(s, QSeriesTrunc::one(3));

        let s = QSeriesTrunc::from_sum(
            (0..).map(|l: i64| SumTerm::poly(LaurentPoly::q_pow(tri(l)))),
            3,
        )
        .unwrap();
        assert_eq!(s, series(&["1", "1", "0", "1"]));
    }

    #[test]
    fn from_sum_validates_declared_valuations() {
        let bad = vec![SumTerm::poly(p("q^2")), SumTerm::poly(p("q"))];
        assert!(QSeriesTrunc::from_sum(bad, 4).is_err());
        let lying = vec![SumTerm::lazy(2, |o| QSeriesTrunc::from_poly(&p("q"), o))];
        assert!(QSeriesTrunc::from_sum(lying, 4).is_err());
        // terms past the order are never built
        let stop = vec![
            SumTerm::poly(p("1")),
            SumTerm::lazy(9, |_| panic!("built a term beyond the truncation")),
        ];
        assert_eq!(QSeriesTrunc::from_sum(stop, 4).unwrap(), QSeriesTrunc::one(4));
    }

    #[test]
    fn mul_series_examples() {
        let a = QSeriesTrunc::from_poly(&p("1 + q"), 2).unwrap();
        let b = QSeriesTrunc::from_poly(&p("1 - q"), 2).unwrap();
        assert_eq!(a.mul_series(&b).unwrap(), series(&["1", "0", "-1"]));
        assert_eq!(a.mul_series(&QSeriesTrunc::one(2)).unwrap(), a);
        // (-q;q)_inf (q;q^2)_inf = 1
        let lhs = poch_inf_of(&p("-q"), 1, 3)
            .unwrap()
            .mul_series(&poch_inf_of(&p("q"), 2, 3).unwrap())
            .unwrap();
        assert_eq!(lhs, QSeriesTrunc::one(3));
        assert!(a.mul_series(&QSeriesTrunc::one(3)).is_err());
    }

    #[test]
    fn equal_mod_examples() {
        let a = series(&["1", "1"]);
        assert!(equal_mod(&a, &a.clone()).unwrap().is_pass());
        let out = equal_mod(&a, &series(&["1", "0"])).unwrap();
        assert!(out.witness().unwrap().starts_with("order q^1"));
        assert!(equal_mod(&a, &QSeriesTrunc::one(3)).is_err());
    }

    #[test]
    fn euler_product_matches_pentagonal_numbers() {
        for n in [0usize, 1, 7, 25, 50] {
            let s = QSeriesTrunc::from_product((1..).map(|j| p("1").sub_q(j)), n).unwrap();
            assert_eq!(s, pentagonal_series(n), "N = {n}");
        }
    }

    #[test]
    fn truncation_is_consistent() {
        let big = poch_inf_of(&p("-q*z"), 1, 20)
            .unwrap()
            .mul_series(&poch_inf_of(&p("q*A"), 2, 20).unwrap())
            .unwrap();
        for m in [0usize, 3, 11, 19] {
            let small = poch_inf_of(&p("-q*z"), 1, m)
                .unwrap()
                .mul_series(&poch_inf_of(&p("q*A"), 2, m).unwrap())
                .unwrap();
            assert_eq!(big.truncate(m).unwrap(), small);
        }
    }

    #[test]
    fn inverse_round_trips() {
        let a = QSeriesTrunc::from_poly(&qfact(5), 12).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul_series(&inv).unwrap(), QSeriesTrunc::one(12));
        let b = QSeriesTrunc::from_poly(&p("-z^2*A + q"), 6).unwrap();
        assert_eq!(b.mul_series(&b.inverse().unwrap()).unwrap(), QSeriesTrunc::one(6));
        let c = QSeriesTrunc::from_poly(&p("1 - z"), 6).unwrap();
        assert!(matches!(c.inverse(), Err(Error::NonUnitConstant(_))));
    }

    #[test]
    fn coefficients_are_free_of_q() {
        let s = poch_inf_of(&p("-q*z^-1"), 1, 10).unwrap();
        for c in s.coeffs() {
            assert!(matches!(c.q_degree_bounds(), None | Some((0, 0))));
        }
        assert_eq!(
            s.substitute(VarId::Z, &p("-1")).unwrap(),
            poch_inf_of(&p("q"), 1, 10).unwrap()
        );
    }

    trait SubQ {
        fn sub_q(self, j: i64) -> LaurentPoly;
    }
    impl SubQ for LaurentPoly {
        fn sub_q(self, j: i64) -> LaurentPoly {
            &self - &LaurentPoly::q_pow(j)
        }
    }
}
