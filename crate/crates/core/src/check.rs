//! Comparison outcomes shared by every check strategy.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{LaurentPoly, VarId};

/// Result of comparing two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    /// The sides differ; `witness` renders the first difference in canonical
    /// order so that reruns print the same text.
    Fail { witness: String },
}

impl CheckOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        CheckOutcome::Fail {
            witness: witness.into(),
        }
    }

    pub fn witness(&self) -> Option<&str> {
        match self {
            CheckOutcome::Pass => None,
            CheckOutcome::Fail { witness } => Some(witness),
        }
    }

    /// Keeps the first failure of a sequence of outcomes.
    pub fn and(self, next: impl FnOnce() -> CheckOutcome) -> CheckOutcome {
        match self {
            CheckOutcome::Pass => next(),
            fail => fail,
        }
    }

    /// Prefixes a failure witness with context.
    pub fn context(self, ctx: impl fmt::Display) -> CheckOutcome {
        match self {
            CheckOutcome::Pass => CheckOutcome::Pass,
            CheckOutcome::Fail { witness } => CheckOutcome::Fail {
                witness: format!("{ctx}: {witness}"),
            },
        }
    }
}

/// Exact polynomial comparison. On failure the witness is the smallest
/// monomial of `lhs - rhs`.
pub fn compare_polys(lhs: &LaurentPoly, rhs: &LaurentPoly) -> CheckOutcome {
    if lhs == rhs {
        return CheckOutcome::Pass;
    }
    let diff = lhs - rhs;
    let first = diff.first_term().expect("sides differ");
    CheckOutcome::fail(format!(
        "lhs - rhs has {} terms; first: {}",
        diff.len(),
        first
    ))
}

/// Integer comparison with a labelled witness.
pub fn compare_counts(label: impl fmt::Display, lhs: i128, rhs: i128) -> CheckOutcome {
    if lhs == rhs {
        CheckOutcome::Pass
    } else {
        CheckOutcome::fail(format!("{label}: lhs = {lhs}, rhs = {rhs}"))
    }
}

/// Deterministic source of small nonzero rationals for evaluation checks.
///
/// Values avoid `0` and `±1`, the only rational roots of unity, so that a
/// point never collapses a `(x; q)_n` factor by accident.
pub struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        PointSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rational(&mut self) -> BigRational {
        loop {
            let n: i64 = self.rng.gen_range(-9..=9);
            let d: i64 = self.rng.gen_range(1..=5);
            let r = BigRational::new(n.into(), d.into());
            if !r.is_zero() && r.abs() != BigRational::one() {
                return r;
            }
        }
    }

    pub fn point(&mut self, vars: &[VarId]) -> BTreeMap<VarId, BigRational> {
        vars.iter().map(|&v| (v, self.rational())).collect()
    }
}

/// Renders a point as `q=2, z=-3/2` for witnesses.
pub fn render_point(point: &BTreeMap<VarId, BigRational>) -> String {
    point
        .iter()
        .map(|(v, x)| format!("{v}={x}"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Exact rational comparison at a point.
pub fn compare_values(lhs: &BigRational, rhs: &BigRational, point: &BTreeMap<VarId, BigRational>) -> CheckOutcome {
    if lhs == rhs {
        CheckOutcome::Pass
    } else {
        CheckOutcome::fail(format!(
            "at {}: lhs = {lhs}, rhs = {rhs}",
            render_point(point)
        ))
    }
}
