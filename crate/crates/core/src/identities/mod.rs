//! The identity registry and the check engine.
//!
//! Every descriptor binds an id to parameter definitions and a check. Most
//! checks build both sides with the functions in [`sides`] and compare them
//! with the descriptor's strategy; the rest are custom (counts, oracles,
//! recurrences, rational points).

mod registry;
pub mod sides;

use std::collections::BTreeMap;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::check::{compare_polys, compare_values, CheckOutcome, PointSampler};
use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, VarId};
use crate::series::{equal_mod, QSeriesTrunc};

pub use registry::registry;

/// Named integer parameters, e.g. `L = 6`.
pub type Params = BTreeMap<String, i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// A built side: an exact polynomial or a truncated series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SideValue {
    Poly(LaurentPoly),
    Series(QSeriesTrunc),
}

impl fmt::Display for SideValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SideValue::Poly(p) => write!(f, "{p}"),
            SideValue::Series(s) => f.write_str(&s.render()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Polynomial equality, spot-checked at rational points.
    Exact,
    /// Polynomial equality after multiplying through by a common factor.
    ClearDenominators,
    /// Coefficient equality through a `q` order.
    TruncatedSeries,
    /// Exact rational evaluation at sampled points.
    RationalPoints,
    /// A linear recurrence applied to both sides, plus initial values.
    Recurrence,
    /// Integer counts or a brute-force oracle.
    Counts,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Exact => "exact",
            Strategy::ClearDenominators => "clear-denominators",
            Strategy::TruncatedSeries => "truncated-series",
            Strategy::RationalPoints => "rational-points",
            Strategy::Recurrence => "recurrence",
            Strategy::Counts => "counts",
        })
    }
}

/// What a check is supposed to report. Identities printed with a typo are
/// registered with `Fail` so that the suite notices a change either way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Pass,
    Fail,
}

/// One integer parameter. `full` is the inclusive range swept by the full
/// profile; parameters without it only matter when given explicitly.
#[derive(Clone, Copy, Debug)]
pub struct ParamDef {
    pub name: &'static str,
    pub min: i64,
    pub max: i64,
    pub default: i64,
    pub full: Option<(i64, i64)>,
}

impl ParamDef {
    pub const fn swept(name: &'static str, min: i64, max: i64, default: i64, full: (i64, i64)) -> Self {
        ParamDef { name, min, max, default, full: Some(full) }
    }

    pub const fn fixed(name: &'static str, min: i64, max: i64, value: i64) -> Self {
        ParamDef { name, min, max, default: value, full: Some((value, value)) }
    }

    pub const fn optional(name: &'static str, min: i64, max: i64, default: i64) -> Self {
        ParamDef { name, min, max, default, full: None }
    }
}

pub type SidesFn = fn(&Params) -> Result<(SideValue, SideValue)>;
pub type CheckFn = fn(&Params, &mut PointSampler) -> Result<CheckOutcome>;

/// A registry entry.
pub struct IdentityDescriptor {
    pub id: &'static str,
    /// Equation tag, e.g. `Eq 1.12`.
    pub tag: &'static str,
    pub title: &'static str,
    pub strategy: Strategy,
    pub expect: Expectation,
    pub params: &'static [ParamDef],
    pub(crate) sides: Option<SidesFn>,
    pub(crate) check: Option<CheckFn>,
}

impl IdentityDescriptor {
    pub fn has_sides(&self) -> bool {
        self.sides.is_some()
    }

    /// Fills defaults and rejects unknown or out-of-range parameters.
    pub fn resolve(&self, given: &Params) -> Result<Params> {
        for name in given.keys() {
            if !self.params.iter().any(|d| d.name == name) {
                return Err(Error::InvalidArgument(format!("{} has no parameter {name}", self.id)));
            }
        }
        let mut out = Params::new();
        for d in self.params {
            match given.get(d.name) {
                Some(&v) if v < d.min || v > d.max => {
                    return Err(Error::InvalidArgument(format!(
                        "{}: {} = {v} outside {}..={}",
                        self.id, d.name, d.min, d.max
                    )))
                }
                Some(&v) => {
                    out.insert(d.name.to_string(), v);
                }
                None if d.full.is_some() => {
                    out.insert(d.name.to_string(), d.default);
                }
                None => {}
            }
        }
        Ok(out)
    }

    /// Parameter sets run by a profile.
    pub fn profile_params(&self, profile: Profile) -> Vec<Params> {
        let mut sets = vec![Params::new()];
        for d in self.params {
            let Some((lo, hi)) = d.full else { continue };
            let values: Vec<i64> = match profile {
                Profile::Quick => vec![d.default],
                Profile::Full => (lo..=hi).collect(),
            };
            sets = sets
                .into_iter()
                .flat_map(|s| {
                    values.iter().map(move |&v| {
                        let mut s = s.clone();
                        s.insert(d.name.to_string(), v);
                        s
                    })
                })
                .collect();
        }
        sets
    }
}

impl fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("tag", &self.tag)
            .field("strategy", &self.strategy)
            .field("expect", &self.expect)
            .finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

/// Outcome of one check; `witness` is present unless the status is pass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub params: Params,
    pub status: Status,
    pub witness: Option<String>,
    pub millis: u64,
    pub seed: u64,
    pub expected: Expectation,
}

impl CheckResult {
    /// Whether the status is what the registry expects.
    pub fn as_expected(&self) -> bool {
        matches!(
            (self.status, self.expected),
            (Status::Pass, Expectation::Pass) | (Status::Fail, Expectation::Fail)
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl std::str::FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(Error::InvalidArgument(format!("unknown profile {s}"))),
        }
    }
}

pub fn find(id: &str) -> Result<&'static IdentityDescriptor> {
    registry()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown identity {id}")))
}

/// Descriptors whose id, tag or title contains `filter`.
pub fn filtered(filter: &str) -> Vec<&'static IdentityDescriptor> {
    let f = filter.to_lowercase();
    registry()
        .iter()
        .filter(|d| {
            d.id.contains(&f) || d.tag.to_lowercase().contains(&f) || d.title.to_lowercase().contains(&f)
        })
        .collect()
}

pub fn build_side(id: &str, side: Side, params: &Params) -> Result<SideValue> {
    let d = find(id)?;
    let sides = d
        .sides
        .ok_or_else(|| Error::InvalidArgument(format!("{id} is checked without side builders")))?;
    let (l, r) = sides(&d.resolve(params)?)?;
    Ok(match side {
        Side::Left => l,
        Side::Right => r,
    })
}

/// FNV-1a over the id and the rendered parameters, mixed with the suite seed.
pub fn check_seed(base: u64, id: &str, params: &Params) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let text = format!("{id}|{params:?}");
    for b in text.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h ^ base
}

/// Number of random points used to spot-check exact polynomial identities.
pub const SPOT_POINTS: usize = 3;

/// Polynomial comparison plus evaluation of both sides at random rational
/// points, so that a bug in one comparison path cannot hide a failure.
pub fn compare_exact(lhs: &LaurentPoly, rhs: &LaurentPoly, sampler: &mut PointSampler) -> Result<CheckOutcome> {
    let symbolic = compare_polys(lhs, rhs);
    if !symbolic.is_pass() {
        return Ok(symbolic);
    }
    let vars: Vec<VarId> = VarId::ALL
        .into_iter()
        .filter(|&v| lhs.contains_var(v) || rhs.contains_var(v))
        .collect();
    for _ in 0..SPOT_POINTS {
        let at = sampler.point(&vars);
        let out = compare_values(&lhs.evaluate(&at)?, &rhs.evaluate(&at)?, &at);
        if !out.is_pass() {
            return Ok(out.context("spot check"));
        }
    }
    Ok(CheckOutcome::Pass)
}

fn compare_sides(l: &SideValue, r: &SideValue, sampler: &mut PointSampler) -> Result<CheckOutcome> {
    match (l, r) {
        (SideValue::Poly(a), SideValue::Poly(b)) => compare_exact(a, b, sampler),
        (SideValue::Series(a), SideValue::Series(b)) => equal_mod(a, b),
        _ => Err(Error::InvalidArgument("sides of different kinds".into())),
    }
}

fn run_check(d: &IdentityDescriptor, params: &Params, sampler: &mut PointSampler) -> Result<CheckOutcome> {
    if let Some(check) = d.check {
        return check(params, sampler);
    }
    let sides = d.sides.expect("descriptor has a check or side builders");
    let (l, r) = sides(params)?;
    compare_sides(&l, &r, sampler)
}

/// Runs one descriptor at `params`. Errors and panics are reported in the
/// result, never propagated.
pub fn check_descriptor(d: &IdentityDescriptor, params: &Params, seed: u64) -> CheckResult {
    let start = Instant::now();
    let seed = check_seed(seed, d.id, params);
    let (params, outcome) = match d.resolve(params) {
        Ok(p) => {
            let mut sampler = PointSampler::new(seed);
            let out = catch_unwind(AssertUnwindSafe(|| run_check(d, &p, &mut sampler)))
                .unwrap_or_else(|e| {
                    let msg = e
                        .downcast_ref::<String>()
                        .cloned()
                        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                        .unwrap_or_else(|| "panic".into());
                    Err(Error::InvalidArgument(format!("panic: {msg}")))
                });
            (p, out)
        }
        Err(e) => (params.clone(), Err(e)),
    };
    let (status, witness) = match outcome {
        Ok(CheckOutcome::Pass) => (Status::Pass, None),
        Ok(CheckOutcome::Fail { witness }) => (Status::Fail, Some(witness)),
        Err(e) => (Status::Error, Some(e.to_string())),
    };
    CheckResult {
        id: d.id.to_string(),
        params,
        status,
        witness,
        millis: start.elapsed().as_millis() as u64,
        seed,
        expected: d.expect,
    }
}

/// Like [`check_descriptor`], but unknown ids and invalid parameters are
/// errors rather than results.
pub fn check(id: &str, params: &Params, seed: u64) -> Result<CheckResult> {
    let d = find(id)?;
    d.resolve(params)?;
    Ok(check_descriptor(d, params, seed))
}

/// The recurrence checks `rec-1.13` and `rec-6.12` up to `L = l_max`.
pub fn check_recurrence(id: &str, l_max: i64, seed: u64) -> Result<CheckResult> {
    if id != "rec-1.13" && id != "rec-6.12" {
        return Err(Error::InvalidArgument(format!("{id} is not a recurrence check")));
    }
    check(id, &Params::from([("L".to_string(), l_max)]), seed)
}

/// Runs every descriptor matching `filter` at the profile's parameters on
/// `jobs` worker threads (0 means the rayon default). Results are sorted by
/// id and then parameters, so output is deterministic for a fixed seed.
pub fn run_suite(profile: Profile, jobs: usize, seed: u64, filter: Option<&str>) -> Vec<CheckResult> {
    let descriptors = match filter {
        Some(f) => filtered(f),
        None => registry().iter().collect(),
    };
    let work: Vec<(&IdentityDescriptor, Params)> = descriptors
        .into_iter()
        .flat_map(|d| d.profile_params(profile).into_iter().map(move |p| (d, p)))
        .collect();
    let run = || -> Vec<CheckResult> {
        work.par_iter()
            .map(|(d, p)| check_descriptor(d, p, seed))
            .collect()
    };
    let mut results = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    results.sort_by(|a, b| (a.id.as_str(), &a.params).cmp(&(b.id.as_str(), &b.params)));
    results
}

/// True when every result matches its expectation.
pub fn suite_ok(results: &[CheckResult]) -> bool {
    results.iter().all(CheckResult::as_expected)
}

#[cfg(test)]
mod tests;
