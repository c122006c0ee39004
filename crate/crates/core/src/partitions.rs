//! Enumeration and counting: distinct partitions, chains, Type-1 colored
//! partitions, the Göllnitz map, Euler subtraction and the brute-force
//! oracles behind the lemmas and counting theorems.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::check::CheckOutcome;
use crate::error::{Error, Result};
use crate::poly::{ExponentVector, LaurentPoly, VarId};
use crate::series::QSeriesTrunc;

/// A partition into distinct positive parts, stored in increasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DistinctPartition(Vec<u32>);

impl DistinctPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.first() == Some(&0) || parts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not a strictly increasing list of positive parts"
            )));
        }
        Ok(DistinctPartition(parts))
    }

    pub fn empty() -> Self {
        DistinctPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for DistinctPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// The run `start, start+1, ..., start+len-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Chain {
    pub start: u32,
    pub len: u32,
}

impl Chain {
    /// `l*s + T_{l-1}`.
    pub fn size(&self) -> u32 {
        self.len * self.start + self.len * (self.len - 1) / 2
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(s={},l={})", self.start, self.len)
    }
}

/// Maximal runs of consecutive parts, ascending.
pub fn decompose_chains(p: &DistinctPartition) -> Vec<Chain> {
    let mut out: Vec<Chain> = Vec::new();
    for &x in p.parts() {
        match out.last_mut() {
            Some(c) if c.start + c.len == x => c.len += 1,
            _ => out.push(Chain { start: x, len: 1 }),
        }
    }
    out
}

/// The six colors, declared in the order `AB < AC < A < BC < B < C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Color {
    AB,
    AC,
    A,
    BC,
    B,
    C,
}

impl Color {
    pub const ALL: [Color; 6] = [Color::AB, Color::AC, Color::A, Color::BC, Color::B, Color::C];
    pub const PRIMARY: [Color; 3] = [Color::A, Color::B, Color::C];

    pub fn is_primary(self) -> bool {
        matches!(self, Color::A | Color::B | Color::C)
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::AB => "AB",
            Color::AC => "AC",
            Color::A => "A",
            Color::BC => "BC",
            Color::B => "B",
            Color::C => "C",
        }
    }

    /// Exponents of `A, B, C` in the color's weight.
    pub fn weight_exponents(self) -> [i32; 3] {
        match self {
            Color::AB => [1, 1, 0],
            Color::AC => [1, 0, 1],
            Color::A => [1, 0, 0],
            Color::BC => [0, 1, 1],
            Color::B => [0, 1, 0],
            Color::C => [0, 0, 1],
        }
    }

    fn weight_vector(self) -> ExponentVector {
        let [a, b, c] = self.weight_exponents();
        let mut e = ExponentVector::ZERO;
        e.set(VarId::A, a);
        e.set(VarId::B, b);
        e.set(VarId::C, c);
        e
    }

    /// The monomial weight: `A`, `B`, `C`, or a product of two for a
    /// secondary color.
    pub fn weight(self) -> LaurentPoly {
        LaurentPoly::monomial(1, self.weight_vector())
    }

    /// Image of the colored integer `n` under the residue-class map mod 6.
    pub fn gollnitz_value(self, n: u32) -> Result<u32> {
        if !self.is_primary() && n <= 1 {
            return Err(Error::InvalidArgument(format!(
                "secondary color {} needs a part > 1, got {n}",
                self.name()
            )));
        }
        if n == 0 {
            return Err(Error::InvalidArgument("parts are positive".into()));
        }
        let offset = match self {
            Color::AB => 6,
            Color::AC => 5,
            Color::A => 4,
            Color::BC => 3,
            Color::B => 2,
            Color::C => 1,
        };
        Ok(6 * n - offset)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether a smaller part `(p1, x1)` may be followed by `(p2, x2)`.
fn adjacent_ok(p1: u32, x1: Color, p2: u32, x2: Color) -> bool {
    match p2.checked_sub(p1) {
        Some(0) | None => false,
        Some(1) => (x1 == x2 && x1.is_primary()) || x2 > x1,
        Some(_) => true,
    }
}

fn part_color_ok(p: u32, x: Color) -> bool {
    p >= 2 || (p == 1 && x.is_primary())
}

/// An increasing list of colored parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ColoredPartition(Vec<(u32, Color)>);

impl ColoredPartition {
    pub fn new(parts: Vec<(u32, Color)>) -> Self {
        ColoredPartition(parts)
    }

    pub fn parts(&self) -> &[(u32, Color)] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().map(|&(p, _)| p).sum()
    }

    /// The Type-1 conditions: distinct parts, primary colors on part 1, and
    /// a gap of exactly 1 only between equal primary colors or when the
    /// larger part has the higher color.
    pub fn is_type1(&self) -> bool {
        self.0.iter().all(|&(p, x)| part_color_ok(p, x))
            && self
                .0
                .windows(2)
                .all(|w| adjacent_ok(w[0].0, w[0].1, w[1].0, w[1].1))
    }

    pub fn stats(&self) -> GollnitzStats {
        let mut s = GollnitzStats {
            n: self.size(),
            ..Default::default()
        };
        for &(_, x) in &self.0 {
            *s.count_mut(x) += 1;
        }
        s
    }

    pub fn weight(&self) -> LaurentPoly {
        let e = self
            .0
            .iter()
            .fold(ExponentVector::ZERO, |acc, &(_, x)| acc + x.weight_vector());
        LaurentPoly::monomial(1, e)
    }
}

impl fmt::Display for ColoredPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(p, x)| format!("{x}{p}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Weight and color multiplicities of a Type-1 partition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GollnitzStats {
    pub n: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub ab: u32,
    pub ac: u32,
    pub bc: u32,
}

impl GollnitzStats {
    fn count_mut(&mut self, x: Color) -> &mut u32 {
        match x {
            Color::AB => &mut self.ab,
            Color::AC => &mut self.ac,
            Color::A => &mut self.a,
            Color::BC => &mut self.bc,
            Color::B => &mut self.b,
            Color::C => &mut self.c,
        }
    }

    /// Multiplicities in the order `a, b, c, ab, ac, bc`.
    pub fn multiplicities(&self) -> [u32; 6] {
        [self.a, self.b, self.c, self.ab, self.ac, self.bc]
    }

    pub fn i(&self) -> u32 {
        self.a + self.ab + self.ac
    }

    pub fn j(&self) -> u32 {
        self.b + self.ab + self.bc
    }

    pub fn k(&self) -> u32 {
        self.c + self.ac + self.bc
    }

    pub fn t(&self) -> u32 {
        self.a + self.b + self.c + self.ab + self.ac + self.bc
    }
}

/// Calls `f` on every partition into distinct parts `<= max_part` whose
/// size is at most `max_sum`, parts increasing.
pub fn for_each_distinct(max_part: u32, max_sum: u32, f: &mut impl FnMut(&[u32])) {
    fn go(next: u32, max_part: u32, room: u32, acc: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        f(acc);
        for p in next..=max_part.min(room) {
            acc.push(p);
            go(p + 1, max_part, room - p, acc, f);
            acc.pop();
        }
    }
    go(1, max_part, max_sum, &mut Vec::new(), f);
}

/// Distinct-part partitions of `n`, parts at most `max_part` if given, in
/// colex order (compared from the largest part down).
pub fn enumerate_distinct(n: u32, max_part: Option<u32>) -> Vec<DistinctPartition> {
    let mut out = Vec::new();
    for_each_distinct(max_part.unwrap_or(n), n, &mut |ps| {
        if ps.iter().sum::<u32>() == n {
            out.push(DistinctPartition(ps.to_vec()));
        }
    });
    out.sort_by(|x, y| x.0.iter().rev().cmp(y.0.iter().rev()));
    out
}

/// Calls `f` on every unrestricted partition of `n` with parts at most
/// `max_part`, parts nonincreasing.
pub fn for_each_partition(n: u32, max_part: u32, f: &mut impl FnMut(&[u32])) {
    fn go(room: u32, cap: u32, acc: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if room == 0 {
            f(acc);
            return;
        }
        for p in (1..=cap.min(room)).rev() {
            acc.push(p);
            go(room - p, p, acc, f);
            acc.pop();
        }
    }
    go(n, max_part, &mut Vec::new(), f);
}

/// All valid Type-1 colorings of one distinct partition, color vectors in
/// lexicographic order of the color ranking.
pub fn type1_colorings(p: &DistinctPartition) -> Vec<ColoredPartition> {
    fn go(parts: &[u32], acc: &mut Vec<(u32, Color)>, out: &mut Vec<ColoredPartition>) {
        let Some((&p, rest)) = parts.split_first() else {
            out.push(ColoredPartition(acc.clone()));
            return;
        };
        for x in Color::ALL {
            let ok = part_color_ok(p, x)
                && acc.last().is_none_or(|&(p0, x0)| adjacent_ok(p0, x0, p, x));
            if ok {
                acc.push((p, x));
                go(rest, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(p.parts(), &mut Vec::new(), &mut out);
    out
}

/// Type-1 partitions of `n` whose parts are at most `max_part` if given.
pub fn enumerate_type1(n: u32, max_part: Option<u32>) -> Vec<ColoredPartition> {
    enumerate_distinct(n, max_part)
        .iter()
        .flat_map(type1_colorings)
        .collect()
}

/// Sum over every coloring of `p` that satisfies the Type-1 conditions of
/// the product of the part weights. Tries all `6^len` colorings.
pub fn color_weight_oracle(p: &DistinctPartition) -> LaurentPoly {
    let len = p.len() as u32;
    let mut acc: HashMap<ExponentVector, i64> = HashMap::new();
    for code in 0..6u64.pow(len) {
        let mut c = code;
        let cp = ColoredPartition(
            p.parts()
                .iter()
                .map(|&part| {
                    let x = Color::ALL[(c % 6) as usize];
                    c /= 6;
                    (part, x)
                })
                .collect(),
        );
        if cp.is_type1() {
            let e = cp
                .0
                .iter()
                .fold(ExponentVector::ZERO, |e, &(_, x)| e + x.weight_vector());
            *acc.entry(e).or_default() += 1;
        }
    }
    LaurentPoly::from_terms(acc)
}

/// Images of the colored parts under the mod-6 map, ascending.
pub fn gollnitz_image(cp: &ColoredPartition) -> Result<Vec<u32>> {
    let mut out = cp
        .parts()
        .iter()
        .map(|&(n, x)| x.gollnitz_value(n))
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    Ok(out)
}

/// The gap conditions of the first Göllnitz family, on parts in any order.
pub fn is_gollnitz_a(parts: &[u32]) -> bool {
    let mut ps = parts.to_vec();
    ps.sort_unstable_by(|x, y| y.cmp(x));
    ps.iter().all(|&p| p != 1 && p != 3)
        && ps.windows(2).all(|w| {
            let gap = w[0] as i64 - w[1] as i64;
            let strict = matches!(w[0] % 6, 0 | 1 | 3);
            if strict {
                gap > 6
            } else {
                gap >= 6
            }
        })
}

/// Partitions of `n` with no part 1 or 3, consecutive parts at least 6
/// apart and more than 6 apart when the larger is `0, 1, 3 mod 6`. Filters
/// all partitions of `n`.
pub fn count_gollnitz_a(n: u32) -> u64 {
    let mut count = 0;
    for_each_partition(n, n, &mut |ps| {
        if is_gollnitz_a(ps) {
            count += 1;
        }
    });
    count
}

/// Partitions of `n` into distinct parts `2, 4, 5 mod 6`.
pub fn count_gollnitz_b(n: u32) -> u64 {
    enumerate_distinct(n, None)
        .iter()
        .filter(|p| p.parts().iter().all(|x| matches!(x % 6, 2 | 4 | 5)))
        .count() as u64
}

/// Type-1 partitions (of any colored weight) whose image sum is at most
/// `max_image`, found by depth-first search pruned on the image sum.
pub fn type1_by_image_sum(max_image: u32) -> Vec<(ColoredPartition, Vec<u32>)> {
    fn go(
        next_min: u32,
        room: u32,
        acc: &mut Vec<(u32, Color)>,
        out: &mut Vec<(ColoredPartition, Vec<u32>)>,
    ) {
        let cp = ColoredPartition(acc.clone());
        let image = gollnitz_image(&cp).expect("valid colors");
        out.push((cp, image));
        let mut p = next_min;
        while 6 * p - 6 <= room || p == 1 {
            for x in Color::ALL {
                let Ok(v) = x.gollnitz_value(p) else { continue };
                let ok = v <= room
                    && part_color_ok(p, x)
                    && acc.last().is_none_or(|&(p0, x0)| adjacent_ok(p0, x0, p, x));
                if ok {
                    acc.push((p, x));
                    go(p + 1, room - v, acc, out);
                    acc.pop();
                }
            }
            if 6 * p - 6 > room {
                break;
            }
            p += 1;
        }
    }
    let mut out = Vec::new();
    go(1, max_image, &mut Vec::new(), &mut out);
    out
}

/// For every image sum `S <= max_image`: the images of Type-1 partitions
/// are pairwise distinct, each satisfies the first family's conditions, and
/// there are exactly `count_gollnitz_a(S)` of them.
pub fn gollnitz_consistency(max_image: u32) -> CheckOutcome {
    let mut by_sum: BTreeMap<u32, BTreeSet<Vec<u32>>> = BTreeMap::new();
    for (cp, image) in type1_by_image_sum(max_image) {
        if !cp.is_type1() {
            return CheckOutcome::fail(format!("search produced non-Type-1 {cp}"));
        }
        if !is_gollnitz_a(&image) {
            return CheckOutcome::fail(format!("{cp} maps to {image:?}, violating the gap conditions"));
        }
        let s = image.iter().sum();
        if !by_sum.entry(s).or_default().insert(image.clone()) {
            return CheckOutcome::fail(format!("two Type-1 partitions map to {image:?}"));
        }
    }
    for s in 0..=max_image {
        let got = by_sum.get(&s).map_or(0, |v| v.len() as u64);
        let want = count_gollnitz_a(s);
        if got != want {
            return CheckOutcome::fail(format!(
                "image sum {s}: {got} Type-1 images, {want} partitions of the first family"
            ));
        }
    }
    CheckOutcome::Pass
}

/// Number of Type-1 partitions of `n` with the given multiplicities
/// `[a, b, c, ab, ac, bc]` and parts at most `bound` if given.
pub fn count_gl(n: u32, mult: [u32; 6], bound: Option<u32>) -> u64 {
    enumerate_type1(n, bound)
        .iter()
        .filter(|cp| cp.stats().multiplicities() == mult)
        .count() as u64
}

/// Tally of Type-1 partitions of size at most `max_n` (parts at most
/// `bound` if given) by `(n, i, j, k)`.
pub fn gl_table(max_n: u32, bound: Option<u32>) -> BTreeMap<(u32, u32, u32, u32), u64> {
    let mut out = BTreeMap::new();
    for n in 0..=max_n {
        for cp in enumerate_type1(n, bound) {
            let s = cp.stats();
            *out.entry((n, s.i(), s.j(), s.k())).or_default() += 1;
        }
    }
    out
}

/// Number of triples of distinct-part partitions in colors `A, B, C` with
/// `i, j, k` parts and total `n`. With a bound `L` the largest parts are
/// limited by `L - k`, `L - i` and `L - j`; a negative limit admits nothing.
pub fn count_pl(n: u32, i: u32, j: u32, k: u32, bound: Option<u32>) -> u64 {
    let limits = match bound {
        Some(l) => {
            let lim = |m: u32| l as i64 - m as i64;
            let (la, lb, lc) = (lim(k), lim(i), lim(j));
            if la < 0 || lb < 0 || lc < 0 {
                return 0;
            }
            [la as u32, lb as u32, lc as u32]
        }
        None => [n; 3],
    };
    // distinct partitions with a fixed number of parts, tallied by size
    let tally = |parts: u32, max_part: u32| -> Vec<u64> {
        let mut t = vec![0u64; n as usize + 1];
        for_each_distinct(max_part, n, &mut |ps| {
            if ps.len() as u32 == parts {
                t[ps.iter().sum::<u32>() as usize] += 1;
            }
        });
        t
    };
    let (ta, tb, tc) = (tally(i, limits[0]), tally(j, limits[1]), tally(k, limits[2]));
    let mut count = 0;
    for x in 0..=n as usize {
        for y in 0..=n as usize - x {
            count += ta[x] * tb[y] * tc[n as usize - x - y];
        }
    }
    count
}

/// Subtracts `1, 2, ..., t` from the parts in increasing order.
pub fn euler_subtract(p: &DistinctPartition) -> Vec<u32> {
    p.parts()
        .iter()
        .enumerate()
        .map(|(r, &x)| x - (r as u32 + 1))
        .collect()
}

/// Inverse of [`euler_subtract`]; the input is sorted first.
pub fn euler_unsubtract(m: &[u32]) -> DistinctPartition {
    let mut m = m.to_vec();
    m.sort_unstable();
    DistinctPartition(m.iter().enumerate().map(|(r, &x)| x + r as u32 + 1).collect())
}

/// `(1 - y)^d` with `y` carried by `z`.
fn one_minus_y_pow(d: u32) -> LaurentPoly {
    (&LaurentPoly::one() - &LaurentPoly::var(VarId::Z)).pow(d)
}

fn distinct_positive(parts: &[u32]) -> u32 {
    parts
        .iter()
        .filter(|&&p| p > 0)
        .collect::<BTreeSet<_>>()
        .len() as u32
}

/// Partitions into exactly `i` positive parts, weight
/// `(1-y)^{#distinct parts} (-1)^i`, through `q^order`. `y` is carried by `z`.
pub fn oracle_g(i: u32, order: usize) -> QSeriesTrunc {
    let mut s = QSeriesTrunc::zero(order);
    let sign = if i % 2 == 0 { 1 } else { -1 };
    let mut acc = vec![LaurentPoly::zero(); order + 1];
    for n in 0..=order as u32 {
        for_each_partition(n, n, &mut |ps| {
            if ps.len() as u32 == i {
                acc[n as usize] += &one_minus_y_pow(distinct_positive(ps)).scale(&BigInt::from(sign));
            }
        });
    }
    for (n, c) in acc.into_iter().enumerate() {
        s = s
            .add(&QSeriesTrunc::from_poly(&c.shift_q(n as i64), order).expect("nonnegative"))
            .expect("same order");
    }
    s
}

/// Partitions into exactly `i` nonnegative parts, weight
/// `(1-y)^{#distinct positive parts}`, through `q^order`.
pub fn oracle_h(i: u32, order: usize) -> QSeriesTrunc {
    let mut poly = LaurentPoly::zero();
    for n in 0..=order as u32 {
        for_each_partition(n, n, &mut |ps| {
            if ps.len() as u32 <= i {
                poly += &one_minus_y_pow(distinct_positive(ps)).shift_q(n as i64);
            }
        });
    }
    QSeriesTrunc::from_poly(&poly, order).expect("nonnegative")
}

/// Exactly `i` parts from `0..=l`, weight `(1-y)^{#distinct positive
/// parts}`: a polynomial in `q` and `y` (carried by `z`).
pub fn oracle_hl(l: u32, i: u32) -> LaurentPoly {
    fn go(max: u32, left: u32, acc: &mut Vec<u32>, out: &mut LaurentPoly) {
        if left == 0 {
            let n: u32 = acc.iter().sum();
            *out += &one_minus_y_pow(distinct_positive(acc)).shift_q(n as i64);
            return;
        }
        for p in (0..=max).rev() {
            acc.push(p);
            go(p, left - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = LaurentPoly::zero();
    go(l, i, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` whose even parts are distinct, with exactly `j` even
/// parts (odd parts unrestricted).
pub fn count_e(n: u32, j: u32) -> u64 {
    let mut count = 0;
    for_each_partition(n, n, &mut |ps| {
        let evens: Vec<u32> = ps.iter().copied().filter(|p| p % 2 == 0).collect();
        let distinct = evens.windows(2).all(|w| w[0] != w[1]);
        if distinct && evens.len() as u32 == j {
            count += 1;
        }
    });
    count
}

/// Distinct-part partitions of `n` with exactly `k` chains whose smallest
/// part exceeds 1.
pub fn count_v(n: u32, k: u32) -> u64 {
    enumerate_distinct(n, None)
        .iter()
        .filter(|p| decompose_chains(p).iter().filter(|c| c.start > 1).count() as u32 == k)
        .count() as u64
}

/// Partitions of `n` into odd parts.
pub fn count_odd_parts(n: u32) -> u64 {
    let mut count = 0;
    for_each_partition(n, n, &mut |ps| {
        if ps.iter().all(|p| p % 2 == 1) {
            count += 1;
        }
    });
    count
}

/// Partitions of `n` into distinct parts.
pub fn count_distinct_parts(n: u32) -> u64 {
    let mut count = 0;
    for_each_distinct(n, n, &mut |ps| {
        if ps.iter().sum::<u32>() == n {
            count += 1;
        }
    });
    count
}

/// One row of the exported count table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: u32,
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub gl: u64,
    pub pl: u64,
}

/// Both sides of the bounded counting theorem for `n <= max_n` and
/// `i + j + k <= max_ijk`; the bound is `L` or none.
pub fn count_table(max_n: u32, max_ijk: u32, bound: Option<u32>) -> Vec<CountRow> {
    let gl = gl_table(max_n, bound);
    let mut rows = Vec::new();
    for n in 0..=max_n {
        for i in 0..=max_ijk {
            for j in 0..=max_ijk - i {
                for k in 0..=max_ijk - i - j {
                    rows.push(CountRow {
                        n,
                        i,
                        j,
                        k,
                        gl: gl.get(&(n, i, j, k)).copied().unwrap_or(0),
                        pl: count_pl(n, i, j, k, bound),
                    });
                }
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::p;
    use crate::qfun::{poch_q, qbinom, qfact};

    fn dp(parts: &[u32]) -> DistinctPartition {
        DistinctPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn distinct_enumeration_examples() {
        assert_eq!(enumerate_distinct(3, Some(3)), vec![dp(&[1, 2]), dp(&[3])]);
        assert_eq!(enumerate_distinct(0, Some(5)), vec![DistinctPartition::empty()]);
        assert_eq!(enumerate_distinct(10, None).len(), 10);
        assert!(DistinctPartition::new(vec![2, 2]).is_err());
        assert!(DistinctPartition::new(vec![0, 1]).is_err());
    }

    #[test]
    fn chain_decomposition_examples() {
        let cs = decompose_chains(&dp(&[1, 2, 4, 5, 6, 9]));
        assert_eq!(
            cs,
            vec![
                Chain { start: 1, len: 2 },
                Chain { start: 4, len: 3 },
                Chain { start: 9, len: 1 }
            ]
        );
        assert!(decompose_chains(&DistinctPartition::empty()).is_empty());
        assert_eq!(
            decompose_chains(&dp(&[2, 4])),
            vec![Chain { start: 2, len: 1 }, Chain { start: 4, len: 1 }]
        );
        assert_eq!(Chain { start: 1, len: 4 }.size(), 10);
        assert_eq!(Chain { start: 4, len: 3 }.size(), 15);
    }

    #[test]
    fn chains_concatenate_back() {
        for n in 0..=20 {
            for p in enumerate_distinct(n, None) {
                let back: Vec<u32> = decompose_chains(&p)
                    .iter()
                    .flat_map(|c| c.start..c.start + c.len)
                    .collect();
                assert_eq!(back, p.parts());
            }
        }
    }

    #[test]
    fn type1_small_cases() {
        let one = enumerate_type1(1, None);
        assert_eq!(
            one,
            vec![
                ColoredPartition::new(vec![(1, Color::A)]),
                ColoredPartition::new(vec![(1, Color::B)]),
                ColoredPartition::new(vec![(1, Color::C)])
            ]
        );
        assert_eq!(enumerate_type1(2, None).len(), 6);
        // size 3: six singletons {3} plus the valid colorings of {1,2}
        let pairs: Vec<_> = enumerate_type1(3, None)
            .into_iter()
            .filter(|cp| cp.parts().len() == 2)
            .collect();
        let w: LaurentPoly = pairs.iter().map(ColoredPartition::weight).sum();
        assert_eq!(w, p("A^2 + A*B*C + A*B + A*C + B^2 + B*C + C^2"));
    }

    #[test]
    fn type1_predicate() {
        use Color::*;
        let ok = |v: Vec<(u32, Color)>| ColoredPartition::new(v).is_type1();
        assert!(ok(vec![(1, A), (2, A)]));
        assert!(!ok(vec![(1, B), (2, A)]));
        assert!(!ok(vec![(2, AB), (3, AB)]));
        assert!(ok(vec![(2, AB), (3, AC)]));
        assert!(!ok(vec![(1, AB)]));
        assert!(ok(vec![(2, C), (4, AB)]));
        assert!(!ok(vec![(2, A), (2, B)]));
    }

    #[test]
    fn color_weight_oracle_examples() {
        let six = p("A + B + C + A*B + A*C + B*C");
        assert_eq!(color_weight_oracle(&dp(&[2, 4])), six.pow(2));
        assert_eq!(color_weight_oracle(&DistinctPartition::empty()), LaurentPoly::one());
        // the coloring (1_A, 2_A) contributes A^2 on top of the printed value
        let printed = p("A*B*C + A*B + A*C + B^2 + B*C + C^2");
        assert_eq!(&color_weight_oracle(&dp(&[1, 2])) - &printed, p("A^2"));
    }

    #[test]
    fn gollnitz_image_examples() {
        use Color::*;
        let img = |n, x| gollnitz_image(&ColoredPartition::new(vec![(n, x)])).unwrap();
        assert_eq!(img(1, A), vec![2]);
        assert_eq!(img(1, B), vec![4]);
        assert_eq!(img(1, C), vec![5]);
        assert_eq!(img(2, AB), vec![6]);
        assert_eq!(img(2, BC), vec![9]);
        assert!(gollnitz_image(&ColoredPartition::new(vec![(1, AC)])).is_err());
    }

    #[test]
    fn gollnitz_counts() {
        assert_eq!(count_gollnitz_a(2), 1);
        assert_eq!(count_gollnitz_a(6), 1);
        assert_eq!(count_gollnitz_a(11), 2);
        assert_eq!(count_gollnitz_b(2), 1);
        assert_eq!(count_gollnitz_b(6), 1);
        assert_eq!(count_gollnitz_b(11), 2);
        for n in 0..=30 {
            assert_eq!(count_gollnitz_a(n), count_gollnitz_b(n), "N = {n}");
        }
    }

    #[test]
    fn gollnitz_map_is_consistent() {
        assert!(gollnitz_consistency(30).is_pass());
    }

    #[test]
    fn gl_and_pl_examples() {
        assert_eq!(count_gl(1, [1, 0, 0, 0, 0, 0], Some(1)), 1);
        assert_eq!(count_gl(2, [0, 0, 0, 0, 0, 1], Some(2)), 1);
        assert_eq!(count_gl(3, [1, 1, 0, 0, 0, 0], Some(2)), 1);
        assert_eq!(count_pl(1, 1, 0, 0, Some(10)), 1);
        assert_eq!(count_pl(3 + 1 + 6, 2, 1, 3, None), 1);
        assert_eq!(count_pl(4, 1, 1, 0, None), 3);
    }

    #[test]
    fn unbounded_counting_theorem() {
        let gl = gl_table(12, None);
        for n in 0..=12 {
            for i in 0..=4 {
                for j in 0..=4 - i {
                    for k in 0..=4 - i - j {
                        let g = gl.get(&(n, i, j, k)).copied().unwrap_or(0);
                        assert_eq!(g, count_pl(n, i, j, k, None), "N={n} i={i} j={j} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn bounded_counting_theorem_small() {
        for l in 0..=4 {
            for row in count_table(10, 4, Some(l)) {
                assert_eq!(row.gl, row.pl, "L = {l}: {row:?}");
            }
        }
    }

    #[test]
    fn pl_matches_binomial_generating_function() {
        // distinct partitions with i parts <= M have generating function q^{T_i} [M, i]
        let l = 5u32;
        for (i, j, k) in [(1, 1, 0), (2, 1, 1), (0, 2, 2), (3, 0, 1)] {
            let t = |x: u32| (x * (x + 1) / 2) as i64;
            let gf = &(&qbinom(l as i64 - k as i64, i as i64, 1) * &qbinom(l as i64 - i as i64, j as i64, 1))
                * &qbinom(l as i64 - j as i64, k as i64, 1);
            let gf = gf.shift_q(t(i) + t(j) + t(k));
            for n in 0..=20 {
                assert_eq!(
                    BigInt::from(count_pl(n, i, j, k, Some(l))),
                    gf.coeff(&ExponentVector::single(VarId::Q, n as i32))
                );
            }
        }
    }

    #[test]
    fn euler_subtraction_round_trips() {
        assert_eq!(euler_subtract(&dp(&[1, 2, 3])), vec![0, 0, 0]);
        assert_eq!(euler_subtract(&dp(&[2, 4, 5])), vec![1, 2, 2]);
        assert!(euler_subtract(&DistinctPartition::empty()).is_empty());
        assert_eq!(euler_unsubtract(&[0, 0, 0]), dp(&[1, 2, 3]));
        assert_eq!(euler_unsubtract(&[2, 1, 2]), dp(&[2, 4, 5]));
        assert_eq!(euler_unsubtract(&[]), DistinctPartition::empty());
        for n in 0..=25 {
            for p in enumerate_distinct(n, None) {
                let m = euler_subtract(&p);
                let t = p.len() as u32;
                assert_eq!(m.iter().sum::<u32>(), n - t * (t + 1) / 2);
                assert!(m.windows(2).all(|w| w[0] <= w[1]));
                assert_eq!(euler_unsubtract(&m), p);
            }
        }
    }

    #[test]
    fn lemma_oracle_examples() {
        assert_eq!(oracle_g(0, 5), QSeriesTrunc::one(5));
        let g1 = oracle_g(1, 3);
        let want = QSeriesTrunc::from_poly(&p("z*q + z*q^2 + z*q^3 - q - q^2 - q^3"), 3).unwrap();
        assert_eq!(g1, want);
        assert_eq!(oracle_hl(1, 1), p("1 + q - q*z"));
        assert_eq!(oracle_hl(4, 0), LaurentPoly::one());
        assert_eq!(oracle_hl(2, 1), p("1 + q + q^2 - q*z - q^2*z"));
    }

    #[test]
    fn lemma_formulas_small() {
        let n = 12;
        for i in 0..=4u32 {
            let y = p("z");
            let g = QSeriesTrunc::from_poly(&poch_q(&y, i as usize).shift_q(i as i64).scale(&crate::qfun::sign(i as i64)), n)
                .unwrap()
                .mul_series(&QSeriesTrunc::from_poly(&qfact(i as usize), n).unwrap().inverse().unwrap())
                .unwrap();
            assert_eq!(oracle_g(i, n), g, "g_{i}");
            let h = QSeriesTrunc::from_poly(&poch_q(&p("z*q"), i as usize), n)
                .unwrap()
                .mul_series(&QSeriesTrunc::from_poly(&qfact(i as usize), n).unwrap().inverse().unwrap())
                .unwrap();
            assert_eq!(oracle_h(i, n), h, "h_{i}");
        }
    }

    #[test]
    fn e_and_v_counts() {
        assert_eq!(count_e(3, 0), 2);
        assert_eq!(count_e(3, 1), 1);
        assert_eq!(count_v(3, 0), 1);
        assert_eq!(count_v(3, 1), 1);
        assert_eq!(count_e(0, 0), 1);
        for n in 0..=20 {
            assert_eq!(count_odd_parts(n), count_distinct_parts(n), "n = {n}");
        }
    }
}
