//! Chain weights: the sum over Type-1 colorings of a single chain, by
//! recurrence on the color of the smallest part and in closed form.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::partitions::{decompose_chains, Chain, Color, DistinctPartition};
use crate::poly::{p, LaurentPoly, VarId};

/// `sum_{i+j+k=n} A^i B^j C^k`, zero for negative `n`.
pub fn h3(n: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for i in 0..=n {
        for j in 0..=n - i {
            out += &LaurentPoly::term(
                1,
                &[(VarId::A, i as i32), (VarId::B, j as i32), (VarId::C, (n - i - j) as i32)],
            );
        }
    }
    out
}

/// `sum_{j+k=n} B^j C^k`, zero for negative `n`.
pub fn h_bc(n: i64) -> LaurentPoly {
    (0..=n)
        .map(|j| LaurentPoly::term(1, &[(VarId::B, j as i32), (VarId::C, (n - j) as i32)]))
        .sum()
}

fn mono(powers: &[(VarId, i32)]) -> LaurentPoly {
    LaurentPoly::term(1, powers)
}

/// Colors allowed on the part just above a part colored `x` in a chain.
fn successors(x: Color) -> impl Iterator<Item = Color> {
    Color::ALL
        .into_iter()
        .filter(move |&y| y > x || (y == x && x.is_primary()))
}

/// `omega_l(X)` for `l <= max_l`, indexed `[l][X as usize]`: the weight of
/// all valid colorings of a chain of length `l` whose smallest part has
/// color `X`. Row 0 is zero.
pub fn omega_table(max_l: u32) -> Vec<[LaurentPoly; 6]> {
    let mut rows: Vec<[LaurentPoly; 6]> = vec![Default::default()];
    for l in 1..=max_l {
        let row = Color::ALL.map(|x| {
            if l == 1 {
                x.weight()
            } else {
                let prev = &rows[l as usize - 1];
                let tail: LaurentPoly = successors(x).map(|y| prev[y as usize].clone()).sum();
                &x.weight() * &tail
            }
        });
        rows.push(row);
    }
    rows
}

pub fn omega_recur(x: Color, l: u32) -> LaurentPoly {
    omega_table(l)[l as usize][x as usize].clone()
}

/// Closed forms of `omega_l(X)` for `l >= 1`.
pub fn omega_closed(x: Color, l: u32) -> LaurentPoly {
    use VarId::{A, B, C};
    let l = l as i64;
    match x {
        Color::C => mono(&[(C, l as i32)]),
        Color::B => &mono(&[(B, 1)]) * &h_bc(l - 1),
        Color::BC => &mono(&[(B, 1), (C, 1)]) * &h_bc(l - 1),
        Color::A => &(&mono(&[(A, 1)]) * &h3(l - 1)) + &(&p("A*B*C") * &h3(l - 2)),
        Color::AC => {
            let inner = &h3(l - 1) + &(&p("A*B*C") * &h3(l - 3));
            &(&p("A*C") * &inner) + &(&p("A*B*C^2") * &h_bc(l - 2))
        }
        Color::AB => {
            let first = &(&h3(l - 1) + &(&p("A*B*C") * &h3(l - 3))) + &(&p("B*C") * &h_bc(l - 2));
            let second = &(&h3(l - 2) + &(&p("A*B*C") * &h3(l - 4))) + &(&p("B*C") * &h_bc(l - 3));
            &(&p("A*B") * &first) + &(&p("A^2*B*C") * &second)
        }
    }
}

/// `F_l = h_l + ABC h_{l-2} + BC h_{l-1}(B, C)`; zero for negative `l`.
pub fn f_l(l: i64) -> LaurentPoly {
    if l < 0 {
        return LaurentPoly::zero();
    }
    &(&h3(l) + &(&p("A*B*C") * &h3(l - 2))) + &(&p("B*C") * &h_bc(l - 1))
}

/// Weight of a chain of length `l >= 1` starting at `s >= 1`. Only whether
/// `s` is 1 matters: part 1 takes primary colors only.
pub fn chain_weight(s: u32, l: u32) -> LaurentPoly {
    let l = l as i64;
    if s == 1 {
        &h3(l) + &(&p("A*B*C") * &h3(l - 2))
    } else {
        let mid = &p("A*B + A*C") * &f_l(l - 1);
        &(&f_l(l) + &mid) + &(&p("A^2*B*C") * &f_l(l - 2))
    }
}

/// Variable specializations used by the corollaries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Specialization {
    /// `C = -1`.
    CMinusOne,
    /// `A = z, B = -z, C = 1`.
    OppositeZ,
    /// `A = z, B = 1/z, C = -1`.
    ReciprocalZ,
}

impl Specialization {
    pub fn apply(self, poly: &LaurentPoly) -> LaurentPoly {
        let z = LaurentPoly::var(VarId::Z);
        let subs: Vec<(VarId, LaurentPoly)> = match self {
            Specialization::CMinusOne => vec![(VarId::C, LaurentPoly::constant(-1))],
            Specialization::OppositeZ => vec![
                (VarId::A, z.clone()),
                (VarId::B, -&z),
                (VarId::C, LaurentPoly::one()),
            ],
            Specialization::ReciprocalZ => vec![
                (VarId::A, z),
                (VarId::B, LaurentPoly::var_pow(VarId::Z, -1)),
                (VarId::C, LaurentPoly::constant(-1)),
            ],
        };
        subs.into_iter().fold(poly.clone(), |acc, (v, img)| {
            acc.substitute(v, &img).expect("images are free of q")
        })
    }
}

pub fn chain_weight_specialized(s: u32, l: u32, spec: Specialization) -> LaurentPoly {
    spec.apply(&chain_weight(s, l))
}

/// Collapsed chain weight at `C = -1`, in `A` and `B`.
pub fn collapse_c_minus_one(s: u32, l: u32) -> LaurentPoly {
    let sign = LaurentPoly::constant(if l % 2 == 0 { 1 } else { -1 });
    if s > 1 {
        return &sign * &p("1 - A*B");
    }
    let mut inner = LaurentPoly::one();
    for i in 1..=l as i32 {
        inner += &(&p("-A").pow(i as u32) + &p("-B").pow(i as u32));
    }
    &sign * &inner
}

/// Collapsed chain weight at `A = z, B = -z, C = 1`.
pub fn collapse_opposite_z(s: u32) -> LaurentPoly {
    if s == 1 {
        LaurentPoly::one()
    } else {
        p("1 - z^2")
    }
}

/// Collapsed chain weight at `A = z, B = 1/z, C = -1`:
/// `(z^{-l} + z^{1+l}) / (1 + z)` for chains at 1 and zero otherwise.
pub fn collapse_reciprocal_z(s: u32, l: u32) -> LaurentPoly {
    if s > 1 {
        return LaurentPoly::zero();
    }
    let num = &LaurentPoly::var_pow(VarId::Z, -(l as i32)) + &LaurentPoly::var_pow(VarId::Z, l as i32 + 1);
    num.exact_divide(&p("1 + z")).expect("l-th alternating sum")
}

/// Concurrent memo of chain weights keyed by `(s > 1, l)`.
#[derive(Default)]
pub struct ChainWeightTable {
    cache: RwLock<HashMap<(bool, u32), Arc<LaurentPoly>>>,
}

impl ChainWeightTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide table.
    pub fn shared() -> &'static ChainWeightTable {
        static TABLE: OnceLock<ChainWeightTable> = OnceLock::new();
        TABLE.get_or_init(ChainWeightTable::new)
    }

    pub fn get(&self, chain: Chain) -> Arc<LaurentPoly> {
        let key = (chain.start > 1, chain.len);
        if let Some(w) = self.cache.read().expect("poisoned").get(&key) {
            return w.clone();
        }
        let w = Arc::new(chain_weight(chain.start, chain.len));
        self.cache
            .write()
            .expect("poisoned")
            .entry(key)
            .or_insert(w)
            .clone()
    }
}

/// Product of the chain weights of `p`.
pub fn partition_weight(p: &DistinctPartition) -> LaurentPoly {
    let table = ChainWeightTable::shared();
    decompose_chains(p)
        .into_iter()
        .fold(LaurentPoly::one(), |acc, c| &acc * &*table.get(c))
}

/// Both sides of the alternating-sum identity for the collapsed chain
/// weight at 1, multiplied through by `(1+A)(1+B)`. The inner sum runs from
/// `s = 1`; `from_zero` starts it at `s = 0` instead, which is false.
pub fn alternating_sum_sides(j: u32, from_zero: bool) -> (LaurentPoly, LaurentPoly) {
    let sign = LaurentPoly::constant(if j % 2 == 0 { 1 } else { -1 });
    let mut inner = LaurentPoly::one();
    for s in (if from_zero { 0 } else { 1 })..=j {
        let sg = LaurentPoly::constant(if s % 2 == 0 { 1 } else { -1 });
        inner += &(&sg * &(&p("A").pow(s) + &p("B").pow(s)));
    }
    let lhs = &(&sign * &inner) * &p("1 + A + B + A*B");
    let a_pow = LaurentPoly::var_pow(VarId::A, j as i32 + 1);
    let b_pow = LaurentPoly::var_pow(VarId::B, j as i32 + 1);
    let rhs = &(&(&sign * &p("1 - A*B")) + &(&a_pow * &p("1 + B"))) + &(&b_pow * &p("1 + A"));
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{color_weight_oracle, enumerate_distinct};

    #[test]
    fn closed_forms_match_recurrence() {
        let table = omega_table(20);
        for l in 1..=20 {
            for x in Color::ALL {
                assert_eq!(table[l as usize][x as usize], omega_closed(x, l), "{x} l={l}");
            }
        }
    }

    #[test]
    fn chain_weight_sums_omegas() {
        let table = omega_table(15);
        for l in 1..=15u32 {
            let all: LaurentPoly = table[l as usize].iter().cloned().sum();
            let primary: LaurentPoly = Color::PRIMARY.iter().map(|&x| table[l as usize][x as usize].clone()).sum();
            assert_eq!(chain_weight(2, l), all, "s>1 l={l}");
            assert_eq!(chain_weight(1, l), primary, "s=1 l={l}");
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(f_l(0), LaurentPoly::one());
        assert_eq!(f_l(1), p("A + B + C + B*C"));
        assert_eq!(f_l(-1), LaurentPoly::zero());
        assert_eq!(chain_weight(1, 1), p("A + B + C"));
        assert_eq!(chain_weight(3, 1), p("A + B + C + A*B + A*C + B*C"));
        assert_eq!(
            chain_weight(1, 2),
            p("A^2 + B^2 + C^2 + A*B + A*C + B*C + A*B*C")
        );
    }

    #[test]
    fn weight_factorizes_over_chains() {
        for n in 0..=18 {
            for part in enumerate_distinct(n, None) {
                assert_eq!(partition_weight(&part), color_weight_oracle(&part), "{part}");
            }
        }
    }

    #[test]
    fn collapses() {
        for l in 1..=12 {
            for s in [1, 2, 5] {
                assert_eq!(
                    chain_weight_specialized(s, l, Specialization::CMinusOne),
                    collapse_c_minus_one(s, l),
                    "C=-1 s={s} l={l}"
                );
                assert_eq!(
                    chain_weight_specialized(s, l, Specialization::OppositeZ),
                    collapse_opposite_z(s),
                    "A=-B=z s={s} l={l}"
                );
                assert_eq!(
                    chain_weight_specialized(s, l, Specialization::ReciprocalZ),
                    collapse_reciprocal_z(s, l),
                    "A=1/B=z s={s} l={l}"
                );
            }
        }
        assert_eq!(collapse_reciprocal_z(1, 1), p("z^-1 - 1 + z"));
    }

    #[test]
    fn alternating_sum_identity() {
        for j in 0..=10 {
            let (l, r) = alternating_sum_sides(j, false);
            assert_eq!(l, r, "j = {j}");
            let (l0, r0) = alternating_sum_sides(j, true);
            assert_ne!(l0, r0, "j = {j}");
        }
    }

    #[test]
    fn shared_table_is_consistent() {
        let t = ChainWeightTable::shared();
        let c = Chain { start: 4, len: 3 };
        assert_eq!(*t.get(c), chain_weight(4, 3));
        assert!(Arc::ptr_eq(&t.get(c), &t.get(Chain { start: 7, len: 3 })));
    }
}
