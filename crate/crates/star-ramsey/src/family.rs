//! Star families and their regularity profile.
//!
//! A *star family* assigns a target star size `m_A` to every `s`-subset `A`
//! of the colors `{1, …, t}`: an edge coloring "contains the family" when some
//! vertex has at least `m_A` incident edges whose colors all lie in a single
//! subset `A`. The closed forms in [`crate::formulas`] apply exactly to the
//! families whose values are *additive*, i.e. `m_A = Σ_{i∈A} x_i` for rational
//! weights `x_1, …, x_t` ([`sum_condition`] decides this). For such families
//! the per-color regularity degrees `ℓ_i` and the common remainder `a`
//! ([`ell_profile`]) drive both the closed-form values and the extremal
//! colorings.

use std::collections::HashMap;

use num::rational::BigRational;
use num::{BigInt, Zero};
use serde::{Deserialize, Serialize};

use crate::color_set::{binomial, subsets_colex, ColorSet, MAX_COLORS};
use crate::error::{Error, Result};

/// Hard cap on `C(t, s)` so dense per-subset tables stay reasonable.
pub const MAX_FAMILY_SUBSETS: u64 = 1 << 20;

/// A star size for every `s`-subset of `{1, …, t}`.
///
/// Values are stored densely, indexed by the colex rank of the subset.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "FamilyJson", into = "FamilyJson")]
pub struct StarFamily {
    t: usize,
    s: usize,
    values: Vec<u64>,
    uniform: Option<u64>,
}

impl StarFamily {
    /// Builds a family from values listed in colex order of the subsets.
    pub fn new(t: usize, s: usize, values: Vec<u64>) -> Result<StarFamily> {
        if !(1..=MAX_COLORS).contains(&t) {
            return Err(Error::InvalidInput(format!(
                "color count t must be in 1..={MAX_COLORS}, got {t}"
            )));
        }
        if s < 1 || s >= t {
            return Err(Error::InvalidInput(format!(
                "subset size s must satisfy 1 <= s < t, got s={s}, t={t}"
            )));
        }
        let count = binomial(t, s);
        if count > MAX_FAMILY_SUBSETS {
            return Err(Error::InvalidInput(format!(
                "C({t},{s}) = {count} subsets exceeds the supported maximum {MAX_FAMILY_SUBSETS}"
            )));
        }
        if values.len() as u64 != count {
            return Err(Error::InvalidInput(format!(
                "expected one value per s-subset ({count}), got {}",
                values.len()
            )));
        }
        if let Some(pos) = values.iter().position(|&v| v == 0) {
            return Err(Error::InvalidInput(format!(
                "star sizes must be positive; entry at colex rank {pos} is 0"
            )));
        }
        let first = values[0];
        let uniform = values.iter().all(|&v| v == first).then_some(first);
        Ok(StarFamily {
            t,
            s,
            values,
            uniform,
        })
    }

    /// The family with every target equal to `m`.
    pub fn uniform(m: u64, s: usize, t: usize) -> Result<StarFamily> {
        if t > MAX_COLORS || s < 1 || s >= t {
            return Err(Error::InvalidInput(format!(
                "need 1 <= s < t <= {MAX_COLORS}, got s={s}, t={t}"
            )));
        }
        let count = binomial(t, s);
        if count > MAX_FAMILY_SUBSETS {
            return Err(Error::InvalidInput(format!(
                "C({t},{s}) = {count} subsets exceeds the supported maximum {MAX_FAMILY_SUBSETS}"
            )));
        }
        StarFamily::new(t, s, vec![m; count as usize])
    }

    pub fn color_count(&self) -> usize {
        self.t
    }

    pub fn subset_size(&self) -> usize {
        self.s
    }

    /// The target star size for subset `A` (must have `|A| = s`).
    pub fn value(&self, set: ColorSet) -> u64 {
        debug_assert_eq!(set.len(), self.s);
        self.values[set.colex_rank()]
    }

    /// `Some(m)` when every subset demands the same size `m`.
    pub fn is_uniform(&self) -> Option<u64> {
        self.uniform
    }

    /// All `s`-subsets in colex order.
    pub fn subsets(&self) -> impl Iterator<Item = ColorSet> {
        subsets_colex(self.t, self.s)
    }

    /// The same family with colors renamed by `perm` (`perm[i-1]` is the new
    /// name of color `i`; `perm` must be a permutation of `1..=t`).
    pub fn relabeled(&self, perm: &[usize]) -> Result<StarFamily> {
        if perm.len() != self.t {
            return Err(Error::InvalidInput("permutation length != t".into()));
        }
        let mut seen = vec![false; self.t];
        for &p in perm {
            if p < 1 || p > self.t || seen[p - 1] {
                return Err(Error::InvalidInput("not a permutation of 1..=t".into()));
            }
            seen[p - 1] = true;
        }
        let mut values = vec![0u64; self.values.len()];
        for set in self.subsets() {
            let image = ColorSet::from_colors(set.iter().map(|c| perm[c - 1]))
                .expect("permutation image is a valid set");
            values[image.colex_rank()] = self.value(set);
        }
        StarFamily::new(self.t, self.s, values)
    }
}

#[derive(Serialize, Deserialize, Clone)]
struct FamilyEntry {
    colors: Vec<usize>,
    value: u64,
}

#[derive(Serialize, Deserialize, Clone)]
struct FamilyJson {
    t: usize,
    s: usize,
    m: Vec<FamilyEntry>,
}

impl TryFrom<FamilyJson> for StarFamily {
    type Error = Error;

    fn try_from(raw: FamilyJson) -> Result<StarFamily> {
        if raw.t < 1 || raw.t > MAX_COLORS || raw.s < 1 || raw.s >= raw.t {
            return Err(Error::InvalidInput(format!(
                "need 1 <= s < t <= {MAX_COLORS}, got s={}, t={}",
                raw.s, raw.t
            )));
        }
        let count = binomial(raw.t, raw.s);
        if count > MAX_FAMILY_SUBSETS {
            return Err(Error::InvalidInput(format!(
                "C({},{}) exceeds the supported maximum {MAX_FAMILY_SUBSETS}",
                raw.t, raw.s
            )));
        }
        let mut values: Vec<Option<u64>> = vec![None; count as usize];
        for entry in &raw.m {
            if entry.colors.len() != raw.s {
                return Err(Error::InvalidInput(format!(
                    "subset {:?} does not have size s={}",
                    entry.colors, raw.s
                )));
            }
            if !entry.colors.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidInput(format!(
                    "subset {:?} must be strictly increasing",
                    entry.colors
                )));
            }
            if entry.colors.iter().any(|&c| c < 1 || c > raw.t) {
                return Err(Error::InvalidInput(format!(
                    "subset {:?} has colors outside 1..={}",
                    entry.colors, raw.t
                )));
            }
            let set = ColorSet::from_colors(entry.colors.iter().copied())
                .ok_or_else(|| Error::InvalidInput("invalid color subset".into()))?;
            let slot = &mut values[set.colex_rank()];
            if slot.is_some() {
                return Err(Error::InvalidInput(format!(
                    "subset {:?} appears more than once",
                    entry.colors
                )));
            }
            if entry.value == 0 {
                return Err(Error::InvalidInput(format!(
                    "subset {:?} has non-positive star size",
                    entry.colors
                )));
            }
            *slot = Some(entry.value);
        }
        let values: Vec<u64> = values
            .into_iter()
            .enumerate()
            .map(|(rank, v)| {
                v.ok_or_else(|| Error::InvalidInput(format!("missing subset at colex rank {rank}")))
            })
            .collect::<Result<_>>()?;
        StarFamily::new(raw.t, raw.s, values)
    }
}

impl From<StarFamily> for FamilyJson {
    fn from(f: StarFamily) -> FamilyJson {
        let m = f
            .subsets()
            .map(|set| FamilyEntry {
                colors: set.colors(),
                value: f.value(set),
            })
            .collect();
        FamilyJson { t: f.t, s: f.s, m }
    }
}

/// The cyclic window `W_i = {i+1, …, i+s}` with values reduced into
/// `{1, …, t}` (a multiple of `t` reduces to `t` itself). `i ∉ W_i` because
/// `s < t`.
pub fn window(i: usize, s: usize, t: usize) -> ColorSet {
    debug_assert!(i >= 1 && i <= t && s >= 1 && s < t);
    let mut w = ColorSet::EMPTY;
    for b in (i + 1)..=(i + s) {
        let r = b % t;
        w.insert(if r == 0 { t } else { r });
    }
    debug_assert_eq!(w.len(), s);
    w
}

/// The derived regularity profile of an additive family: per-color degrees
/// `ℓ_1, …, ℓ_t`, the common remainder `a ∈ {1, …, s}`, and the number `k` of
/// odd entries. For every subset `A`, `Σ_{i∈A} ℓ_i = m_A − a`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EllProfile {
    pub ell: Vec<u64>,
    pub a: u64,
    pub k: usize,
}

impl EllProfile {
    pub fn sum(&self) -> u128 {
        self.ell.iter().map(|&e| e as u128).sum()
    }
}

/// Computes the regularity profile of `f`.
///
/// Fails with [`Error::HypothesisViolated`] when the sum condition does not
/// hold, and with [`Error::OutOfTheoremRange`] when some `ℓ_i` would be
/// negative (such families are refused rather than extrapolated).
pub fn ell_profile(f: &StarFamily) -> Result<EllProfile> {
    if let SumCondition::Fails(violation) = sum_condition(f) {
        return Err(Error::HypothesisViolated(violation.to_string()));
    }
    let (t, s) = (f.color_count(), f.subset_size());
    let mut ell = Vec::with_capacity(t);
    let mut common_a: Option<i128> = None;
    for i in 1..=t {
        let w = window(i, s, t);
        // n_i = Σ_{B ⊂ W_i, |B| = s−1} m_{{i}∪B}  −  (s−1)·m_{W_i}
        let mut n_i: i128 = -((s as i128 - 1) * f.value(w) as i128);
        for c in w.iter() {
            n_i += f.value(w.without(c).with(i)) as i128;
        }
        let ell_i = (n_i - 1).div_euclid(s as i128);
        let a_i = n_i - s as i128 * ell_i;
        debug_assert!((1..=s as i128).contains(&a_i));
        match common_a {
            None => common_a = Some(a_i),
            Some(a) if a != a_i => {
                return Err(Error::InternalInconsistency(format!(
                    "per-color remainders differ (a_1={a}, a_{i}={a_i}) although the sum \
                     condition holds"
                )))
            }
            Some(_) => {}
        }
        ell.push(ell_i);
    }
    let a = common_a.expect("t >= 2");
    // Each subset sum must come out to m_A − a; anything else is a bug.
    for set in f.subsets() {
        let lhs: i128 = set.iter().map(|c| ell[c - 1]).sum();
        let rhs = f.value(set) as i128 - a;
        if lhs != rhs {
            return Err(Error::InternalInconsistency(format!(
                "profile sum over {set} is {lhs}, expected m_A - a = {rhs}"
            )));
        }
    }
    if let Some(&neg) = ell.iter().find(|&&e| e < 0) {
        return Err(Error::OutOfTheoremRange(format!(
            "profile entry {neg} is negative; the closed forms assume nonnegative degrees"
        )));
    }
    let k = ell.iter().filter(|&&e| e % 2 != 0).count();
    Ok(EllProfile {
        ell: ell.into_iter().map(|e| e as u64).collect(),
        a: a as u64,
        k,
    })
}

/// Outcome of the sum-condition check.
#[derive(Clone, Debug)]
pub enum SumCondition {
    /// The family is additive; `weights` are the unique rational weights with
    /// `m_A = Σ_{i∈A} weights[i-1]`.
    Holds {
        weights: Vec<BigRational>,
    },
    Fails(SumViolation),
}

impl SumCondition {
    pub fn holds(&self) -> bool {
        matches!(self, SumCondition::Holds { .. })
    }
}

/// Evidence that a family is not additive.
#[derive(Clone, Debug)]
pub enum SumViolation {
    /// Two multisets of subsets with the same multiset union but different
    /// value sums.
    MultisetPair {
        left: Vec<ColorSet>,
        right: Vec<ColorSet>,
        left_sum: u128,
        right_sum: u128,
    },
    /// No small multiset pair was found; the weight system itself is
    /// inconsistent at the named subset.
    InconsistentSystem { subset: ColorSet, residual: String },
}

impl std::fmt::Display for SumViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SumViolation::MultisetPair {
                left,
                right,
                left_sum,
                right_sum,
            } => {
                let fmt_sets = |sets: &[ColorSet]| {
                    sets.iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join("+")
                };
                write!(
                    f,
                    "equal unions with unequal sums: m[{}] = {} but m[{}] = {}",
                    fmt_sets(left),
                    left_sum,
                    fmt_sets(right),
                    right_sum
                )
            }
            SumViolation::InconsistentSystem { subset, residual } => write!(
                f,
                "weight system inconsistent at subset {subset} (residual {residual})"
            ),
        }
    }
}

/// Decides whether `m_A = Σ_{i∈A} x_i` is solvable over the rationals, which
/// is the finite decision procedure for the sum condition (equal multiset
/// unions force equal value sums).
///
/// Solved exactly with rational Gaussian elimination, streaming one equation
/// per subset. On failure a violating multiset pair of size at most 3 is
/// searched for first; if the enumeration would be too large, the inconsistent
/// equation itself is reported.
pub fn sum_condition(f: &StarFamily) -> SumCondition {
    let t = f.color_count();
    // Reduced pivot rows: pivots[j], when present, has leading column j with
    // coefficient 1. Row layout: t coefficients followed by the rhs.
    let mut pivots: Vec<Option<Vec<BigRational>>> = vec![None; t];
    for set in f.subsets() {
        let mut row: Vec<BigRational> = vec![BigRational::zero(); t + 1];
        for c in set.iter() {
            row[c - 1] = BigRational::from_integer(BigInt::from(1));
        }
        row[t] = BigRational::from_integer(BigInt::from(f.value(set)));
        if let Some(residual) = reduce_row(&mut pivots, row, t) {
            if !residual.is_zero() {
                return SumCondition::Fails(find_violating_pair(f).unwrap_or(
                    SumViolation::InconsistentSystem {
                        subset: set,
                        residual: residual.to_string(),
                    },
                ));
            }
        }
    }
    // Back-substitute. Rank is t for every family of this shape, but tolerate
    // less by leaving absent pivots at zero.
    let mut weights = vec![BigRational::zero(); t];
    for j in (0..t).rev() {
        if let Some(p) = &pivots[j] {
            let mut value = p[t].clone();
            for idx in (j + 1)..t {
                let sub = &p[idx] * &weights[idx];
                value -= sub;
            }
            weights[j] = value;
        }
    }
    SumCondition::Holds { weights }
}

/// Reduces `row` against the pivot rows. Either the row becomes a new pivot
/// (returns `None`) or it reduces to zero coefficients and the leftover rhs is
/// returned; a nonzero leftover means the system is inconsistent.
fn reduce_row(
    pivots: &mut [Option<Vec<BigRational>>],
    mut row: Vec<BigRational>,
    t: usize,
) -> Option<BigRational> {
    for j in 0..t {
        if row[j].is_zero() {
            continue;
        }
        if pivots[j].is_some() {
            let factor = std::mem::replace(&mut row[j], BigRational::zero());
            let p = pivots[j].as_ref().expect("checked above");
            for idx in (j + 1)..=t {
                let sub = &p[idx] * &factor;
                row[idx] -= sub;
            }
        } else {
            let lead = row[j].clone();
            for cell in row.iter_mut().skip(j) {
                *cell = &*cell / &lead;
            }
            pivots[j] = Some(row);
            return None;
        }
    }
    Some(row[t].clone())
}

/// Bounded search for two multisets of at most 3 subsets with equal multiset
/// union but different value sums. Returns `None` when the enumeration is too
/// large or no pair exists within the bound.
fn find_violating_pair(f: &StarFamily) -> Option<SumViolation> {
    const ENUMERATION_CAP: u128 = 4_000_000;
    let subs: Vec<ColorSet> = f.subsets().collect();
    let c = subs.len();
    // Union signature: 2 bits of multiplicity per color (enough for b <= 3).
    let signature = |picks: &[usize]| -> u128 {
        let mut sig: u128 = 0;
        for &i in picks {
            for color in subs[i].iter() {
                sig += 1u128 << (2 * (color - 1));
            }
        }
        sig
    };
    for b in 2..=3usize {
        if num_multisets(c as u128, b) > ENUMERATION_CAP {
            return None;
        }
        let mut seen: HashMap<u128, (Vec<usize>, u128)> = HashMap::new();
        // Nondecreasing index vectors enumerate the size-b multisets.
        let mut picks = vec![0usize; b];
        'enumerate: loop {
            let sig = signature(&picks);
            let sum: u128 = picks.iter().map(|&i| f.value(subs[i]) as u128).sum();
            match seen.get(&sig) {
                Some((other, other_sum)) if *other_sum != sum => {
                    return Some(SumViolation::MultisetPair {
                        left: other.iter().map(|&i| subs[i]).collect(),
                        right: picks.iter().map(|&i| subs[i]).collect(),
                        left_sum: *other_sum,
                        right_sum: sum,
                    });
                }
                Some(_) => {}
                None => {
                    seen.insert(sig, (picks.clone(), sum));
                }
            }
            let mut pos = b;
            while pos > 0 {
                pos -= 1;
                if picks[pos] + 1 < c {
                    let v = picks[pos] + 1;
                    for slot in picks.iter_mut().skip(pos) {
                        *slot = v;
                    }
                    continue 'enumerate;
                }
            }
            break;
        }
    }
    None
}

fn num_multisets(c: u128, b: usize) -> u128 {
    // C(c + b - 1, b)
    let mut acc: u128 = 1;
    for i in 0..b as u128 {
        acc = acc * (c + b as u128 - 1 - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair_family(t: usize, assign: impl Fn(usize, usize) -> u64) -> StarFamily {
        let values: Vec<u64> = subsets_colex(t, 2)
            .map(|set| {
                let c: Vec<usize> = set.colors();
                assign(c[0], c[1])
            })
            .collect();
        StarFamily::new(t, 2, values).unwrap()
    }

    /// t=3, s=2 with m_{12}=5, m_{13}=6, m_{23}=7.
    fn family_567() -> StarFamily {
        pair_family(3, |a, b| match (a, b) {
            (1, 2) => 5,
            (1, 3) => 6,
            (2, 3) => 7,
            _ => unreachable!(),
        })
    }

    /// t=4, s=2 with m_{12}=3, m_{34}=5, all others 4.
    fn family_t4() -> StarFamily {
        pair_family(4, |a, b| match (a, b) {
            (1, 2) => 3,
            (3, 4) => 5,
            _ => 4,
        })
    }

    #[test]
    fn window_basic_and_wraparound() {
        assert_eq!(window(1, 2, 3).colors(), vec![2, 3]);
        assert_eq!(window(3, 2, 3).colors(), vec![1, 2]);
        assert_eq!(window(4, 3, 4).colors(), vec![1, 2, 3]);
    }

    #[test]
    fn window_never_contains_its_own_color() {
        for t in 2..=8 {
            for s in 1..t {
                for i in 1..=t {
                    let w = window(i, s, t);
                    assert_eq!(w.len(), s);
                    assert!(!w.contains(i), "window({i},{s},{t}) contains {i}");
                }
            }
        }
    }

    #[test]
    fn profile_of_uniform_family() {
        let f = StarFamily::uniform(5, 2, 3).unwrap();
        let p = ell_profile(&f).unwrap();
        assert_eq!(p.ell, vec![2, 2, 2]);
        assert_eq!(p.a, 1);
        assert_eq!(p.k, 0);
    }

    #[test]
    fn profile_of_weighted_triple() {
        let p = ell_profile(&family_567()).unwrap();
        assert_eq!(p.ell, vec![1, 2, 3]);
        assert_eq!(p.a, 2);
        assert_eq!(p.k, 2);
    }

    #[test]
    fn profile_of_four_color_family() {
        let p = ell_profile(&family_t4()).unwrap();
        assert_eq!(p.ell, vec![1, 1, 2, 2]);
        assert_eq!(p.a, 1);
        assert_eq!(p.k, 2);
    }

    #[test]
    fn uniform_closed_form_for_profile() {
        for t in 2..=6 {
            for s in 1..t {
                for m in s as u64..=15 {
                    let f = StarFamily::uniform(m, s, t).unwrap();
                    let p = ell_profile(&f).unwrap();
                    let expected_ell = (m - 1) / s as u64;
                    let expected_a = m - s as u64 * expected_ell;
                    assert!(p.ell.iter().all(|&e| e == expected_ell));
                    assert_eq!(p.a, expected_a);
                    let expected_k = if expected_ell % 2 == 1 { t } else { 0 };
                    assert_eq!(p.k, expected_k);
                }
            }
        }
    }

    #[test]
    fn sum_condition_uniform_weights() {
        let f = StarFamily::uniform(6, 2, 4).unwrap();
        match sum_condition(&f) {
            SumCondition::Holds { weights } => {
                let three = BigRational::from_integer(BigInt::from(3));
                assert!(weights.iter().all(|w| *w == three));
            }
            SumCondition::Fails(v) => panic!("uniform family rejected: {v}"),
        }
    }

    #[test]
    fn sum_condition_weighted_triple_weights() {
        match sum_condition(&family_567()) {
            SumCondition::Holds { weights } => {
                let expect: Vec<BigRational> = [2, 3, 4]
                    .iter()
                    .map(|&n| BigRational::from_integer(BigInt::from(n)))
                    .collect();
                assert_eq!(weights, expect);
            }
            SumCondition::Fails(v) => panic!("additive family rejected: {v}"),
        }
    }

    #[test]
    fn sum_condition_detects_disjoint_pair_violation() {
        // m_{12}+m_{34} = 6 but m_{13}+m_{24} = 7 share the union {1,2,3,4}.
        let f = pair_family(4, |a, b| match (a, b) {
            (1, 2) => 3,
            (3, 4) => 3,
            (1, 3) => 3,
            (2, 4) => 4,
            _ => 3,
        });
        match sum_condition(&f) {
            SumCondition::Fails(SumViolation::MultisetPair {
                left_sum,
                right_sum,
                left,
                right,
            }) => {
                assert_ne!(left_sum, right_sum);
                let union = |sets: &[ColorSet]| {
                    let mut counts = [0usize; 4];
                    for s in sets {
                        for c in s.iter() {
                            counts[c - 1] += 1;
                        }
                    }
                    counts
                };
                assert_eq!(union(&left), union(&right));
            }
            other => panic!("expected a multiset-pair violation, got {other:?}"),
        }
    }

    #[test]
    fn ell_profile_rejects_non_additive_family() {
        let f = pair_family(4, |a, b| match (a, b) {
            (1, 2) => 3,
            (3, 4) => 3,
            (1, 3) => 3,
            (2, 4) => 4,
            _ => 3,
        });
        assert!(matches!(ell_profile(&f), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn ell_profile_rejects_negative_degree() {
        // ell = (-1, 0, 5) with a = 2: m_{12}=1, m_{13}=6, m_{23}=7.
        let f = pair_family(3, |a, b| match (a, b) {
            (1, 2) => 1,
            (1, 3) => 6,
            (2, 3) => 7,
            _ => unreachable!(),
        });
        assert!(matches!(ell_profile(&f), Err(Error::OutOfTheoremRange(_))));
    }

    #[test]
    fn family_json_round_trip() {
        let f = family_567();
        let json = serde_json::to_string(&f).unwrap();
        let back: StarFamily = serde_json::from_str(&json).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn family_json_shape_is_stable() {
        let f = StarFamily::uniform(2, 1, 2).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"t":2,"s":1,"m":[{"colors":[1],"value":2},{"colors":[2],"value":2}]}"#
        );
    }

    #[test]
    fn family_json_rejects_malformed_inputs() {
        let cases = [
            // duplicate subset
            r#"{"t":3,"s":2,"m":[{"colors":[1,2],"value":3},{"colors":[1,2],"value":3},{"colors":[2,3],"value":3}]}"#,
            // missing subset
            r#"{"t":3,"s":2,"m":[{"colors":[1,2],"value":3},{"colors":[1,3],"value":3}]}"#,
            // wrong subset size
            r#"{"t":3,"s":2,"m":[{"colors":[1],"value":3},{"colors":[1,3],"value":3},{"colors":[2,3],"value":3}]}"#,
            // unsorted colors
            r#"{"t":3,"s":2,"m":[{"colors":[2,1],"value":3},{"colors":[1,3],"value":3},{"colors":[2,3],"value":3}]}"#,
            // zero star size
            r#"{"t":3,"s":2,"m":[{"colors":[1,2],"value":0},{"colors":[1,3],"value":3},{"colors":[2,3],"value":3}]}"#,
            // color out of range
            r#"{"t":3,"s":2,"m":[{"colors":[1,4],"value":3},{"colors":[1,3],"value":3},{"colors":[2,3],"value":3}]}"#,
            // s >= t
            r#"{"t":2,"s":2,"m":[{"colors":[1,2],"value":3}]}"#,
        ];
        for case in cases {
            assert!(
                serde_json::from_str::<StarFamily>(case).is_err(),
                "accepted malformed family: {case}"
            );
        }
    }
}
