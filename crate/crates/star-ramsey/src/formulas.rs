//! Closed-form Ramsey and star-critical values for star families.
//!
//! The central quantity is, for a family of star targets and `s`-subsets of
//! `t` colors, the least `N` such that every `t`-coloring of `K_N` puts some
//! target star entirely inside one color subset. [`ramsey_general`] evaluates
//! it from the regularity profile of an additive family; [`ramsey_uniform`]
//! is the piecewise specialization when all targets are equal. The remaining
//! functions are independently stated formulas used purely as cross-checks:
//! the classical multicolor star values ([`ramsey_classical`],
//! [`star_critical_classical`]) and the `s = t−1` forms expressed through
//! `x = ⌊(mt−1)/(t−1)⌋` ([`ramsey_tminus1_xq`], [`star_critical_tminus1_xq`]).
//!
//! All arithmetic is done in 128-bit integers; every intermediate value is
//! bounded by `t · max m < 2^70` for valid inputs, so overflow is impossible
//! within the supported ranges.

use serde::Serialize;

use crate::color_set::{subsets_colex, ColorSet};
use crate::error::{Error, Result};
use crate::family::{ell_profile, EllProfile, StarFamily};

/// Case labels reported in answers.
pub mod branch {
    pub const A1_K_EVEN: &str = "a=1,k-even";
    pub const OTHERWISE: &str = "otherwise";
    pub const K_GE2_EVEN: &str = "k>=2-even";
    pub const M_2KS: &str = "m=2ks,s!=1";
    pub const M_2KS_A: &str = "m=2ks+a,1<=a<=s-1";
    pub const M_ODD_S: &str = "m=(2k+1)s";
    pub const M_ODD_S1_T_EVEN: &str = "m=(2k+1)s+1,t-even";
    pub const M_ODD_S1_T_ODD: &str = "m=(2k+1)s+1,t-odd";
    pub const M_ODD_S_A: &str = "m=(2k+1)s+a,2<=a<=s-1";
    pub const X_TQ1_ODD: &str = "x=tq+1,x-q-odd";
    pub const SC_SMALL_S: &str = "m=(2k+1)s+1,t-even,s<=t/2";
    pub const SC_LARGE_S: &str = "m=(2k+1)s+1,t-even,s>=t/2+1";
}

/// A Ramsey value together with the case that produced it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RamseyAnswer {
    pub r: u128,
    pub branch: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<EllProfile>,
}

/// A star-critical value, its companion Ramsey value, and the case label.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StarCriticalAnswer {
    pub rstar: u128,
    pub r: u128,
    pub branch: &'static str,
}

/// Ramsey value of an arbitrary additive family: `Σℓ + 1` when `a = 1` and
/// the odd count `k ≥ 1` is even, else `Σℓ + a + 1`.
pub fn ramsey_general(f: &StarFamily) -> Result<RamseyAnswer> {
    let profile = ell_profile(f)?;
    let sum = profile.sum();
    let (r, branch) = if profile.a == 1 && profile.k >= 1 && profile.k % 2 == 0 {
        (sum + 1, branch::A1_K_EVEN)
    } else {
        (sum + profile.a as u128 + 1, branch::OTHERWISE)
    };
    Ok(RamseyAnswer {
        r,
        branch,
        ell: Some(profile),
    })
}

/// The shape of `m` relative to `s`, after normalizing `s = 1` with even `m`
/// into the `(2k+1)s + 1` form (the `2ks` case excludes `s = 1`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum MForm {
    /// `m = 2ks`, `s != 1`, `k >= 1`
    EvenMultiple { k: u64 },
    /// `m = 2ks + a`, `1 <= a <= s-1`, `k >= 1`
    EvenPlus { k: u64, a: u64 },
    /// `m = (2k+1)s`, `k >= 0`
    OddMultiple { k: u64 },
    /// `m = (2k+1)s + 1`, `k >= 0`
    OddPlusOne { k: u64 },
    /// `m = (2k+1)s + a`, `2 <= a <= s-1`, `k >= 0`
    OddPlus { k: u64, a: u64 },
}

fn m_form(m: u64, s: usize) -> Result<MForm> {
    let s = s as u64;
    if m < s {
        return Err(Error::OutOfTheoremRange(format!(
            "m = {m} is smaller than s = {s}"
        )));
    }
    if s == 1 && m % 2 == 0 {
        // m = (m-2) + 1 + 1 = (2k+1)·1 + 1 with 2k+1 = m-1
        return Ok(MForm::OddPlusOne { k: (m - 2) / 2 });
    }
    let q = m / s;
    let a = m % s;
    Ok(match (q % 2 == 0, a) {
        (true, 0) => MForm::EvenMultiple { k: q / 2 },
        (true, a) => MForm::EvenPlus { k: q / 2, a },
        (false, 0) => MForm::OddMultiple { k: (q - 1) / 2 },
        (false, 1) => MForm::OddPlusOne { k: (q - 1) / 2 },
        (false, a) => MForm::OddPlus { k: (q - 1) / 2, a },
    })
}

/// Uniform-target Ramsey value `r(m; s, t)` via the six-case piecewise form.
/// Always equals [`ramsey_general`] on the uniform family; the agreement is
/// asserted in tests rather than at runtime.
pub fn ramsey_uniform(m: u64, s: usize, t: usize) -> Result<RamseyAnswer> {
    check_st(s, t)?;
    let (t128, s128) = (t as u128, s as u128);
    let (r, branch) = match m_form(m, s)? {
        MForm::EvenMultiple { k } => ((2 * k as u128 - 1) * t128 + s128 + 1, branch::M_2KS),
        MForm::EvenPlus { k, a } => (2 * k as u128 * t128 + a as u128 + 1, branch::M_2KS_A),
        MForm::OddMultiple { k } => (2 * k as u128 * t128 + s128 + 1, branch::M_ODD_S),
        MForm::OddPlusOne { k } => {
            let base = (2 * k as u128 + 1) * t128;
            if t % 2 == 0 {
                (base + 1, branch::M_ODD_S1_T_EVEN)
            } else {
                (base + 2, branch::M_ODD_S1_T_ODD)
            }
        }
        MForm::OddPlus { k, a } => (
            (2 * k as u128 + 1) * t128 + a as u128 + 1,
            branch::M_ODD_S_A,
        ),
    };
    Ok(RamseyAnswer {
        r,
        branch,
        ell: None,
    })
}

/// Uniform-target star-critical value: nontrivial only for
/// `m = (2k+1)s + 1` with even `t`, else 1.
pub fn star_critical_uniform(m: u64, s: usize, t: usize) -> Result<StarCriticalAnswer> {
    check_st(s, t)?;
    let r = ramsey_uniform(m, s, t)?.r;
    let (rstar, branch) = match m_form(m, s)? {
        MForm::OddPlusOne { k } if t % 2 == 0 => {
            let base = 2 * k as u128 * t as u128;
            if s <= t / 2 {
                (base + (t / 2) as u128 + 1, branch::SC_SMALL_S)
            } else {
                (base + s as u128 + 1, branch::SC_LARGE_S)
            }
        }
        _ => (1, branch::OTHERWISE),
    };
    Ok(StarCriticalAnswer { rstar, r, branch })
}

/// Classical multicolor star Ramsey value for targets `K_{1,m_1}, …, K_{1,m_t}`
/// with every `m_i ≥ 2`: `Σm_i − t + 1` when the even count `k ≥ 2` is even,
/// else `Σm_i − t + 2`.
pub fn ramsey_classical(ms: &[u64]) -> Result<RamseyAnswer> {
    check_classical(ms)?;
    let t = ms.len() as u128;
    let sum: u128 = ms.iter().map(|&m| m as u128).sum();
    let evens = ms.iter().filter(|&&m| m % 2 == 0).count();
    let (r, branch) = if evens >= 2 && evens % 2 == 0 {
        (sum - t + 1, branch::K_GE2_EVEN)
    } else {
        (sum - t + 2, branch::OTHERWISE)
    };
    Ok(RamseyAnswer {
        r,
        branch,
        ell: None,
    })
}

/// Classical multicolor star-critical value: `Σm_i − t + 1 − k/2` when the
/// even count `k ≥ 2` is even, else 1.
pub fn star_critical_classical(ms: &[u64]) -> Result<StarCriticalAnswer> {
    check_classical(ms)?;
    let r = ramsey_classical(ms)?.r;
    let t = ms.len() as u128;
    let sum: u128 = ms.iter().map(|&m| m as u128).sum();
    let evens = ms.iter().filter(|&&m| m % 2 == 0).count() as u128;
    let (rstar, branch) = if evens >= 2 && evens % 2 == 0 {
        (sum - t + 1 - evens / 2, branch::K_GE2_EVEN)
    } else {
        (1, branch::OTHERWISE)
    };
    Ok(StarCriticalAnswer { rstar, r, branch })
}

/// The `s = t−1` uniform value through `x = ⌊(mt−1)/(t−1)⌋`, `q = ⌊x/t⌋`:
/// `x` when `x = tq+1` with `x, q` both odd, else `x+1`. Used exclusively as
/// a cross-check against [`ramsey_uniform`]`(m, t-1, t)`.
pub fn ramsey_tminus1_xq(m: u64, t: usize) -> Result<RamseyAnswer> {
    check_xq(m, t)?;
    let (x, q) = xq(m, t);
    let (r, branch) = if x == q * t as u128 + 1 && x % 2 == 1 && q % 2 == 1 {
        (x, branch::X_TQ1_ODD)
    } else {
        (x + 1, branch::OTHERWISE)
    };
    Ok(RamseyAnswer {
        r,
        branch,
        ell: None,
    })
}

/// The `s = t−1` uniform star-critical value: `x − 1` in the same special
/// branch as [`ramsey_tminus1_xq`], else 1.
pub fn star_critical_tminus1_xq(m: u64, t: usize) -> Result<StarCriticalAnswer> {
    check_xq(m, t)?;
    let r = ramsey_tminus1_xq(m, t)?;
    let rstar = if r.branch == branch::X_TQ1_ODD {
        r.r - 1
    } else {
        1
    };
    Ok(StarCriticalAnswer {
        rstar,
        r: r.r,
        branch: r.branch,
    })
}

fn xq(m: u64, t: usize) -> (u128, u128) {
    let x = (m as u128 * t as u128 - 1) / (t as u128 - 1);
    (x, x / t as u128)
}

/// The degree threshold `b(m, s, t)`: any vertex of degree at least `b` is the
/// center of some target star, whatever the coloring. Undefined
/// ([`Error::NotApplicable`]) for `m = (2k+1)s + 1` with even `t`; everywhere
/// else it equals the uniform Ramsey value minus one.
pub fn b_threshold(m: u64, s: usize, t: usize) -> Result<u128> {
    check_st(s, t)?;
    let (t128, s128) = (t as u128, s as u128);
    match m_form(m, s)? {
        MForm::EvenMultiple { k } => Ok((2 * k as u128 - 1) * t128 + s128),
        MForm::EvenPlus { k, a } => Ok(2 * k as u128 * t128 + a as u128),
        MForm::OddMultiple { k } => Ok(2 * k as u128 * t128 + s128),
        MForm::OddPlusOne { k } => {
            if t % 2 == 0 {
                Err(Error::NotApplicable(format!(
                    "m = {m} has the form (2k+1)s+1 and t = {t} is even; no single degree \
                     threshold exists in this case"
                )))
            } else {
                Ok((2 * k as u128 + 1) * t128 + 1)
            }
        }
        MForm::OddPlus { k, a } => Ok((2 * k as u128 + 1) * t128 + a as u128),
    }
}

/// Finds an `s`-subset `A` with `Σ_{i∈A} d_i ≥ m_A`, if any. For uniform
/// families only the top-`s` entries are examined; otherwise subsets are
/// scanned in colex order and the first qualifying one is returned.
pub fn degree_forces_star(d: &[u64], f: &StarFamily) -> Option<ColorSet> {
    assert_eq!(
        d.len(),
        f.color_count(),
        "degree vector length must equal the color count"
    );
    let s = f.subset_size();
    if let Some(m) = f.is_uniform() {
        let mut order: Vec<usize> = (0..d.len()).collect();
        order.sort_by(|&i, &j| d[j].cmp(&d[i]).then(i.cmp(&j)));
        let top: u128 = order[..s].iter().map(|&i| d[i] as u128).sum();
        if top >= m as u128 {
            return ColorSet::from_colors(order[..s].iter().map(|&i| i + 1));
        }
        return None;
    }
    subsets_colex(f.color_count(), s).find(|&set| {
        let sum: u128 = set.iter().map(|c| d[c - 1] as u128).sum();
        sum >= f.value(set) as u128
    })
}

fn check_st(s: usize, t: usize) -> Result<()> {
    if s < 1 || s >= t {
        return Err(Error::InvalidInput(format!(
            "need 1 <= s < t, got s={s}, t={t}"
        )));
    }
    Ok(())
}

fn check_classical(ms: &[u64]) -> Result<()> {
    if ms.is_empty() {
        return Err(Error::InvalidInput("need at least one target".into()));
    }
    if let Some(&m) = ms.iter().find(|&&m| m <= 1) {
        return Err(Error::OutOfTheoremRange(format!(
            "targets must all be at least 2, got {m}"
        )));
    }
    Ok(())
}

fn check_xq(m: u64, t: usize) -> Result<()> {
    if t < 2 || m < 1 {
        return Err(Error::InvalidInput(format!(
            "need t >= 2 and m >= 1, got m={m}, t={t}"
        )));
    }
    Ok(())
}
