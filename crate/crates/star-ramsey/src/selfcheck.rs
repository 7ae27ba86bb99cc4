//! Cross-validation grids: independent formulas against each other, and the
//! exhaustive oracle against the closed forms.

use serde::Serialize;

use crate::error::Result;
use crate::family::StarFamily;
use crate::formulas::{
    ramsey_classical, ramsey_general, ramsey_tminus1_xq, ramsey_uniform, star_critical_classical,
    star_critical_tminus1_xq, star_critical_uniform,
};
use crate::oracle::{brute_force_ramsey, brute_force_star_critical, OracleValue, SearchConfig};

/// One named check with every disagreement spelled out.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub points: usize,
    pub disagreements: Vec<String>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Uniform piecewise form against the profile-based general formula:
/// `2 ≤ t ≤ 6`, `1 ≤ s < t`, `s ≤ m ≤ 15`.
pub fn grid_uniform_vs_general() -> Result<CheckReport> {
    let mut report = CheckReport {
        name: "uniform-vs-general",
        points: 0,
        disagreements: Vec::new(),
    };
    for t in 2..=6usize {
        for s in 1..t {
            for m in s as u64..=15 {
                report.points += 1;
                let uniform = ramsey_uniform(m, s, t)?.r;
                let general = ramsey_general(&StarFamily::uniform(m, s, t)?)?.r;
                if uniform != general {
                    report.disagreements.push(format!(
                        "(m={m}, s={s}, t={t}): piecewise {uniform} != general {general}"
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// `s = t−1` forms against the uniform piecewise form: `2 ≤ t ≤ 8`,
/// `t−1 ≤ m ≤ 30`, for both the Ramsey and star-critical values.
pub fn grid_tminus1() -> Result<CheckReport> {
    let mut report = CheckReport {
        name: "s=t-1-x-q-form",
        points: 0,
        disagreements: Vec::new(),
    };
    for t in 2..=8usize {
        let s = t - 1;
        for m in (s as u64).max(1)..=30 {
            report.points += 1;
            let via_xq = ramsey_tminus1_xq(m, t)?.r;
            let uniform = ramsey_uniform(m, s, t)?.r;
            if via_xq != uniform {
                report.disagreements.push(format!(
                    "(m={m}, t={t}): x-q form {via_xq} != piecewise {uniform}"
                ));
            }
            let sc_xq = star_critical_tminus1_xq(m, t)?.rstar;
            let sc_uniform = star_critical_uniform(m, s, t)?.rstar;
            if sc_xq != sc_uniform {
                report.disagreements.push(format!(
                    "(m={m}, t={t}): star-critical x-q form {sc_xq} != piecewise {sc_uniform}"
                ));
            }
        }
    }
    Ok(report)
}

/// `s = 1` uniform values against the classical multicolor star formulas:
/// `2 ≤ t ≤ 6`, `2 ≤ m ≤ 15`.
pub fn grid_classical() -> Result<CheckReport> {
    let mut report = CheckReport {
        name: "s=1-vs-classical",
        points: 0,
        disagreements: Vec::new(),
    };
    for t in 2..=6usize {
        for m in 2..=15u64 {
            report.points += 1;
            let ms = vec![m; t];
            let uniform = ramsey_uniform(m, 1, t)?.r;
            let classical = ramsey_classical(&ms)?.r;
            if uniform != classical {
                report.disagreements.push(format!(
                    "(m={m}, t={t}): s=1 piecewise {uniform} != classical {classical}"
                ));
            }
            let sc_uniform = star_critical_uniform(m, 1, t)?.rstar;
            let sc_classical = star_critical_classical(&ms)?.rstar;
            if sc_uniform != sc_classical {
                report.disagreements.push(format!(
                    "(m={m}, t={t}): s=1 star-critical {sc_uniform} != classical {sc_classical}"
                ));
            }
        }
    }
    Ok(report)
}

/// The three formula grids.
pub fn formula_grids() -> Result<Vec<CheckReport>> {
    Ok(vec![
        grid_uniform_vs_general()?,
        grid_tminus1()?,
        grid_classical()?,
    ])
}

/// Uniform desk grid for the Ramsey oracle: `(s, t, m_lo..=m_hi)`.
pub const ORACLE_RAMSEY_GRID: &[(usize, usize, u64, u64)] = &[
    (1, 2, 1, 5),
    (1, 3, 1, 3),
    (2, 3, 2, 5),
    (2, 4, 3, 3),
    (3, 4, 3, 4),
];

/// Uniform desk grid for the star-critical oracle.
pub const ORACLE_STAR_CRITICAL_GRID: &[(usize, usize, u64, u64)] =
    &[(1, 2, 2, 4), (2, 3, 2, 4), (2, 4, 3, 3)];

fn small_points(grid: &[(usize, usize, u64, u64)]) -> Vec<(usize, usize, u64, u64)> {
    grid.iter()
        .map(|&(s, t, lo, hi)| (s, t, lo, hi.min(3)))
        .filter(|&(_, t, _, _)| t <= 3)
        .collect()
}

/// Oracle vs uniform formula across a grid. `full` runs the whole desk grid
/// plus the weighted three-color family; otherwise a trimmed subset.
pub fn oracle_ramsey_grid(full: bool, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut report = CheckReport {
        name: "oracle-vs-uniform",
        points: 0,
        disagreements: Vec::new(),
    };
    let points = if full {
        ORACLE_RAMSEY_GRID.to_vec()
    } else {
        small_points(ORACLE_RAMSEY_GRID)
    };
    for (s, t, lo, hi) in points {
        for m in lo..=hi {
            report.points += 1;
            let expected = ramsey_uniform(m, s, t)?.r;
            let family = StarFamily::uniform(m, s, t)?;
            let sym = SearchConfig {
                break_color_symmetry: true,
                ..cfg.clone()
            };
            let got = brute_force_ramsey(&family, &sym)?;
            match got.value {
                OracleValue::Value(v) if v as u128 == expected => {}
                OracleValue::Value(v) => report.disagreements.push(format!(
                    "(m={m}, s={s}, t={t}): oracle {v} != formula {expected}"
                )),
                OracleValue::BudgetExhausted => report
                    .disagreements
                    .push(format!("(m={m}, s={s}, t={t}): oracle budget exhausted")),
            }
        }
    }
    if full {
        report.points += 1;
        let family = StarFamily::new(3, 2, vec![5, 6, 7])?;
        let expected = ramsey_general(&family)?.r;
        let got = brute_force_ramsey(&family, cfg)?;
        match got.value {
            OracleValue::Value(v) if v as u128 == expected => {}
            other => report.disagreements.push(format!(
                "weighted family (5,6,7): oracle {other:?} != formula {expected}"
            )),
        }
    }
    Ok(report)
}

/// Oracle vs uniform star-critical formula across a grid.
pub fn oracle_star_critical_grid(full: bool, cfg: &SearchConfig) -> Result<CheckReport> {
    let mut report = CheckReport {
        name: "oracle-vs-star-critical",
        points: 0,
        disagreements: Vec::new(),
    };
    let points = if full {
        ORACLE_STAR_CRITICAL_GRID.to_vec()
    } else {
        small_points(ORACLE_STAR_CRITICAL_GRID)
    };
    for (s, t, lo, hi) in points {
        for m in lo..=hi {
            report.points += 1;
            let expected = star_critical_uniform(m, s, t)?.rstar;
            let sym = SearchConfig {
                break_color_symmetry: true,
                ..cfg.clone()
            };
            let got = brute_force_star_critical(m, s, t, &sym)?;
            match got.value {
                OracleValue::Value(v) if v as u128 == expected => {}
                OracleValue::Value(v) => report.disagreements.push(format!(
                    "(m={m}, s={s}, t={t}): oracle {v} != formula {expected}"
                )),
                OracleValue::BudgetExhausted => report
                    .disagreements
                    .push(format!("(m={m}, s={s}, t={t}): oracle budget exhausted")),
            }
        }
    }
    Ok(report)
}

/// Everything the `selfcheck` command runs.
pub fn run_all(full: bool, cfg: &SearchConfig) -> Result<Vec<CheckReport>> {
    let mut reports = formula_grids()?;
    reports.push(oracle_ramsey_grid(full, cfg)?);
    reports.push(oracle_star_critical_grid(full, cfg)?);
    Ok(reports)
}
