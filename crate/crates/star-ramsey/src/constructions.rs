//! Extremal colorings witnessing the lower bounds.
//!
//! [`lower_bound_coloring`] produces, for an additive family with Ramsey
//! value `N`, a star-free coloring of the complete graph on `N − 1` vertices.
//! The recipe depends on the profile `(ℓ, a, k)`:
//!
//! * `a = 1`, `k ≥ 1` even — order `Σℓ`: perfect matchings from the
//!   round-robin partition, `ℓ_i` of them per color except one odd-`ℓ` color
//!   that takes `ℓ − 1`.
//! * `a = 1`, `k = 0` — order `Σℓ + 1` (odd): `ℓ_i / 2` spanning 2-factors
//!   per color.
//! * `a ≥ 2`, `Σℓ + a` odd — an even core of order `Σℓ + a − 1` colored from
//!   matchings (`ℓ_i` per color, `ℓ_t + a − 2` for the last), plus one apex
//!   vertex whose edges carry color multiplicities `(ℓ_1, …, ℓ_{t−1},
//!   ℓ_t + a − 1)`.
//! * `Σℓ + a` even — order `Σℓ + a`: matchings again, `ℓ_t + a − 1` of them
//!   for the last color.
//!
//! [`star_critical_lower_coloring`] handles the star-critical bound for
//! uniform `m = (2k+1)s + 1` with even `t`: split `t/2` Hamiltonian cycles of
//! `K_N` into alternating matchings at a designated vertex `v`, keep the
//! remaining cycles whole, and for large `s` restore some of the removed
//! spokes in the colors of the matchings that skip their endpoints.
//!
//! Every construction is passed through the verifier before it is returned;
//! a detected star is a bug in this module, never a property of the input.

use crate::decompositions::{
    hamiltonian_decomposition, one_factorization, split_ordered_path, two_factorization,
};
use crate::error::{Error, Result};
use crate::family::{ell_profile, StarFamily};
use crate::formulas::{ramsey_general, ramsey_uniform};
use crate::graph::ColoredGraph;
use crate::verifier::verify_no_star;

/// Builds a star-free coloring of `K_{N−1}` for an additive family with
/// Ramsey value `N`.
pub fn lower_bound_coloring(f: &StarFamily) -> Result<ColoredGraph> {
    let profile = ell_profile(f)?;
    let t = f.color_count();
    let sum = usize::try_from(profile.sum()).map_err(|_| {
        Error::InvalidInput("profile too large to build an explicit coloring".into())
    })?;
    let a = profile.a as usize;
    let ell: Vec<usize> = profile.ell.iter().map(|&e| e as usize).collect();

    let graph = if a == 1 && profile.k >= 1 && profile.k % 2 == 0 {
        // Order Σℓ, even. One color gives up a matching; it must have ℓ ≥ 1,
        // which any odd-ℓ color guarantees. Pick the largest such index so the
        // choice is deterministic and matches the last color whenever possible.
        let odd = ell
            .iter()
            .rposition(|&e| e % 2 == 1)
            .expect("k >= 1 guarantees an odd entry");
        let mut mult = ell.clone();
        mult[odd] -= 1;
        matching_coloring(sum, t, &mult)?
    } else if a == 1 && profile.k == 0 {
        // Order Σℓ + 1, odd; every ℓ_i is even.
        let mult: Vec<usize> = ell.iter().map(|&e| e / 2).collect();
        two_factor_coloring(sum + 1, t, &mult)?
    } else if (sum + a) % 2 == 1 {
        // a ≥ 2. Even core of order Σℓ + a − 1 plus an apex vertex.
        let core_order = sum + a - 1;
        let mut mult = ell.clone();
        mult[t - 1] = ell[t - 1] + a - 2;
        let core = matching_edges(core_order, t, &mult)?;
        let mut apex_mult = ell.clone();
        apex_mult[t - 1] = ell[t - 1] + a - 1;
        debug_assert_eq!(apex_mult.iter().sum::<usize>(), core_order);
        let apex = core_order;
        let mut edges = core;
        let mut w = 0usize;
        for (color_idx, &count) in apex_mult.iter().enumerate() {
            for _ in 0..count {
                edges.push((w, apex, (color_idx + 1) as u8));
                w += 1;
            }
        }
        edges.sort_unstable();
        ColoredGraph::from_parts(core_order + 1, t, None, &[], &edges)?
    } else {
        // Order Σℓ + a, even; the last color absorbs the extra a − 1 matchings.
        let mut mult = ell.clone();
        mult[t - 1] = ell[t - 1] + a - 1;
        matching_coloring(sum + a, t, &mult)?
    };

    let expected_order = ramsey_general(f)?.r - 1;
    if graph.n() as u128 != expected_order {
        return Err(Error::InternalInconsistency(format!(
            "construction has order {}, expected {expected_order}",
            graph.n()
        )));
    }
    ensure_star_free(&graph, f)?;
    Ok(graph)
}

/// Colors `K_order` by handing out perfect matchings: `mult[i]` of them to
/// color `i + 1`, consuming the round-robin factors in order.
fn matching_coloring(order: usize, t: usize, mult: &[usize]) -> Result<ColoredGraph> {
    let edges = matching_edges(order, t, mult)?;
    ColoredGraph::from_parts(order, t, None, &[], &edges)
}

fn matching_edges(order: usize, t: usize, mult: &[usize]) -> Result<Vec<(usize, usize, u8)>> {
    let total: usize = mult.iter().sum();
    if order <= 1 {
        debug_assert_eq!(total, 0);
        return Ok(Vec::new());
    }
    let factorization = one_factorization(order)?;
    debug_assert_eq!(factorization.factors.len(), total);
    Ok(assign_factors(&factorization.factors, t, mult))
}

/// Colors `K_order` by handing out spanning 2-factors, `mult[i]` per color.
fn two_factor_coloring(order: usize, t: usize, mult: &[usize]) -> Result<ColoredGraph> {
    let total: usize = mult.iter().sum();
    if order <= 1 {
        debug_assert_eq!(total, 0);
        return ColoredGraph::from_parts(order, t, None, &[], &[]);
    }
    let factorization = two_factorization(order)?;
    debug_assert_eq!(factorization.factors.len(), total);
    let edges = assign_factors(&factorization.factors, t, mult);
    ColoredGraph::from_parts(order, t, None, &[], &edges)
}

fn assign_factors(
    factors: &[Vec<(usize, usize)>],
    t: usize,
    mult: &[usize],
) -> Vec<(usize, usize, u8)> {
    debug_assert_eq!(mult.len(), t);
    let mut edges = Vec::new();
    let mut next = 0usize;
    for (color_idx, &count) in mult.iter().enumerate() {
        for factor in factors.iter().skip(next).take(count) {
            for &(u, v) in factor {
                edges.push((u, v, (color_idx + 1) as u8));
            }
        }
        next += count;
    }
    edges.sort_unstable();
    edges
}

/// Builds the star-critical lower-bound coloring for uniform
/// `m = (2k+1)s + 1`, `t` even, `2 ≤ s ≤ t − 1`: a star-free coloring of
/// `K_N` minus `t/2` (or `t − s`, when `s > t/2`) spokes at the designated
/// vertex `N − 1`, where `N = (2k+1)t + 1`.
pub fn star_critical_lower_coloring(m: u64, s: usize, t: usize) -> Result<ColoredGraph> {
    if t % 2 != 0 || s < 2 || s > t - 1 {
        return Err(Error::NotApplicable(format!(
            "need t even and 2 <= s <= t-1, got s={s}, t={t}"
        )));
    }
    if m < s as u64 + 1 || (m - 1) % s as u64 != 0 || ((m - 1) / s as u64) % 2 == 0 {
        return Err(Error::NotApplicable(format!(
            "m = {m} does not have the form (2k+1)s+1 for s = {s}"
        )));
    }
    let k = (((m - 1) / s as u64) - 1) / 2;
    let n = usize::try_from((2 * k as u128 + 1) * t as u128 + 1)
        .map_err(|_| Error::InvalidInput("order too large to construct".into()))?;
    let v = n - 1;
    let cycles = hamiltonian_decomposition(n)?.factors;
    debug_assert_eq!(cycles.len(), (2 * k as usize + 1) * t / 2);

    let mut edges: Vec<(usize, usize, u8)> = Vec::new();
    let mut missing: Vec<(usize, usize)> = Vec::new();

    // The first t/2 cycles lose one spoke at v each and split into two
    // alternating matchings; matchings 2i−1 and 2i take colors 2i−1 and 2i.
    for (i, cycle) in cycles.iter().take(t / 2).enumerate() {
        let order = cycle_order_from(cycle, v);
        // Remove the spoke to the smaller neighbor of v, leaving the path
        // v, order[1], …, order[n-1] = u_i.
        let (first, second) = split_ordered_path(&order);
        let u_i = *order.last().expect("cycle is nonempty");
        // v sits on the first edge, so the odd matching covers v and the even
        // one covers u_i; the removed spoke leaves u_i one short in the odd
        // color, which is what a restored spoke must repay.
        for &(x, y) in &first {
            edges.push((x.min(y), x.max(y), (2 * i + 1) as u8));
        }
        for &(x, y) in &second {
            edges.push((x.min(y), x.max(y), (2 * i + 2) as u8));
        }
        if i < s.saturating_sub(t / 2) {
            edges.push((u_i.min(v), u_i.max(v), (2 * i + 1) as u8));
        } else {
            missing.push((u_i.min(v), u_i.max(v)));
        }
    }

    // The remaining cycles stay whole, k of them per color.
    for color in 1..=t {
        let lo = t / 2 + k as usize * (color - 1);
        for cycle in cycles.iter().skip(lo).take(k as usize) {
            for &(x, y) in cycle {
                edges.push((x, y, color as u8));
            }
        }
    }

    edges.sort_unstable();
    missing.sort_unstable();
    let graph = ColoredGraph::from_parts(n, t, Some(v), &missing, &edges)?;

    let expected_missing = if s <= t / 2 { t / 2 } else { t - s };
    if graph.missing_count() != expected_missing {
        return Err(Error::InternalInconsistency(format!(
            "{} spokes missing, expected {expected_missing}",
            graph.missing_count()
        )));
    }
    let family = StarFamily::uniform(m, s, t)?;
    ensure_star_free(&graph, &family)?;
    if ramsey_uniform(m, s, t)?.r != n as u128 {
        return Err(Error::InternalInconsistency(
            "host order does not match the Ramsey value".into(),
        ));
    }
    Ok(graph)
}

/// Orders a Hamiltonian cycle as a vertex walk starting at `v`, ending at the
/// smaller of v's two cycle neighbors (which is the removed-spoke endpoint).
fn cycle_order_from(cycle: &[(usize, usize)], v: usize) -> Vec<usize> {
    let n = cycle.len();
    let mut adj: std::collections::HashMap<usize, Vec<usize>> = std::collections::HashMap::new();
    for &(x, y) in cycle {
        adj.entry(x).or_default().push(y);
        adj.entry(y).or_default().push(x);
    }
    let nbrs = &adj[&v];
    debug_assert_eq!(nbrs.len(), 2);
    let last = nbrs[0].min(nbrs[1]);
    let second = nbrs[0].max(nbrs[1]);
    let mut order = Vec::with_capacity(n);
    order.push(v);
    order.push(second);
    let (mut prev, mut here) = (v, second);
    while order.len() < n {
        let next = adj[&here]
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("cycle walk");
        order.push(next);
        prev = here;
        here = next;
    }
    debug_assert_eq!(*order.last().unwrap(), last);
    order
}

fn ensure_star_free(graph: &ColoredGraph, f: &StarFamily) -> Result<()> {
    match verify_no_star(graph, f)? {
        true => Ok(()),
        false => Err(Error::InternalInconsistency(
            "construction contains a target star".into(),
        )),
    }
}
