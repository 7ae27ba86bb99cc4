//! Property tests for the module invariants.

mod common;

use proptest::prelude::*;

use common::naive_contains_star;
use star_ramsey::color_set::subsets_colex;
use star_ramsey::family::{ell_profile, sum_condition, StarFamily, SumCondition, SumViolation};
use star_ramsey::graph::ColoredGraph;
use star_ramsey::verifier::{find_star, verify_no_star};

/// Additive family with its generating profile: `m_A = Σ_{i∈A} ell_i + a`.
fn additive_family() -> impl Strategy<Value = (StarFamily, Vec<u64>, u64)> {
    (2usize..=6)
        .prop_flat_map(|t| (Just(t), 1usize..t, proptest::collection::vec(0u64..=4, t)))
        .prop_flat_map(|(t, s, ell)| (Just(t), Just(s), Just(ell), 1u64..=s as u64))
        .prop_map(|(t, s, ell, a)| {
            let values: Vec<u64> = subsets_colex(t, s)
                .map(|set| set.iter().map(|c| ell[c - 1]).sum::<u64>() + a)
                .collect();
            (StarFamily::new(t, s, values).unwrap(), ell, a)
        })
}

/// An arbitrary family: valid shape, values unconstrained (often non-additive).
fn arbitrary_family() -> impl Strategy<Value = StarFamily> {
    (2usize..=5)
        .prop_flat_map(|t| (Just(t), 1usize..t))
        .prop_flat_map(|(t, s)| {
            let count = subsets_colex(t, s).count();
            (Just(t), Just(s), proptest::collection::vec(1u64..=8, count))
        })
        .prop_map(|(t, s, values)| StarFamily::new(t, s, values).unwrap())
}

/// A random coloring of K_n (n ≤ 8) with an optional partially removed star.
fn small_colored_graph() -> impl Strategy<Value = (ColoredGraph, StarFamily)> {
    (2usize..=8, 2usize..=4)
        .prop_flat_map(|(n, t)| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                Just(t),
                1usize..t,
                proptest::collection::vec(0u8..=(t as u8), pairs),
                proptest::collection::vec(1u64..=5, subsets_max(t)),
            )
        })
        .prop_map(|(n, t, s, cells, raw_values)| {
            // Cell 0 means "missing"; missing pairs must touch the center,
            // so reroute others to color 1.
            let center = n - 1;
            let mut edges = Vec::new();
            let mut missing = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    let c = cells[idx];
                    idx += 1;
                    if c == 0 && v == center {
                        missing.push((u, v));
                    } else {
                        edges.push((u, v, c.max(1)));
                    }
                }
            }
            let g = ColoredGraph::from_parts(
                n,
                t,
                if missing.is_empty() {
                    None
                } else {
                    Some(center)
                },
                &missing,
                &edges,
            )
            .unwrap();
            let count = subsets_colex(t, s).count();
            let f = StarFamily::new(t, s, raw_values[..count].to_vec()).unwrap();
            (g, f)
        })
}

fn subsets_max(t: usize) -> usize {
    (1..t)
        .map(|s| subsets_colex(t, s).count())
        .max()
        .unwrap_or(1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// The computed profile reproduces the generating one, and the subset
    /// identity Σ_{i∈A} ℓ_i = m_A − a holds for every subset.
    #[test]
    fn profile_recovers_additive_generators((f, ell, a) in additive_family()) {
        let p = ell_profile(&f).unwrap();
        prop_assert_eq!(&p.ell, &ell);
        prop_assert_eq!(p.a, a);
        prop_assert_eq!(p.k, ell.iter().filter(|&&e| e % 2 == 1).count());
        for set in f.subsets() {
            let sum: u64 = set.iter().map(|c| p.ell[c - 1]).sum();
            prop_assert_eq!(sum + p.a, f.value(set));
        }
    }

    /// Additivity is invariant under any consistent relabeling of colors.
    #[test]
    fn sum_condition_is_permutation_invariant(
        f in arbitrary_family(),
        seed in 0u64..1000,
    ) {
        let t = f.color_count();
        let mut perm: Vec<usize> = (1..=t).collect();
        // Cheap deterministic shuffle from the seed.
        for i in (1..t).rev() {
            perm.swap(i, (seed as usize).wrapping_mul(31).wrapping_add(i) % (i + 1));
        }
        let relabeled = f.relabeled(&perm).unwrap();
        prop_assert_eq!(sum_condition(&f).holds(), sum_condition(&relabeled).holds());
    }

    /// Cross-validation of the linear-algebra decision against a brute-force
    /// scan of multiset pairs of size at most 3.
    #[test]
    fn sum_condition_agrees_with_bounded_multiset_scan(f in arbitrary_family()) {
        let subsets: Vec<_> = f.subsets().collect();
        let violation = brute_force_violation(&f, &subsets);
        match sum_condition(&f) {
            SumCondition::Holds { weights } => {
                // No small pair may violate, and the weights must reproduce
                // every value exactly.
                prop_assert!(violation.is_none(), "holds, but {:?} violates", violation);
                for set in &subsets {
                    let sum: num::BigRational =
                        set.iter().map(|c| weights[c - 1].clone()).sum();
                    prop_assert_eq!(
                        sum,
                        num::BigRational::from_integer(f.value(*set).into())
                    );
                }
            }
            SumCondition::Fails(SumViolation::MultisetPair {
                left, right, left_sum, right_sum,
            }) => {
                prop_assert_ne!(left_sum, right_sum);
                let union = |sets: &[star_ramsey::ColorSet]| {
                    let mut counts = vec![0u32; f.color_count()];
                    for s in sets {
                        for c in s.iter() { counts[c - 1] += 1; }
                    }
                    counts
                };
                prop_assert_eq!(union(&left), union(&right));
                let total = |sets: &[star_ramsey::ColorSet]| -> u128 {
                    sets.iter().map(|s| f.value(*s) as u128).sum()
                };
                prop_assert_eq!(total(&left), left_sum);
                prop_assert_eq!(total(&right), right_sum);
            }
            SumCondition::Fails(SumViolation::InconsistentSystem { .. }) => {
                // Inconsistent, but no pair within the b <= 3 bound: the
                // brute force must agree that no small pair exists.
                prop_assert!(violation.is_none());
            }
        }
    }

    /// The degree criterion agrees with a literal star search that scans the
    /// raw edge list.
    #[test]
    fn degree_criterion_matches_naive_search((g, f) in small_colored_graph()) {
        let fast = find_star(&g, &f).unwrap();
        let slow = naive_contains_star(&g, &f);
        prop_assert_eq!(fast.is_some(), slow);
        if let Some(w) = fast {
            // Witness re-check: correct leaf count, distinct leaves, every
            // edge present and colored inside the witness subset.
            prop_assert_eq!(w.leaves.len() as u64, f.value(w.colors));
            let mut sorted = w.leaves.clone();
            sorted.sort_unstable();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), w.leaves.len());
            for &leaf in &w.leaves {
                let c = g.color(w.center, leaf).expect("witness edge present");
                prop_assert!(w.colors.contains(c as usize));
            }
        }
    }

    /// Removing spokes never creates a star.
    #[test]
    fn edge_removal_is_monotone((g, f) in small_colored_graph()) {
        if !verify_no_star(&g, &f).unwrap() {
            return Ok(());
        }
        // Delete each spoke at the last vertex in turn; star-freeness must
        // survive every deletion.
        let center = g.n() - 1;
        let mut missing: Vec<(usize, usize)> = g.missing_pairs().collect();
        let mut edges: Vec<(usize, usize, u8)> = g.present_edges().collect();
        while let Some(pos) = edges.iter().position(|&(_, v, _)| v == center) {
            let (u, v, _) = edges.remove(pos);
            missing.push((u, v));
            let smaller =
                ColoredGraph::from_parts(g.n(), g.t(), Some(center), &missing, &edges).unwrap();
            prop_assert!(verify_no_star(&smaller, &f).unwrap());
        }
    }
}

/// Color-symmetry breaking must not change the existence answer anywhere on
/// the uniform desk grid, at the critical order and one below it.
#[test]
fn symmetry_breaking_safe_on_the_desk_grid() {
    use star_ramsey::formulas::ramsey_uniform;
    use star_ramsey::oracle::{exists_avoidance_coloring, SearchConfig};
    use star_ramsey::selfcheck::ORACLE_RAMSEY_GRID;

    let plain = SearchConfig::default();
    let broken = SearchConfig {
        break_color_symmetry: true,
        ..SearchConfig::default()
    };
    for &(s, t, lo, hi) in ORACLE_RAMSEY_GRID {
        for m in lo..=hi {
            let f = StarFamily::uniform(m, s, t).unwrap();
            let r = ramsey_uniform(m, s, t).unwrap().r as usize;
            for n in [r - 1, r] {
                if n == 0 {
                    continue;
                }
                let a = exists_avoidance_coloring(n, &f, &[], &plain).unwrap();
                let b = exists_avoidance_coloring(n, &f, &[], &broken).unwrap();
                assert_eq!(
                    a.is_some(),
                    b.is_some(),
                    "existence differs at (m={m}, s={s}, t={t}, n={n})"
                );
            }
        }
    }
}

/// Exhaustive scan for violating multiset pairs with b ≤ 3 (test-side twin
/// of the library's bounded search, written independently).
fn brute_force_violation(
    f: &StarFamily,
    subsets: &[star_ramsey::ColorSet],
) -> Option<(Vec<usize>, Vec<usize>)> {
    use std::collections::HashMap;
    let union_key = |picks: &[usize]| -> Vec<u32> {
        let mut counts = vec![0u32; f.color_count()];
        for &i in picks {
            for c in subsets[i].iter() {
                counts[c - 1] += 1;
            }
        }
        counts
    };
    let value =
        |picks: &[usize]| -> u128 { picks.iter().map(|&i| f.value(subsets[i]) as u128).sum() };
    for b in 2..=3usize {
        let mut seen: HashMap<Vec<u32>, (Vec<usize>, u128)> = HashMap::new();
        let mut picks = vec![0usize; b];
        loop {
            let key = union_key(&picks);
            let sum = value(&picks);
            if let Some((other, other_sum)) = seen.get(&key) {
                if *other_sum != sum {
                    return Some((other.clone(), picks.clone()));
                }
            } else {
                seen.insert(key, (picks.clone(), sum));
            }
            // next nondecreasing vector
            let mut pos = b;
            let mut advanced = false;
            while pos > 0 {
                pos -= 1;
                if picks[pos] + 1 < subsets.len() {
                    let v = picks[pos] + 1;
                    for slot in picks.iter_mut().skip(pos) {
                        *slot = v;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    None
}
