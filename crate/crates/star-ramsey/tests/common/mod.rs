//! Helpers shared by the integration suites: an independent factorization
//! validator, a literal star search that bypasses the degree criterion, and
//! random family generators.
//!
//! Each test binary compiles this module separately and uses its own subset.
#![allow(dead_code)]

use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::Rng;

use star_ramsey::color_set::subsets_colex;
use star_ramsey::decompositions::{FactorKind, Factorization};
use star_ramsey::family::StarFamily;
use star_ramsey::graph::ColoredGraph;

/// Recounts edges, degrees, and connectivity of a factorization from scratch.
/// Panics with a description on any violated invariant.
pub fn validate_factorization(f: &Factorization) {
    let n = f.n;
    let expected_factors = match f.kind {
        FactorKind::OneFactor => n - 1,
        FactorKind::TwoFactor | FactorKind::Hamiltonian => (n - 1) / 2,
    };
    assert_eq!(f.factors.len(), expected_factors, "factor count for n={n}");

    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for (idx, factor) in f.factors.iter().enumerate() {
        let mut degree = vec![0usize; n];
        for &(u, v) in factor {
            assert!(u < v, "unordered pair ({u},{v})");
            assert!(v < n, "vertex {v} out of range");
            assert!(
                seen.insert((u, v)),
                "edge ({u},{v}) repeated across factors"
            );
            degree[u] += 1;
            degree[v] += 1;
        }
        match f.kind {
            FactorKind::OneFactor => {
                assert_eq!(factor.len(), n / 2, "matching {idx} size");
                assert!(
                    degree.iter().all(|&d| d == 1),
                    "factor {idx} is not a perfect matching"
                );
            }
            FactorKind::TwoFactor => {
                assert_eq!(factor.len(), n, "2-factor {idx} size");
                assert!(
                    degree.iter().all(|&d| d == 2),
                    "factor {idx} is not 2-regular spanning"
                );
            }
            FactorKind::Hamiltonian => {
                assert_eq!(factor.len(), n, "cycle {idx} size");
                assert!(
                    degree.iter().all(|&d| d == 2),
                    "factor {idx} is not 2-regular"
                );
                assert!(
                    connected(n, factor),
                    "factor {idx} is not a single spanning cycle"
                );
            }
        }
    }
    let expected_edges = n * (n - 1) / 2;
    assert_eq!(seen.len(), expected_edges, "union does not cover K_{n}");
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut visited = vec![false; n];
    let mut stack = vec![0usize];
    visited[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !visited[w] {
                visited[w] = true;
                stack.push(w);
            }
        }
    }
    visited.into_iter().all(|b| b)
}

/// Literal star search: for every vertex and every color subset, count the
/// incident present edges colored inside the subset by scanning the whole
/// edge list. Independent of the verifier's degree-vector machinery.
pub fn naive_contains_star(g: &ColoredGraph, f: &StarFamily) -> bool {
    let edges: Vec<(usize, usize, u8)> = g.present_edges().collect();
    for v in 0..g.n() {
        for set in subsets_colex(f.color_count(), f.subset_size()) {
            let count = edges
                .iter()
                .filter(|&&(a, b, c)| (a == v || b == v) && set.contains(c as usize))
                .count() as u64;
            if count >= f.value(set) {
                return true;
            }
        }
    }
    false
}

/// A random additive family: degrees `ell_i ∈ 0..=3` and remainder
/// `a ∈ 1..=s` define `m_A = Σ_{i∈A} ell_i + a ≤ 4s ≤ 40`.
pub fn random_additive_family(rng: &mut StdRng) -> (StarFamily, Vec<u64>, u64) {
    let t = rng.gen_range(2..=6usize);
    let s = rng.gen_range(1..t);
    let ell: Vec<u64> = (0..t).map(|_| rng.gen_range(0..=3u64)).collect();
    let a = rng.gen_range(1..=s as u64);
    let values: Vec<u64> = subsets_colex(t, s)
        .map(|set| set.iter().map(|c| ell[c - 1]).sum::<u64>() + a)
        .collect();
    let family = StarFamily::new(t, s, values).expect("generated family is valid");
    (family, ell, a)
}

/// Random composition of `total` into `parts` nonnegative summands
/// (stars and bars with sorted uniform cut points).
pub fn random_composition(rng: &mut StdRng, total: u64, parts: usize) -> Vec<u64> {
    let mut cuts: Vec<u64> = (0..parts - 1).map(|_| rng.gen_range(0..=total)).collect();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0u64;
    for &c in &cuts {
        out.push(c - prev);
        prev = c;
    }
    out.push(total - prev);
    out
}
