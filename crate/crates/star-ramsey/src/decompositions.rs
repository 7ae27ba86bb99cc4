//! Deterministic factorizations of complete graphs.
//!
//! The extremal colorings are assembled from three classical constructions:
//! the round-robin (circle) partition of `K_{2n}` into `2n−1` perfect
//! matchings, the zigzag partition of `K_{2n+1}` into `n` Hamiltonian cycles,
//! and the same cycles reread as 2-factors. All outputs are deterministic:
//! identical inputs produce identical edge lists in identical order.

use crate::error::{Error, Result};

/// A set of vertex-disjoint edges.
pub type Matching = Vec<(usize, usize)>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorKind {
    OneFactor,
    TwoFactor,
    Hamiltonian,
}

/// An ordered, edge-disjoint partition of `E(K_n)` into spanning factors.
/// Edges are unordered pairs `(u, v)` with `u < v`, vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pub n: usize,
    pub kind: FactorKind,
    pub factors: Vec<Vec<(usize, usize)>>,
}

impl Factorization {
    /// Total number of edges across all factors.
    pub fn edge_count(&self) -> usize {
        self.factors.iter().map(Vec::len).sum()
    }
}

fn pair(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Partitions `K_n` (`n` even, `n ≥ 2`) into `n−1` perfect matchings via the
/// circle method: vertex `n−1` stays fixed while `0..n-1` rotate.
pub fn one_factorization(n: usize) -> Result<Factorization> {
    if n % 2 != 0 {
        return Err(Error::OddOrder(n));
    }
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "order must be at least 2, got {n}"
        )));
    }
    let ring = n - 1;
    let mut factors = Vec::with_capacity(ring);
    for round in 0..ring {
        let mut matching = Vec::with_capacity(n / 2);
        matching.push(pair(round, n - 1));
        for i in 1..n / 2 {
            matching.push(pair((round + i) % ring, (round + ring - i) % ring));
        }
        factors.push(matching);
    }
    Ok(Factorization {
        n,
        kind: FactorKind::OneFactor,
        factors,
    })
}

/// Partitions `K_n` (`n` odd) into `(n−1)/2` Hamiltonian cycles via the
/// zigzag construction: vertex `n−1` is the hub, and the `j`-th cycle follows
/// the rotated zigzag `j, j+1, j−1, j+2, j−2, …` around the ring `0..n-1`.
pub fn hamiltonian_decomposition(n: usize) -> Result<Factorization> {
    if n % 2 == 0 {
        return Err(Error::EvenOrder(n));
    }
    let half = (n - 1) / 2;
    let ring = n - 1;
    let hub = n - 1;
    let mut factors = Vec::with_capacity(half);
    for j in 0..half {
        let mut seq = Vec::with_capacity(n);
        seq.push(hub);
        seq.push(j);
        for step in 1..=ring / 2 {
            seq.push((j + step) % ring);
            if seq.len() < n {
                seq.push((j + ring - step) % ring);
            }
        }
        debug_assert_eq!(seq.len(), n);
        let mut cycle = Vec::with_capacity(n);
        for w in seq.windows(2) {
            cycle.push(pair(w[0], w[1]));
        }
        cycle.push(pair(seq[n - 1], hub));
        factors.push(cycle);
    }
    Ok(Factorization {
        n,
        kind: FactorKind::Hamiltonian,
        factors,
    })
}

/// Partitions `K_n` (`n` odd) into `(n−1)/2` spanning 2-factors. A Hamiltonian
/// cycle is a 2-factor, so this is the zigzag decomposition relabeled.
pub fn two_factorization(n: usize) -> Result<Factorization> {
    let mut f = hamiltonian_decomposition(n)?;
    f.kind = FactorKind::TwoFactor;
    Ok(f)
}

/// Splits a Hamiltonian path, given as an edge list in any order, into its two
/// alternating matchings. Traversal starts at the endpoint with the smaller
/// vertex id; the first, third, … edges land in the first matching.
pub fn split_path_into_matchings(path: &[(usize, usize)]) -> Result<(Matching, Matching)> {
    let order = path_vertex_order(path)?;
    Ok(split_ordered_path(&order))
}

/// Alternates the edges of a path given as a vertex sequence.
pub(crate) fn split_ordered_path(order: &[usize]) -> (Matching, Matching) {
    let mut odd = Vec::with_capacity(order.len() / 2);
    let mut even = Vec::with_capacity(order.len() / 2);
    for (i, w) in order.windows(2).enumerate() {
        let e = pair(w[0], w[1]);
        if i % 2 == 0 {
            odd.push(e);
        } else {
            even.push(e);
        }
    }
    (odd, even)
}

/// Reconstructs the vertex order of a simple spanning path from its edge list,
/// starting at the endpoint with the smaller id.
fn path_vertex_order(path: &[(usize, usize)]) -> Result<Vec<usize>> {
    use std::collections::HashMap;
    if path.is_empty() {
        return Err(Error::NotAPath("empty edge list".into()));
    }
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(u, v) in path {
        if u == v {
            return Err(Error::NotAPath(format!("self-loop at {u}")));
        }
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    if adj.len() != path.len() + 1 {
        return Err(Error::NotAPath(format!(
            "{} edges over {} vertices",
            path.len(),
            adj.len()
        )));
    }
    let mut endpoints: Vec<usize> = adj
        .iter()
        .filter(|(_, nbrs)| nbrs.len() == 1)
        .map(|(&v, _)| v)
        .collect();
    if endpoints.len() != 2 || adj.values().any(|nbrs| nbrs.len() > 2) {
        return Err(Error::NotAPath("degrees are not those of a path".into()));
    }
    endpoints.sort_unstable();
    let start = endpoints[0];
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut here = start;
    while order.len() <= path.len() {
        let next = adj[&here]
            .iter()
            .copied()
            .find(|&w| w != prev)
            .ok_or_else(|| Error::NotAPath("walk terminated early".into()))?;
        order.push(next);
        prev = here;
        here = next;
    }
    if order.len() != path.len() + 1 {
        return Err(Error::NotAPath("disconnected edge list".into()));
    }
    Ok(order)
}
