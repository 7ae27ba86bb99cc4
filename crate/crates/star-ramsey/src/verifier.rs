//! Star detection in colored graphs.
//!
//! For star targets, containment is a pure degree condition: a vertex `v`
//! centers a `K_{1,m_A}` inside color set `A` exactly when its color degrees
//! satisfy `Σ_{i∈A} d_i(v) ≥ m_A`, since any `m_A` qualifying edges at `v`
//! form the star. Detection therefore runs in `O(n · C(t,s))` without any
//! subgraph search, and in `O(n · t log t)` for uniform families via the
//! top-`s` degrees.

use serde::{Deserialize, Serialize};

use crate::color_set::{subsets_colex, ColorSet};
use crate::error::{Error, Result};
use crate::family::StarFamily;
use crate::graph::ColoredGraph;

/// A concrete star: `center` joined to `leaves` by edges colored within
/// `colors`, with `|leaves| = m_colors`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "WitnessJson", into = "WitnessJson")]
pub struct StarWitness {
    pub center: usize,
    pub colors: ColorSet,
    pub leaves: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone)]
struct WitnessJson {
    center: usize,
    colors: Vec<usize>,
    leaves: Vec<usize>,
}

impl TryFrom<WitnessJson> for StarWitness {
    type Error = Error;

    fn try_from(raw: WitnessJson) -> Result<StarWitness> {
        let colors = ColorSet::from_colors(raw.colors.iter().copied())
            .ok_or_else(|| Error::InvalidInput("invalid witness color set".into()))?;
        Ok(StarWitness {
            center: raw.center,
            colors,
            leaves: raw.leaves,
        })
    }
}

impl From<StarWitness> for WitnessJson {
    fn from(w: StarWitness) -> WitnessJson {
        WitnessJson {
            center: w.center,
            colors: w.colors.colors(),
            leaves: w.leaves,
        }
    }
}

/// Per-vertex color degree vectors: `result[v][i-1]` counts the present edges
/// at `v` with color `i`.
pub fn color_degree_vectors(g: &ColoredGraph) -> Vec<Vec<u64>> {
    let mut d = vec![vec![0u64; g.t()]; g.n()];
    for (u, v, c) in g.present_edges() {
        d[u][c as usize - 1] += 1;
        d[v][c as usize - 1] += 1;
    }
    d
}

/// Finds a target star if one exists: the lowest-indexed vertex with a
/// qualifying color subset, with leaves taken in ascending vertex order.
/// Uniform families are checked through their top-`s` color degrees; other
/// families scan subsets in colex order.
pub fn find_star(g: &ColoredGraph, f: &StarFamily) -> Result<Option<StarWitness>> {
    if g.t() != f.color_count() {
        return Err(Error::ColorCountMismatch {
            graph: g.t(),
            family: f.color_count(),
        });
    }
    let degrees = color_degree_vectors(g);
    let hit = vertex_hits(&degrees, f).next();
    Ok(hit.map(|(v, colors)| build_witness(g, f, v, colors)))
}

/// True when the graph contains no target star.
pub fn verify_no_star(g: &ColoredGraph, f: &StarFamily) -> Result<bool> {
    Ok(find_star(g, f)?.is_none())
}

fn vertex_hits<'a>(
    degrees: &'a [Vec<u64>],
    f: &'a StarFamily,
) -> impl Iterator<Item = (usize, ColorSet)> + 'a {
    degrees
        .iter()
        .enumerate()
        .filter_map(move |(v, d)| qualifying_subset(d, f).map(|set| (v, set)))
}

/// The color subset witnessing a star at one vertex, if any.
fn qualifying_subset(d: &[u64], f: &StarFamily) -> Option<ColorSet> {
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

fn build_witness(g: &ColoredGraph, f: &StarFamily, v: usize, colors: ColorSet) -> StarWitness {
    let wanted = f.value(colors) as usize;
    let mut leaves = Vec::with_capacity(wanted);
    for w in 0..g.n() {
        if w == v {
            continue;
        }
        if let Some(c) = g.color(v, w) {
            if colors.contains(c as usize) {
                leaves.push(w);
                if leaves.len() == wanted {
                    break;
                }
            }
        }
    }
    debug_assert_eq!(leaves.len(), wanted);
    StarWitness {
        center: v,
        colors,
        leaves,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompositions::one_factorization;

    fn k4_matchings() -> ColoredGraph {
        let f = one_factorization(4).unwrap();
        let mut edges = Vec::new();
        for (i, matching) in f.factors.iter().enumerate() {
            for &(u, v) in matching {
                edges.push((u, v, (i + 1) as u8));
            }
        }
        edges.sort_unstable();
        ColoredGraph::from_parts(4, 3, None, &[], &edges).unwrap()
    }

    #[test]
    fn degrees_of_monochromatic_triangle() {
        let g =
            ColoredGraph::from_parts(3, 2, None, &[], &[(0, 1, 1), (0, 2, 1), (1, 2, 1)]).unwrap();
        assert_eq!(color_degree_vectors(&g), vec![vec![2, 0]; 3]);
    }

    #[test]
    fn degrees_of_matching_colored_k4() {
        let g = k4_matchings();
        assert_eq!(color_degree_vectors(&g), vec![vec![1, 1, 1]; 4]);
    }

    #[test]
    fn matching_coloring_avoids_small_stars() {
        let f = StarFamily::uniform(3, 2, 3).unwrap();
        assert!(verify_no_star(&k4_matchings(), &f).unwrap());
    }

    #[test]
    fn monochromatic_k6_contains_star() {
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in (u + 1)..6 {
                edges.push((u, v, 1u8));
            }
        }
        let g = ColoredGraph::from_parts(6, 3, None, &[], &edges).unwrap();
        let f = StarFamily::uniform(3, 2, 3).unwrap();
        let w = find_star(&g, &f).unwrap().expect("forced star");
        assert_eq!(w.center, 0);
        assert_eq!(w.leaves, vec![1, 2, 3]);
        assert!(w.colors.contains(1));
    }

    #[test]
    fn single_vertex_has_no_star() {
        let g = ColoredGraph::from_parts(1, 2, None, &[], &[]).unwrap();
        let f = StarFamily::uniform(1, 1, 2).unwrap();
        assert!(find_star(&g, &f).unwrap().is_none());
    }

    #[test]
    fn fully_missing_pair_has_no_star() {
        let g = ColoredGraph::from_parts(2, 2, Some(1), &[(0, 1)], &[]).unwrap();
        let f = StarFamily::uniform(1, 1, 2).unwrap();
        assert!(verify_no_star(&g, &f).unwrap());
    }

    #[test]
    fn color_count_mismatch_is_reported() {
        let g = k4_matchings();
        let f = StarFamily::uniform(3, 2, 4).unwrap();
        assert!(matches!(
            find_star(&g, &f),
            Err(Error::ColorCountMismatch {
                graph: 3,
                family: 4
            })
        ));
    }

    #[test]
    fn witness_satisfies_its_own_invariants() {
        let mut edges = Vec::new();
        for u in 0..5usize {
            for v in (u + 1)..5 {
                edges.push((u, v, ((u + v) % 3 + 1) as u8));
            }
        }
        let g = ColoredGraph::from_parts(5, 3, None, &[], &edges).unwrap();
        let f = StarFamily::uniform(3, 2, 3).unwrap();
        if let Some(w) = find_star(&g, &f).unwrap() {
            assert_eq!(w.leaves.len(), f.value(w.colors) as usize);
            let mut sorted = w.leaves.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), w.leaves.len());
            for &leaf in &w.leaves {
                let c = g.color(w.center, leaf).expect("leaf edge present");
                assert!(w.colors.contains(c as usize));
            }
        }
    }
}
