//! Edge-colored complete graphs, possibly minus a star at one vertex.
//!
//! Every unordered pair of vertices is either colored (1-based color `≤ t`)
//! or missing, and missing pairs must all touch the designated `center`.
//! The JSON form is a fixed contract:
//!
//! ```json
//! {"n": 5, "t": 4, "center": 4, "missing": [[0,4],[1,4]], "edges": [[0,1,2], …]}
//! ```
//!
//! with `u < v`, vertices 0-indexed, colors 1-indexed, every pair appearing
//! exactly once across `edges ∪ missing`, and `missing` pairs incident to
//! `center`. Parsing rejects anything else: duplicates, self-loops,
//! out-of-range colors, or missing pairs away from the center.

use serde::{Deserialize, Serialize};

use crate::color_set::MAX_COLORS;
use crate::error::{Error, Result};

const MISSING: u8 = 0;

/// A `t`-edge-colored `K_n`, minus an optional star at `center`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "ColoredGraphJson", into = "ColoredGraphJson")]
pub struct ColoredGraph {
    n: usize,
    t: usize,
    center: Option<usize>,
    /// Triangular array over pairs `(u, v)`, `u < v`, indexed by
    /// `v(v−1)/2 + u`; `0` marks a missing pair, otherwise the 1-based color.
    cells: Vec<u8>,
}

fn cell_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

impl ColoredGraph {
    /// Builds and fully validates a colored graph from explicit parts.
    /// `edges` are `(u, v, color)` with `u < v`; `missing` pairs must all be
    /// incident to `center`.
    pub fn from_parts(
        n: usize,
        t: usize,
        center: Option<usize>,
        missing: &[(usize, usize)],
        edges: &[(usize, usize, u8)],
    ) -> Result<ColoredGraph> {
        if !(1..=MAX_COLORS).contains(&t) {
            return Err(Error::InvalidInput(format!(
                "color count t must be in 1..={MAX_COLORS}, got {t}"
            )));
        }
        if let Some(c) = center {
            if c >= n {
                return Err(Error::InvalidInput(format!(
                    "center {c} out of range for n = {n}"
                )));
            }
        }
        let mut cells = vec![u8::MAX; n * n.saturating_sub(1) / 2];
        let mut place = |u: usize, v: usize, value: u8| -> Result<()> {
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            if u > v {
                return Err(Error::InvalidInput(format!(
                    "pair ({u},{v}) must be listed with u < v"
                )));
            }
            if v >= n {
                return Err(Error::InvalidInput(format!(
                    "pair ({u},{v}) out of range for n = {n}"
                )));
            }
            let slot = &mut cells[cell_index(u, v)];
            if *slot != u8::MAX {
                return Err(Error::InvalidInput(format!(
                    "pair ({u},{v}) appears more than once"
                )));
            }
            *slot = value;
            Ok(())
        };
        for &(u, v) in missing {
            match center {
                Some(c) if u == c || v == c => {}
                Some(c) => {
                    return Err(Error::InvalidInput(format!(
                        "missing pair ({u},{v}) is not incident to center {c}"
                    )))
                }
                None => return Err(Error::InvalidInput("missing pairs require a center".into())),
            }
            place(u, v, MISSING)?;
        }
        for &(u, v, color) in edges {
            if color == 0 || color as usize > t {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) has color {color} outside 1..={t}"
                )));
            }
            place(u, v, color)?;
        }
        if let Some(idx) = cells.iter().position(|&c| c == u8::MAX) {
            // Invert the triangular index for the message.
            let mut v = 1;
            while cell_index(0, v + 1) <= idx {
                v += 1;
            }
            let u = idx - cell_index(0, v);
            return Err(Error::InvalidInput(format!(
                "pair ({u},{v}) is neither colored nor missing"
            )));
        }
        Ok(ColoredGraph {
            n,
            t,
            center,
            cells,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn center(&self) -> Option<usize> {
        self.center
    }

    /// Color of the pair `(u, v)`, or `None` when the pair is missing.
    pub fn color(&self, u: usize, v: usize) -> Option<u8> {
        assert_ne!(u, v, "no self-loops");
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        assert!(v < self.n, "vertex {v} out of range");
        match self.cells[cell_index(u, v)] {
            MISSING => None,
            c => Some(c),
        }
    }

    /// Present edges `(u, v, color)` in lexicographic pair order.
    pub fn present_edges(&self) -> impl Iterator<Item = (usize, usize, u8)> + '_ {
        self.pairs_lex()
            .filter_map(move |(u, v)| match self.cells[cell_index(u, v)] {
                MISSING => None,
                c => Some((u, v, c)),
            })
    }

    /// Missing pairs in lexicographic order.
    pub fn missing_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs_lex()
            .filter(move |&(u, v)| self.cells[cell_index(u, v)] == MISSING)
    }

    pub fn missing_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c == MISSING).count()
    }

    fn pairs_lex(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (0..n).flat_map(move |u| ((u + 1)..n).map(move |v| (u, v)))
    }
}

#[derive(Serialize, Deserialize, Clone)]
struct ColoredGraphJson {
    n: usize,
    t: usize,
    center: Option<usize>,
    missing: Vec<(usize, usize)>,
    edges: Vec<(usize, usize, u8)>,
}

impl TryFrom<ColoredGraphJson> for ColoredGraph {
    type Error = Error;

    fn try_from(raw: ColoredGraphJson) -> Result<ColoredGraph> {
        ColoredGraph::from_parts(raw.n, raw.t, raw.center, &raw.missing, &raw.edges)
    }
}

impl From<ColoredGraph> for ColoredGraphJson {
    fn from(g: ColoredGraph) -> ColoredGraphJson {
        ColoredGraphJson {
            n: g.n,
            t: g.t,
            center: g.center,
            missing: g.missing_pairs().collect(),
            edges: g.present_edges().collect(),
        }
    }
}
