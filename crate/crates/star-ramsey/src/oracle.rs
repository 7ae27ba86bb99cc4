//! Exhaustive-search oracle for small Ramsey instances.
//!
//! The oracle recomputes Ramsey and star-critical values straight from their
//! definitions, independently of every closed form: an *avoidance coloring*
//! of a host graph is one with no target star, and the Ramsey value is the
//! least order admitting none. The search assigns colors edge by edge in
//! lexicographic pair order, pruning a branch the moment some vertex would
//! reach `Σ_{i∈A} d_i ≥ m_A` for a subset `A` containing the new color —
//! color degrees only grow, so such a branch can never recover. Colors are
//! tried in ascending order, which makes the first coloring found the
//! lexicographically least avoidance coloring.
//!
//! Determinism contract: for a fixed configuration, `value`,
//! `nodes_explored`, and the witness are identical across runs and across
//! parallel schedules whenever the search completes within its node budget.
//! The parallel driver enumerates the subtrees under a fixed assignment
//! prefix, searches them independently, and accepts the first decisive
//! subtree in prefix order, so it reports exactly what the sequential driver
//! would. Runs that hit the budget report `budget_exhausted`; near the exact
//! budget boundary the parallel driver may explore slightly more than the
//! sequential one before giving up.

use std::sync::atomic::{AtomicU64, Ordering};

use serde::de::Error as _;
use serde::{Deserialize, Serialize};

use crate::color_set::subsets_colex;
use crate::error::{Error, Result};
use crate::family::StarFamily;
use crate::formulas::ramsey_uniform;
use crate::graph::ColoredGraph;

/// Limits and hints for one oracle run.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Maximum number of search-tree nodes (accepted edge-color assignments).
    pub node_budget: u64,
    /// Fix the first edge's color and admit new colors in ascending order.
    /// Sound only for uniform families, and rejected otherwise.
    pub break_color_symmetry: bool,
    /// How many top tree levels the parallel driver may distribute;
    /// `0` forces the sequential driver.
    pub parallel_width: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: 1_000_000_000,
            break_color_symmetry: false,
            parallel_width: 3,
        }
    }
}

/// Outcome of a whole-value oracle run.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OracleResult {
    pub value: OracleValue,
    pub nodes_explored: u64,
    pub witness_coloring: Option<ColoredGraph>,
}

/// Either the computed value or a budget failure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleValue {
    Value(u64),
    BudgetExhausted,
}

impl Serialize for OracleValue {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            OracleValue::Value(v) => ser.serialize_u64(*v),
            OracleValue::BudgetExhausted => ser.serialize_str("budget_exhausted"),
        }
    }
}

impl<'de> Deserialize<'de> for OracleValue {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = serde_json::Value::deserialize(de)?;
        match raw {
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(OracleValue::Value)
                .ok_or_else(|| D::Error::custom("value out of range")),
            serde_json::Value::String(s) if s == "budget_exhausted" => {
                Ok(OracleValue::BudgetExhausted)
            }
            _ => Err(D::Error::custom("expected integer or \"budget_exhausted\"")),
        }
    }
}

/// A single-host search result: the coloring found (if any) and the number of
/// nodes it took to decide.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub coloring: Option<ColoredGraph>,
    pub nodes: u64,
}

/// Searches for an avoidance coloring of `K_n` minus the `missing` pairs
/// (which must all touch one vertex, or be empty). Returns `None` when the
/// exhausted search proves none exists; budget failures are an error,
/// distinct from nonexistence.
pub fn exists_avoidance_coloring(
    n: usize,
    f: &StarFamily,
    missing: &[(usize, usize)],
    cfg: &SearchConfig,
) -> Result<Option<ColoredGraph>> {
    explore(n, f, missing, cfg).map(|o| o.coloring)
}

/// [`exists_avoidance_coloring`] plus the deterministic node count.
pub fn explore(
    n: usize,
    f: &StarFamily,
    missing: &[(usize, usize)],
    cfg: &SearchConfig,
) -> Result<SearchOutcome> {
    if n < 1 {
        return Err(Error::InvalidInput("host needs at least one vertex".into()));
    }
    if cfg.node_budget < 1 {
        return Err(Error::InvalidInput("node budget must be positive".into()));
    }
    if cfg.break_color_symmetry && f.is_uniform().is_none() {
        return Err(Error::InvalidInput(
            "color symmetry breaking is sound only for uniform families".into(),
        ));
    }
    let problem = Problem::new(n, f, missing, cfg)?;
    let budget = Budget::new(cfg.node_budget);

    #[cfg(feature = "parallel")]
    {
        if cfg.parallel_width > 0 && problem.edges.len() > cfg.parallel_width {
            return run_parallel(&problem, cfg.parallel_width, &budget);
        }
    }
    run_sequential(&problem, &budget)
}

/// Smallest `n` such that no avoidance coloring of `K_n` exists, found by
/// ascending search from `n = 1`. The witness is the last avoidance coloring
/// seen, i.e. one at order `value − 1`.
pub fn brute_force_ramsey(f: &StarFamily, cfg: &SearchConfig) -> Result<OracleResult> {
    let mut nodes: u64 = 0;
    let mut witness: Option<ColoredGraph> = None;
    for n in 1.. {
        let remaining = SearchConfig {
            node_budget: cfg.node_budget.saturating_sub(nodes).max(1),
            ..cfg.clone()
        };
        match explore(n, f, &[], &remaining) {
            Ok(outcome) => {
                nodes += outcome.nodes;
                match outcome.coloring {
                    Some(coloring) => witness = Some(coloring),
                    None => {
                        return Ok(OracleResult {
                            value: OracleValue::Value(n as u64),
                            nodes_explored: nodes,
                            witness_coloring: witness,
                        })
                    }
                }
            }
            Err(Error::BudgetExhausted(spent)) => {
                return Ok(OracleResult {
                    value: OracleValue::BudgetExhausted,
                    nodes_explored: nodes + spent,
                    witness_coloring: witness,
                })
            }
            Err(other) => return Err(other),
        }
    }
    unreachable!("the ascending search terminates: large hosts force a star")
}

/// Smallest `k ≥ 1` such that `K_N` minus a star of size `N − 1 − k` at the
/// last vertex admits no avoidance coloring, where `N` is the uniform Ramsey
/// value. The witness is an avoidance coloring of the last host that had one.
pub fn brute_force_star_critical(
    m: u64,
    s: usize,
    t: usize,
    cfg: &SearchConfig,
) -> Result<OracleResult> {
    let r = ramsey_uniform(m, s, t)?.r;
    let n = usize::try_from(r)
        .map_err(|_| Error::InvalidInput("Ramsey value too large for the oracle".into()))?;
    let f = StarFamily::uniform(m, s, t)?;
    let mut nodes: u64 = 0;
    let mut witness: Option<ColoredGraph> = None;
    for k in 0..n {
        // Keep spokes to vertices 0..k, remove the rest.
        let missing: Vec<(usize, usize)> = (k..n - 1).map(|u| (u, n - 1)).collect();
        let remaining = SearchConfig {
            node_budget: cfg.node_budget.saturating_sub(nodes).max(1),
            ..cfg.clone()
        };
        match explore(n, &f, &missing, &remaining) {
            Ok(outcome) => {
                nodes += outcome.nodes;
                match outcome.coloring {
                    Some(coloring) => witness = Some(coloring),
                    None if k == 0 => {
                        return Err(Error::InternalInconsistency(
                            "no avoidance coloring below the Ramsey order".into(),
                        ))
                    }
                    None => {
                        return Ok(OracleResult {
                            value: OracleValue::Value(k as u64),
                            nodes_explored: nodes,
                            witness_coloring: witness,
                        })
                    }
                }
            }
            Err(Error::BudgetExhausted(spent)) => {
                return Ok(OracleResult {
                    value: OracleValue::BudgetExhausted,
                    nodes_explored: nodes + spent,
                    witness_coloring: witness,
                })
            }
            Err(other) => return Err(other),
        }
    }
    // k = n−1 removes nothing, i.e. the full K_N, which has no avoidance
    // coloring by the definition of N.
    Err(Error::InternalInconsistency(
        "full host still admitted an avoidance coloring".into(),
    ))
}

// ---------------------------------------------------------------------------
// Search internals
// ---------------------------------------------------------------------------

struct Problem {
    n: usize,
    t: usize,
    center: Option<usize>,
    missing: Vec<(usize, usize)>,
    /// Present host edges in lexicographic pair order.
    edges: Vec<(usize, usize)>,
    /// For each color, the subsets containing it with their targets.
    per_color: Vec<Vec<(u64, u64)>>,
    symmetry: bool,
}

impl Problem {
    fn new(
        n: usize,
        f: &StarFamily,
        missing: &[(usize, usize)],
        cfg: &SearchConfig,
    ) -> Result<Problem> {
        let mut missing_sorted: Vec<(usize, usize)> = missing.to_vec();
        for &(u, v) in &missing_sorted {
            if u >= v || v >= n {
                return Err(Error::InvalidInput(format!(
                    "missing pair ({u},{v}) is not a valid pair of K_{n}"
                )));
            }
        }
        missing_sorted.sort_unstable();
        missing_sorted.dedup();
        let center = match missing_sorted.as_slice() {
            [] => None,
            pairs => {
                let (a, b) = pairs[0];
                let candidate = if pairs.iter().all(|&(u, v)| u == b || v == b) {
                    b
                } else if pairs.iter().all(|&(u, v)| u == a || v == a) {
                    a
                } else {
                    return Err(Error::InvalidInput(
                        "missing pairs must all touch one vertex".into(),
                    ));
                };
                Some(candidate)
            }
        };
        let is_missing: std::collections::HashSet<(usize, usize)> =
            missing_sorted.iter().copied().collect();
        let mut edges = Vec::with_capacity(n * (n - 1) / 2 - missing_sorted.len());
        for u in 0..n {
            for v in (u + 1)..n {
                if !is_missing.contains(&(u, v)) {
                    edges.push((u, v));
                }
            }
        }
        let t = f.color_count();
        let mut per_color = vec![Vec::new(); t];
        for set in subsets_colex(t, f.subset_size()) {
            let m = f.value(set);
            for c in set.iter() {
                per_color[c - 1].push((set.mask(), m));
            }
        }
        Ok(Problem {
            n,
            t,
            center,
            missing: missing_sorted,
            edges,
            per_color,
            symmetry: cfg.break_color_symmetry,
        })
    }

    /// Would coloring one more edge at a vertex with `degrees` (its current
    /// color counts) in color `c` complete a star there?
    fn forces_star(&self, degrees: &[u64], c: usize) -> bool {
        for &(mask, m) in &self.per_color[c - 1] {
            let mut sum: u64 = 1; // the new edge itself
            let mut bits = mask;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                sum += degrees[i];
            }
            if sum >= m {
                return true;
            }
        }
        false
    }

    fn coloring_to_graph(&self, colors: &[u8]) -> Result<ColoredGraph> {
        let edges: Vec<(usize, usize, u8)> = self
            .edges
            .iter()
            .zip(colors)
            .map(|(&(u, v), &c)| (u, v, c))
            .collect();
        ColoredGraph::from_parts(self.n, self.t, self.center, &self.missing, &edges)
    }
}

struct Budget {
    committed: AtomicU64,
    limit: u64,
}

impl Budget {
    fn new(limit: u64) -> Budget {
        Budget {
            committed: AtomicU64::new(0),
            limit,
        }
    }

    fn session(&self) -> BudgetSession<'_> {
        BudgetSession {
            budget: self,
            accepted: 0,
            flushed: 0,
        }
    }

    fn spent(&self) -> u64 {
        self.committed.load(Ordering::Relaxed)
    }
}

/// Workers publish their node counts in batches so the hot path stays off the
/// shared cache line.
const FLUSH_INTERVAL: u64 = 256;

/// One worker's view of the shared budget. `accepted` is the worker's exact
/// node count; only part of it has been flushed into the shared counter.
struct BudgetSession<'a> {
    budget: &'a Budget,
    accepted: u64,
    flushed: u64,
}

impl BudgetSession<'_> {
    /// Registers one accepted assignment; `false` means the budget is gone.
    fn tick(&mut self) -> bool {
        self.accepted += 1;
        if self.accepted - self.flushed >= FLUSH_INTERVAL {
            self.flush();
        }
        let unflushed = self.accepted - self.flushed;
        self.budget.committed.load(Ordering::Relaxed) + unflushed <= self.budget.limit
    }

    fn flush(&mut self) {
        let delta = self.accepted - self.flushed;
        if delta > 0 {
            self.budget.committed.fetch_add(delta, Ordering::Relaxed);
            self.flushed = self.accepted;
        }
    }

    fn accepted(&self) -> u64 {
        self.accepted
    }
}

impl Drop for BudgetSession<'_> {
    fn drop(&mut self) {
        self.flush();
    }
}

#[derive(Clone)]
struct State {
    /// Flattened `n × t` color degree table.
    degrees: Vec<u64>,
    colors: Vec<u8>,
    max_color_used: u8,
}

impl State {
    fn fresh(p: &Problem) -> State {
        State {
            degrees: vec![0; p.n * p.t],
            colors: Vec::with_capacity(p.edges.len()),
            max_color_used: 0,
        }
    }

    fn degrees_of(&self, p: &Problem, v: usize) -> &[u64] {
        &self.degrees[v * p.t..(v + 1) * p.t]
    }

    fn apply(&mut self, p: &Problem, edge_idx: usize, c: u8) {
        let (u, v) = p.edges[edge_idx];
        self.degrees[u * p.t + c as usize - 1] += 1;
        self.degrees[v * p.t + c as usize - 1] += 1;
        self.colors.push(c);
        self.max_color_used = self.max_color_used.max(c);
    }

    fn undo(&mut self, p: &Problem, edge_idx: usize, prev_max: u8) {
        let c = self.colors.pop().expect("assignment to undo");
        let (u, v) = p.edges[edge_idx];
        self.degrees[u * p.t + c as usize - 1] -= 1;
        self.degrees[v * p.t + c as usize - 1] -= 1;
        self.max_color_used = prev_max;
    }

    fn allowed_colors(&self, p: &Problem) -> u8 {
        if p.symmetry {
            (self.max_color_used + 1).min(p.t as u8)
        } else {
            p.t as u8
        }
    }
}

enum Dfs {
    Found,
    Exhausted,
    Done,
}

/// Depth-first search from `edge_idx` with the state already reflecting all
/// earlier assignments. On `Found`, `state.colors` holds the witness.
fn dfs(p: &Problem, state: &mut State, edge_idx: usize, session: &mut BudgetSession) -> Dfs {
    if edge_idx == p.edges.len() {
        return Dfs::Found;
    }
    let (u, v) = p.edges[edge_idx];
    let limit = state.allowed_colors(p);
    for c in 1..=limit {
        if p.forces_star(state.degrees_of(p, u), c as usize)
            || p.forces_star(state.degrees_of(p, v), c as usize)
        {
            continue;
        }
        if !session.tick() {
            return Dfs::Exhausted;
        }
        let prev_max = state.max_color_used;
        state.apply(p, edge_idx, c);
        match dfs(p, state, edge_idx + 1, session) {
            Dfs::Done => state.undo(p, edge_idx, prev_max),
            decisive => return decisive,
        }
    }
    Dfs::Done
}

fn run_sequential(p: &Problem, budget: &Budget) -> Result<SearchOutcome> {
    let mut state = State::fresh(p);
    let mut session = budget.session();
    let result = dfs(p, &mut state, 0, &mut session);
    let nodes = session.accepted();
    drop(session);
    match result {
        Dfs::Found => Ok(SearchOutcome {
            coloring: Some(p.coloring_to_graph(&state.colors)?),
            nodes,
        }),
        Dfs::Exhausted => Err(Error::BudgetExhausted(budget.spent())),
        Dfs::Done => Ok(SearchOutcome {
            coloring: None,
            nodes,
        }),
    }
}

#[cfg(feature = "parallel")]
struct Prefix {
    colors: Vec<u8>,
    max_used: u8,
    /// Shallow-level assignments accepted since the previous prefix was
    /// emitted (including dead ends). Summing deltas up to a prefix
    /// reproduces the sequential driver's shallow node count at that point.
    delta_nodes: u64,
}

#[cfg(feature = "parallel")]
fn run_parallel(p: &Problem, width: usize, budget: &Budget) -> Result<SearchOutcome> {
    use rayon::prelude::*;
    use std::sync::OnceLock;

    let depth = width.min(p.edges.len());
    // Enumerate the assignment prefixes of length `depth` that survive
    // pruning, in lexicographic order.
    let mut prefixes: Vec<Prefix> = Vec::new();
    let mut state = State::fresh(p);
    let mut pending = 0u64;
    let mut enum_session = budget.session();
    let complete = enumerate_prefixes(
        p,
        &mut state,
        depth,
        &mut enum_session,
        &mut pending,
        &mut prefixes,
    );
    drop(enum_session);
    if !complete {
        return Err(Error::BudgetExhausted(budget.spent()));
    }
    let trailing_nodes = pending; // shallow dead ends after the last prefix

    struct TaskOutcome {
        witness: Option<Vec<u8>>,
        exhausted: bool,
        nodes: u64,
    }

    let slots: Vec<OnceLock<TaskOutcome>> = (0..prefixes.len()).map(|_| OnceLock::new()).collect();
    // `find_first` returns the leftmost decisive subtree and is free to skip
    // subtrees to its right; everything to the left of the winner has run to
    // completion, which is exactly what the deterministic merge below reads.
    let decisive = prefixes
        .par_iter()
        .enumerate()
        .map(|(idx, prefix)| {
            let mut st = State::fresh(p);
            for (i, &c) in prefix.colors.iter().enumerate() {
                st.apply(p, i, c);
            }
            st.max_color_used = prefix.max_used;
            let mut session = budget.session();
            let result = dfs(p, &mut st, depth, &mut session);
            let outcome = TaskOutcome {
                witness: matches!(result, Dfs::Found).then(|| st.colors.clone()),
                exhausted: matches!(result, Dfs::Exhausted),
                nodes: session.accepted(),
            };
            let decisive = outcome.witness.is_some() || outcome.exhausted;
            slots[idx].set(outcome).ok().expect("each slot set once");
            (idx, decisive)
        })
        .find_first(|&(_, decisive)| decisive);

    let winner = decisive.map(|(idx, _)| idx);
    let scanned = winner.map_or(prefixes.len(), |idx| idx + 1);
    let mut nodes: u64 = prefixes[..scanned].iter().map(|pfx| pfx.delta_nodes).sum();
    for slot in slots.iter().take(scanned) {
        nodes += slot
            .get()
            .expect("tasks left of the winner completed")
            .nodes;
    }
    match winner {
        Some(idx) => {
            let outcome = slots[idx].get().expect("winner completed");
            if outcome.exhausted {
                Err(Error::BudgetExhausted(budget.spent()))
            } else {
                let colors = outcome.witness.as_ref().expect("decisive means witness");
                Ok(SearchOutcome {
                    coloring: Some(p.coloring_to_graph(colors)?),
                    nodes,
                })
            }
        }
        None => Ok(SearchOutcome {
            coloring: None,
            nodes: nodes + trailing_nodes,
        }),
    }
}

/// Collects all pruned-surviving assignments of the first `depth` edges, in
/// lexicographic order. Returns `false` on budget exhaustion. `pending`
/// accumulates accepted shallow assignments and is drained into each emitted
/// prefix's delta.
#[cfg(feature = "parallel")]
fn enumerate_prefixes(
    p: &Problem,
    state: &mut State,
    depth: usize,
    session: &mut BudgetSession,
    pending: &mut u64,
    out: &mut Vec<Prefix>,
) -> bool {
    if state.colors.len() == depth {
        out.push(Prefix {
            colors: state.colors.clone(),
            max_used: state.max_color_used,
            delta_nodes: std::mem::take(pending),
        });
        return true;
    }
    let edge_idx = state.colors.len();
    let (u, v) = p.edges[edge_idx];
    let limit = state.allowed_colors(p);
    for c in 1..=limit {
        if p.forces_star(state.degrees_of(p, u), c as usize)
            || p.forces_star(state.degrees_of(p, v), c as usize)
        {
            continue;
        }
        if !session.tick() {
            return false;
        }
        *pending += 1;
        let prev_max = state.max_color_used;
        state.apply(p, edge_idx, c);
        let ok = enumerate_prefixes(p, state, depth, session, pending, out);
        state.undo(p, edge_idx, prev_max);
        if !ok {
            return false;
        }
    }
    true
}
