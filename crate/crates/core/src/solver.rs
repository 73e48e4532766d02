//! Exact dominator chromatic numbers.
//!
//! [`chi_d`] tries `k = chi(underlying)` upward and, for each `k`, runs a
//! restricted-growth backtracking search over colorings of vertices
//! `0, 1, ..., n-1` in order. A partial coloring is abandoned as soon as some
//! required vertex can no longer end up dominating a class: every class it
//! could still be contained in already has a member outside its
//! out-neighborhood, and no fresh class can be opened inside it.
//!
//! [`sweep`] solves every orientation of a base graph in parallel and merges
//! per-worker tallies with an order-independent reduction, so reports do not
//! depend on scheduling.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{verify, Coloring, DominationMode};
use crate::error::SolveError;
use crate::graph::{orient_index, BaseGraph, Digraph, OrientationCode};

/// Vertex limit for the bitmask search.
pub const MAX_SEARCH_VERTICES: usize = 64;
/// Vertex limit for the enumeration oracle.
pub const MAX_ORACLE_VERTICES: usize = 10;
/// Default edge limit for orientation sweeps.
pub const DEFAULT_MAX_SWEEP_EDGES: usize = 24;
/// Environment variable overriding [`DEFAULT_MAX_SWEEP_EDGES`].
pub const MAX_SWEEP_EDGES_ENV: &str = "DOMCHROM_MAX_SWEEP_EDGES";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOutcome {
    /// Minimum number of classes, `None` when no dominator coloring exists.
    pub value: Option<usize>,
    pub witness: Option<Coloring>,
    pub nodes_explored: u64,
    pub mode: DominationMode,
}

impl SolveOutcome {
    pub fn is_feasible(&self) -> bool {
        self.value.is_some()
    }
}

fn adjacency_masks(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for (u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn check_size(n: usize) -> Result<(), SolveError> {
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > MAX_SEARCH_VERTICES {
        return Err(SolveError::TooManyVertices {
            max: MAX_SEARCH_VERTICES,
            got: n,
        });
    }
    Ok(())
}

/// Chromatic number of an undirected graph.
pub fn chi(base: &BaseGraph) -> Result<usize, SolveError> {
    check_size(base.n())?;
    let adj = adjacency_masks(base.n(), base.edges().iter().copied());
    Ok(chromatic_number(&adj))
}

fn chromatic_number(adj: &[u64]) -> usize {
    let n = adj.len();
    let mut class_mask = vec![0u64; n];
    (1..=n)
        .find(|&k| proper_colorable(adj, k, 0, 0, &mut class_mask))
        .unwrap_or(n)
}

fn proper_colorable(adj: &[u64], k: usize, v: usize, used: usize, class_mask: &mut [u64]) -> bool {
    if v == adj.len() {
        return true;
    }
    for c in 0..(used + 1).min(k) {
        if class_mask[c] & adj[v] != 0 {
            continue;
        }
        class_mask[c] |= 1 << v;
        let ok = proper_colorable(adj, k, v + 1, used.max(c + 1), class_mask);
        class_mask[c] &= !(1 << v);
        if ok {
            return true;
        }
    }
    false
}

struct DominatorSearch {
    n: usize,
    k: usize,
    adj: Vec<u64>,
    out: Vec<u64>,
    required: Vec<usize>,
    colors: Vec<usize>,
    class_mask: Vec<u64>,
    used: usize,
    nodes: u64,
}

impl DominatorSearch {
    fn new(d: &Digraph, mode: DominationMode, k: usize) -> Self {
        let n = d.n();
        let mut out = vec![0u64; n];
        for &(u, v) in d.arcs() {
            out[u] |= 1 << v;
        }
        let required = (0..n)
            .filter(|&v| mode.requires(out[v].count_ones() as usize))
            .collect();
        Self {
            n,
            k,
            adj: adjacency_masks(n, d.arcs().iter().copied()),
            out,
            required,
            colors: vec![0; n],
            class_mask: vec![0; k],
            used: 0,
            nodes: 0,
        }
    }

    /// Whether every required vertex can still dominate some class once
    /// vertices `next..` are colored.
    fn viable(&self, next: usize) -> bool {
        let uncolored = if next >= 64 { 0 } else { !0u64 << next } & full_mask(self.n);
        let can_open = self.used < self.k;
        self.required.iter().all(|&w| {
            let out = self.out[w];
            (can_open && uncolored & out != 0)
                || self.class_mask[..self.used].iter().any(|&m| m & !out == 0)
        })
    }

    fn run(&mut self, v: usize) -> bool {
        self.nodes += 1;
        if v == self.n {
            return true;
        }
        for c in 0..(self.used + 1).min(self.k) {
            if self.class_mask[c] & self.adj[v] != 0 {
                continue;
            }
            let prev_used = self.used;
            self.class_mask[c] |= 1 << v;
            self.colors[v] = c;
            self.used = self.used.max(c + 1);
            if self.viable(v + 1) && self.run(v + 1) {
                return true;
            }
            self.used = prev_used;
            self.class_mask[c] &= !(1 << v);
        }
        false
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

/// Exact dominator chromatic number of a fixed digraph.
///
/// The witness is the lexicographically first canonical coloring with the
/// minimum number of classes, so repeated calls agree.
pub fn chi_d(d: &Digraph, mode: DominationMode) -> Result<SolveOutcome, SolveError> {
    check_size(d.n())?;
    let n = d.n();
    let lower = chromatic_number(&adjacency_masks(n, d.arcs().iter().copied()));
    let mut nodes = 0;
    for k in lower..=n {
        let mut search = DominatorSearch::new(d, mode, k);
        let found = search.viable(0) && search.run(0);
        nodes += search.nodes;
        if found {
            let witness = Coloring::from_canonical(search.colors)
                .expect("search emits restricted-growth strings");
            debug_assert_eq!(witness.k(), k);
            return Ok(SolveOutcome {
                value: Some(k),
                witness: Some(witness),
                nodes_explored: nodes,
                mode,
            });
        }
    }
    Ok(SolveOutcome {
        value: None,
        witness: None,
        nodes_explored: nodes,
        mode,
    })
}

/// Reference solver: for `k = 1, 2, ...` enumerates every partition of the
/// vertices into exactly `k` classes and checks each with [`verify`]. No
/// pruning, no lower bound. Meant for cross-checking [`chi_d`] on small
/// inputs.
pub fn chi_d_oracle(d: &Digraph, mode: DominationMode) -> Result<SolveOutcome, SolveError> {
    let n = d.n();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if n > MAX_ORACLE_VERTICES {
        return Err(SolveError::OracleTooLarge {
            max: MAX_ORACLE_VERTICES,
            got: n,
        });
    }
    let mut checked = 0u64;
    for k in 1..=n {
        for rgs in RestrictedGrowth::new(n) {
            let blocks = rgs.iter().max().map_or(0, |&m| m + 1);
            if blocks != k {
                continue;
            }
            checked += 1;
            let c =
                Coloring::from_canonical(rgs).expect("generator emits restricted-growth strings");
            if verify(d, &c, mode).expect("sizes match").ok {
                return Ok(SolveOutcome {
                    value: Some(k),
                    witness: Some(c),
                    nodes_explored: checked,
                    mode,
                });
            }
        }
    }
    Ok(SolveOutcome {
        value: None,
        witness: None,
        nodes_explored: checked,
        mode,
    })
}

/// All restricted-growth strings of length `n` in lexicographic order.
struct RestrictedGrowth {
    current: Vec<usize>,
    started: bool,
}

impl RestrictedGrowth {
    fn new(n: usize) -> Self {
        Self {
            current: vec![0; n],
            started: false,
        }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if !self.started {
            self.started = true;
            return Some(self.current.clone());
        }
        let a = &mut self.current;
        // rightmost position that may grow: a[i] <= max(a[..i])
        for i in (1..a.len()).rev() {
            let prefix_max = a[..i].iter().copied().max().unwrap_or(0);
            if a[i] <= prefix_max {
                a[i] += 1;
                for x in &mut a[i + 1..] {
                    *x = 0;
                }
                return Some(a.clone());
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_edges: usize,
    /// Cap on the argmin / argmax code lists.
    pub code_list_cap: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            max_edges: DEFAULT_MAX_SWEEP_EDGES,
            code_list_cap: 64,
        }
    }
}

impl SweepConfig {
    /// Default config with the edge guard taken from
    /// `DOMCHROM_MAX_SWEEP_EDGES` when it holds a number.
    pub fn from_env() -> Self {
        let mut config = Self::default();
        if let Some(max) = std::env::var(MAX_SWEEP_EDGES_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            config.max_edges = max;
        }
        config
    }

    fn check(&self, base: &BaseGraph) -> Result<(), SolveError> {
        check_size(base.n())?;
        let max = self.max_edges.min(63);
        if base.edge_count() > max {
            return Err(SolveError::TooManyEdges {
                max,
                got: base.edge_count(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub base_n: usize,
    pub base_edges: Vec<(usize, usize)>,
    pub mode: DominationMode,
    /// Feasible value -> number of orientation codes.
    pub distribution: BTreeMap<usize, u64>,
    /// Orientations with no dominator coloring (strict mode only).
    pub infeasible: u64,
    pub min_value: Option<usize>,
    pub max_value: Option<usize>,
    /// Smallest code indices attaining the minimum, ascending, capped.
    pub argmin_codes: Vec<u64>,
    pub argmin_overflow: bool,
    pub argmax_codes: Vec<u64>,
    pub argmax_overflow: bool,
}

impl SweepReport {
    pub fn base(&self) -> BaseGraph {
        BaseGraph::new(self.base_n, self.base_edges.iter().copied())
            .expect("report built from a valid base")
    }

    pub fn total(&self) -> u64 {
        self.distribution.values().sum::<u64>() + self.infeasible
    }

    pub fn argmin(&self) -> Vec<OrientationCode> {
        self.codes(&self.argmin_codes)
    }

    pub fn argmax(&self) -> Vec<OrientationCode> {
        self.codes(&self.argmax_codes)
    }

    fn codes(&self, indices: &[u64]) -> Vec<OrientationCode> {
        let base = self.base();
        indices
            .iter()
            .map(|&i| OrientationCode::from_index(base.clone(), i).expect("index within 2^edges"))
            .collect()
    }

    /// `max_value - min_value` over feasible orientations.
    pub fn spread(&self) -> Option<usize> {
        Some(self.max_value? - self.min_value?)
    }
}

#[derive(Debug, Clone, Default)]
struct Tally {
    distribution: BTreeMap<usize, u64>,
    infeasible: u64,
    min: Option<(usize, Vec<u64>)>,
    max: Option<(usize, Vec<u64>)>,
}

impl Tally {
    fn record(mut self, index: u64, value: Option<usize>, cap: usize) -> Self {
        match value {
            None => self.infeasible += 1,
            Some(v) => {
                *self.distribution.entry(v).or_default() += 1;
                self.min = merge_extreme(self.min, Some((v, vec![index])), cap, |a, b| a < b);
                self.max = merge_extreme(self.max, Some((v, vec![index])), cap, |a, b| a > b);
            }
        }
        self
    }

    fn merge(mut self, other: Tally, cap: usize) -> Self {
        for (v, c) in other.distribution {
            *self.distribution.entry(v).or_default() += c;
        }
        self.infeasible += other.infeasible;
        self.min = merge_extreme(self.min, other.min, cap, |a, b| a < b);
        self.max = merge_extreme(self.max, other.max, cap, |a, b| a > b);
        self
    }
}

fn merge_extreme(
    a: Option<(usize, Vec<u64>)>,
    b: Option<(usize, Vec<u64>)>,
    cap: usize,
    better: fn(usize, usize) -> bool,
) -> Option<(usize, Vec<u64>)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some((va, ca)), Some((vb, cb))) => {
            if better(va, vb) {
                Some((va, ca))
            } else if better(vb, va) {
                Some((vb, cb))
            } else {
                let mut codes = ca;
                codes.extend(cb);
                codes.sort_unstable();
                codes.truncate(cap);
                Some((va, codes))
            }
        }
    }
}

/// Solves every orientation of `base`.
pub fn sweep(
    base: &BaseGraph,
    mode: DominationMode,
    config: &SweepConfig,
) -> Result<SweepReport, SolveError> {
    config.check(base)?;
    let total = 1u64 << base.edge_count();
    let cap = config.code_list_cap;
    let tally = (0..total)
        .into_par_iter()
        .try_fold(Tally::default, |tally, index| {
            let outcome = chi_d(&orient_index(base, index), mode)?;
            Ok::<_, SolveError>(tally.record(index, outcome.value, cap))
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b, cap)))?;
    let count_of = |v: Option<usize>| {
        v.and_then(|v| tally.distribution.get(&v).copied())
            .unwrap_or(0)
    };
    let min_value = tally.min.as_ref().map(|m| m.0);
    let max_value = tally.max.as_ref().map(|m| m.0);
    Ok(SweepReport {
        base_n: base.n(),
        base_edges: base.edges().to_vec(),
        mode,
        argmin_overflow: count_of(min_value) > cap as u64,
        argmax_overflow: count_of(max_value) > cap as u64,
        distribution: tally.distribution,
        infeasible: tally.infeasible,
        min_value,
        max_value,
        argmin_codes: tally.min.map(|m| m.1).unwrap_or_default(),
        argmax_codes: tally.max.map(|m| m.1).unwrap_or_default(),
    })
}

/// An optimal orientation with its verified witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremum {
    pub value: usize,
    pub code: OrientationCode,
    pub witness: Coloring,
}

fn extremum(
    report: &SweepReport,
    codes: &[u64],
    mode: DominationMode,
) -> Result<Extremum, SolveError> {
    let &index = codes.first().ok_or(SolveError::NoFeasibleOrientation)?;
    let code = OrientationCode::from_index(report.base(), index).expect("index within 2^edges");
    let outcome = chi_d(&code.orient(), mode)?;
    match (outcome.value, outcome.witness) {
        (Some(value), Some(witness)) => Ok(Extremum {
            value,
            code,
            witness,
        }),
        _ => Err(SolveError::NoFeasibleOrientation),
    }
}

/// Smallest dominator chromatic number over all orientations, with the
/// first orientation (by code index) attaining it.
pub fn min_over_orientations(
    base: &BaseGraph,
    mode: DominationMode,
    config: &SweepConfig,
) -> Result<Extremum, SolveError> {
    let report = sweep(base, mode, config)?;
    extremum(&report, &report.argmin_codes, mode)
}

/// Largest dominator chromatic number over all orientations.
pub fn max_over_orientations(
    base: &BaseGraph,
    mode: DominationMode,
    config: &SweepConfig,
) -> Result<Extremum, SolveError> {
    let report = sweep(base, mode, config)?;
    extremum(&report, &report.argmax_codes, mode)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_path(n: usize) -> Digraph {
        Digraph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn directed_cycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn value(d: &Digraph) -> usize {
        chi_d(d, DominationMode::SinkExempt).unwrap().value.unwrap()
    }

    #[test]
    fn restricted_growth_counts_are_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate().skip(1) {
            assert_eq!(RestrictedGrowth::new(n).count(), b, "n = {n}");
        }
        let all: Vec<_> = RestrictedGrowth::new(3).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi(&BaseGraph::path(2)).unwrap(), 2);
        assert_eq!(chi(&BaseGraph::path(7)).unwrap(), 2);
        assert_eq!(chi(&BaseGraph::cycle(7).unwrap()).unwrap(), 3);
        assert_eq!(chi(&BaseGraph::complete(4)).unwrap(), 4);
        assert_eq!(chi(&BaseGraph::path(1)).unwrap(), 1);
        assert_eq!(
            chi(&BaseGraph::new(0, []).unwrap()),
            Err(SolveError::EmptyGraph)
        );
    }

    #[test]
    fn directed_paths_need_all_colors() {
        for n in 1..=10 {
            assert_eq!(value(&directed_path(n)), n);
        }
    }

    #[test]
    fn p4_above_alternating_c4() {
        let p4 = Digraph::new(4, [(1, 0), (1, 2), (3, 2)]).unwrap();
        let c4 = Digraph::new(4, [(1, 0), (1, 2), (3, 2), (3, 0)]).unwrap();
        assert_eq!(value(&p4), 3);
        assert_eq!(value(&c4), 2);
    }

    #[test]
    fn oracle_examples() {
        let single = Digraph::new(1, []).unwrap();
        let out = chi_d_oracle(&single, DominationMode::SinkExempt).unwrap();
        assert_eq!(out.value, Some(1));
        assert_eq!(
            chi_d_oracle(&directed_cycle(5), DominationMode::SinkExempt)
                .unwrap()
                .value,
            Some(5)
        );
        assert_eq!(
            chi_d_oracle(&directed_path(11), DominationMode::SinkExempt),
            Err(SolveError::OracleTooLarge { max: 10, got: 11 })
        );
    }

    #[test]
    fn strict_mode_with_sink_is_infeasible() {
        let out = chi_d(&directed_path(4), DominationMode::Strict).unwrap();
        assert_eq!(out.value, None);
        assert!(out.witness.is_none());
        // the directed cycle has no sink and is feasible
        assert_eq!(
            chi_d(&directed_cycle(5), DominationMode::Strict)
                .unwrap()
                .value,
            Some(5)
        );
        assert_eq!(
            chi_d_oracle(&directed_path(4), DominationMode::Strict)
                .unwrap()
                .value,
            None
        );
    }

    #[test]
    fn witness_is_deterministic() {
        let d = Digraph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 0)]).unwrap();
        let a = chi_d(&d, DominationMode::SinkExempt).unwrap();
        let b = chi_d(&d, DominationMode::SinkExempt).unwrap();
        assert_eq!(a, b);
        assert!(
            verify(&d, a.witness.as_ref().unwrap(), DominationMode::SinkExempt)
                .unwrap()
                .ok
        );
    }

    #[test]
    fn sweep_small_path() {
        let report = sweep(
            &BaseGraph::path(4),
            DominationMode::SinkExempt,
            &SweepConfig::default(),
        )
        .unwrap();
        assert_eq!(report.total(), 8);
        assert_eq!(report.min_value, Some(3));
        assert_eq!(report.max_value, Some(4));
        for code in report.argmin() {
            assert_eq!(value(&code.orient()), 3);
        }
        for code in report.argmax() {
            assert_eq!(value(&code.orient()), 4);
        }
    }

    #[test]
    fn sweep_guard() {
        let config = SweepConfig {
            max_edges: 5,
            ..SweepConfig::default()
        };
        assert_eq!(
            sweep(&BaseGraph::path(7), DominationMode::SinkExempt, &config),
            Err(SolveError::TooManyEdges { max: 5, got: 6 })
        );
    }

    #[test]
    fn code_lists_are_capped() {
        let config = SweepConfig {
            code_list_cap: 2,
            ..SweepConfig::default()
        };
        let report = sweep(&BaseGraph::complete(4), DominationMode::SinkExempt, &config).unwrap();
        assert_eq!(report.min_value, Some(4));
        assert_eq!(report.max_value, Some(4));
        assert_eq!(report.argmin_codes, vec![0, 1]);
        assert!(report.argmin_overflow);
    }

    #[test]
    fn extremes_over_cycle_orientations() {
        let base = BaseGraph::cycle(4).unwrap();
        let min = min_over_orientations(&base, DominationMode::SinkExempt, &SweepConfig::default())
            .unwrap();
        assert_eq!(min.value, 2);
        assert!(
            verify(&min.code.orient(), &min.witness, DominationMode::SinkExempt)
                .unwrap()
                .ok
        );
        let max = max_over_orientations(&base, DominationMode::SinkExempt, &SweepConfig::default())
            .unwrap();
        assert_eq!(max.value, 4);
        assert_eq!(
            min_over_orientations(&base, DominationMode::Strict, &SweepConfig::default())
                .unwrap()
                .value,
            4
        );
        assert_eq!(
            min_over_orientations(
                &BaseGraph::path(3),
                DominationMode::Strict,
                &SweepConfig::default()
            ),
            Err(SolveError::NoFeasibleOrientation)
        );
    }

    #[test]
    fn vertex_limit() {
        let big = directed_path(65);
        assert_eq!(
            chi_d(&big, DominationMode::SinkExempt),
            Err(SolveError::TooManyVertices { max: 64, got: 65 })
        );
    }
}
