//! Graph families, closed-form values, and explicit optimal colorings.
//!
//! The path and cycle constructions below are stated with 1-based vertex
//! labels `v1..vn` internally and emitted with vertex `vi` as index `i - 1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::{verify, Coloring, DominationMode};
use crate::error::FamilyError;
use crate::graph::{BaseGraph, Digraph, OrientationCode};
use crate::solver::chi_d;

/// How a tournament picks the direction of each pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TournamentChooser {
    /// `u -> v` whenever `u < v`.
    Transitive,
    /// Each pair oriented by a ChaCha8 stream seeded with the value.
    Seeded(u64),
    /// Orientation code index over [`BaseGraph::complete`]`(n)`.
    Index(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Star {
        leaves: usize,
        in_arcs: usize,
    },
    Complete {
        n: usize,
        chooser: TournamentChooser,
    },
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    TildeCycle {
        n: usize,
    },
    Fig3,
    Fig4,
}

impl FamilySpec {
    pub const KINDS: [&'static str; 8] = [
        "path",
        "cycle",
        "star",
        "complete",
        "complete-bipartite",
        "tilde-cycle",
        "fig3",
        "fig4",
    ];

    /// Builds a spec from a kind name and its integer parameters:
    /// `path n`, `cycle n`, `star leaves [in_arcs]`, `complete n [seed]`,
    /// `complete-bipartite m n`, `tilde-cycle n`, `fig3`, `fig4`.
    pub fn from_args(kind: &str, params: &[u64]) -> Result<FamilySpec, FamilyError> {
        let bad = |kind: &'static str, reason: &str| FamilyError::InvalidParams {
            kind,
            reason: reason.to_string(),
        };
        let arity = |kind: &'static str, lo: usize, hi: usize| {
            if params.len() < lo || params.len() > hi {
                Err(bad(
                    kind,
                    &format!("expected {lo}..={hi} parameters, got {}", params.len()),
                ))
            } else {
                Ok(())
            }
        };
        let p = |i: usize| params[i] as usize;
        let spec = match kind {
            "path" => {
                arity("path", 1, 1)?;
                FamilySpec::Path { n: p(0) }
            }
            "cycle" => {
                arity("cycle", 1, 1)?;
                FamilySpec::Cycle { n: p(0) }
            }
            "star" => {
                arity("star", 1, 2)?;
                FamilySpec::Star {
                    leaves: p(0),
                    in_arcs: params.get(1).map_or(0, |&x| x as usize),
                }
            }
            "complete" => {
                arity("complete", 1, 2)?;
                let chooser = params.get(1).map_or(TournamentChooser::Transitive, |&s| {
                    TournamentChooser::Seeded(s)
                });
                FamilySpec::Complete { n: p(0), chooser }
            }
            "complete-bipartite" => {
                arity("complete-bipartite", 2, 2)?;
                FamilySpec::CompleteBipartite { m: p(0), n: p(1) }
            }
            "tilde-cycle" => {
                arity("tilde-cycle", 1, 1)?;
                FamilySpec::TildeCycle { n: p(0) }
            }
            "fig3" => {
                arity("fig3", 0, 0)?;
                FamilySpec::Fig3
            }
            "fig4" => {
                arity("fig4", 0, 0)?;
                FamilySpec::Fig4
            }
            _ => return Err(bad("family", &format!("unknown kind {kind:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "complete-bipartite",
            FamilySpec::TildeCycle { .. } => "tilde-cycle",
            FamilySpec::Fig3 => "fig3",
            FamilySpec::Fig4 => "fig4",
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |kind, reason: &str| {
            Err(FamilyError::InvalidParams {
                kind,
                reason: reason.to_string(),
            })
        };
        match *self {
            FamilySpec::Path { n } if n < 1 => bad("path", "n must be at least 1"),
            FamilySpec::Cycle { n } if n < 3 => bad("cycle", "n must be at least 3"),
            FamilySpec::TildeCycle { n } if n < 3 => bad("tilde-cycle", "n must be at least 3"),
            FamilySpec::Star { leaves, in_arcs } if leaves < 1 || in_arcs > leaves => {
                bad("star", "need leaves >= 1 and in_arcs <= leaves")
            }
            FamilySpec::Complete { n, .. } if n < 1 => bad("complete", "n must be at least 1"),
            FamilySpec::CompleteBipartite { m, n } if m < 1 || n < 1 => {
                bad("complete-bipartite", "both sides need at least one vertex")
            }
            _ => Ok(()),
        }
    }
}

/// An explicit coloring of an explicit digraph, checked at construction to
/// be a sink-exempt dominator coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructiveWitness {
    digraph: Digraph,
    coloring: Coloring,
}

impl ConstructiveWitness {
    pub fn new(digraph: Digraph, coloring: Coloring) -> Result<Self, FamilyError> {
        let verdict = verify(&digraph, &coloring, DominationMode::SinkExempt).map_err(|e| {
            FamilyError::InvalidParams {
                kind: "witness",
                reason: e.to_string(),
            }
        })?;
        if !verdict.ok {
            return Err(FamilyError::InvalidParams {
                kind: "witness",
                reason: format!("coloring fails verification: {:?}", verdict.violations),
            });
        }
        Ok(Self { digraph, coloring })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn claimed_value(&self) -> usize {
        self.coloring.k()
    }
}

pub fn base_graph(spec: &FamilySpec) -> Result<BaseGraph, FamilyError> {
    spec.validate()?;
    Ok(match *spec {
        FamilySpec::Path { n } => BaseGraph::path(n),
        FamilySpec::Cycle { n } => BaseGraph::cycle(n)?,
        FamilySpec::Star { leaves, .. } => BaseGraph::star(leaves),
        FamilySpec::Complete { n, .. } => BaseGraph::complete(n),
        FamilySpec::CompleteBipartite { m, n } => BaseGraph::complete_bipartite(m, n),
        FamilySpec::TildeCycle { n } => {
            let cycle = BaseGraph::cycle(n)?;
            let spokes = (0..n).map(|i| (i, n));
            BaseGraph::new(n + 1, cycle.edges().iter().copied().chain(spokes))?
        }
        FamilySpec::Fig3 => fig3_digraph().underlying(),
        FamilySpec::Fig4 => fig4_digraph().underlying(),
    })
}

/// The digraph a spec names. Paths and cycles give the orientation used by
/// [`path_optimal`] / [`cycle_optimal`].
pub fn digraph(spec: &FamilySpec) -> Result<Digraph, FamilyError> {
    spec.validate()?;
    Ok(match *spec {
        FamilySpec::Path { n } => path_optimal(n)?.digraph,
        FamilySpec::Cycle { n } => cycle_optimal(n)?.digraph,
        FamilySpec::Star { leaves, in_arcs } => star_oriented(leaves, in_arcs)?,
        FamilySpec::Complete { n, chooser } => tournament(n, chooser)?,
        FamilySpec::CompleteBipartite { m, n } => one_way_complete_bipartite(m, n)?,
        FamilySpec::TildeCycle { n } => tilde_cycle(n)?,
        FamilySpec::Fig3 => fig3_digraph(),
        FamilySpec::Fig4 => fig4_digraph(),
    })
}

/// An optimal dominator coloring of [`digraph`]`(spec)`. Fixed example
/// digraphs fall back to the exact solver.
pub fn witness(spec: &FamilySpec) -> Result<ConstructiveWitness, FamilyError> {
    spec.validate()?;
    match *spec {
        FamilySpec::Path { n } => path_optimal(n),
        FamilySpec::Cycle { n } => cycle_optimal(n),
        FamilySpec::Star { leaves, in_arcs } => {
            let d = star_oriented(leaves, in_arcs)?;
            // hub alone; in-leaves and out-leaves each form a class
            let raw: Vec<usize> = (0..=leaves)
                .map(|v| {
                    if v == 0 {
                        0
                    } else if v <= in_arcs {
                        1
                    } else {
                        2
                    }
                })
                .collect();
            ConstructiveWitness::new(d, Coloring::canonicalize(&raw))
        }
        FamilySpec::Complete { n, chooser } => {
            let d = tournament(n, chooser)?;
            ConstructiveWitness::new(d, Coloring::canonicalize(&(0..n).collect::<Vec<_>>()))
        }
        FamilySpec::CompleteBipartite { m, n } => {
            let d = one_way_complete_bipartite(m, n)?;
            let raw: Vec<usize> = (0..m + n).map(|v| usize::from(v >= m)).collect();
            ConstructiveWitness::new(d, Coloring::canonicalize(&raw))
        }
        FamilySpec::TildeCycle { n } => {
            let d = tilde_cycle(n)?;
            // proper coloring of the rim with 2 or 3 colors, hub on its own
            let mut raw: Vec<usize> = (0..n).map(|i| i % 2).collect();
            if n % 2 == 1 {
                raw[n - 1] = 2;
            }
            raw.push(3);
            ConstructiveWitness::new(d, Coloring::canonicalize(&raw))
        }
        FamilySpec::Fig3 | FamilySpec::Fig4 => {
            let d = if *spec == FamilySpec::Fig3 {
                fig3_digraph()
            } else {
                fig4_digraph()
            };
            let outcome = chi_d(&d, DominationMode::SinkExempt)?;
            let c = outcome
                .witness
                .expect("sink-exempt mode is always feasible");
            ConstructiveWitness::new(d, c)
        }
    }
}

/// Consistently oriented path `0 -> 1 -> ... -> n-1`.
pub fn directed_path(n: usize) -> Result<Digraph, FamilyError> {
    FamilySpec::Path { n }.validate()?;
    Ok(Digraph::new(n, (1..n).map(|i| (i - 1, i)))?)
}

/// Consistently oriented cycle `0 -> 1 -> ... -> n-1 -> 0`.
pub fn directed_cycle(n: usize) -> Result<Digraph, FamilyError> {
    FamilySpec::Cycle { n }.validate()?;
    Ok(Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

/// Minimum dominator chromatic number over all orientations of the path on
/// `n` vertices.
pub fn chi_d_path_formula(n: usize) -> Result<usize, FamilyError> {
    let (k, r) = (n / 4, n % 4);
    Ok(match n {
        0 => {
            return Err(FamilyError::InvalidParams {
                kind: "path",
                reason: "n must be at least 1".into(),
            })
        }
        1 => 1,
        2 | 3 => 2,
        6 => 3,
        _ if r <= 1 => k + 2,
        _ => k + 3,
    })
}

/// Minimum dominator chromatic number over all orientations of the cycle on
/// `n` vertices: `ceil(n / 4) + 2` apart from `n = 4, 5, 6`.
pub fn chi_d_cycle_formula(n: usize) -> Result<usize, FamilyError> {
    Ok(match n {
        0..=2 => {
            return Err(FamilyError::InvalidParams {
                kind: "cycle",
                reason: "n must be at least 3".into(),
            })
        }
        4 => 2,
        3 | 5 | 6 => 3,
        _ => n.div_ceil(4) + 2,
    })
}

/// Smallest and largest dominator chromatic number over orientations of the
/// star with `leaves` leaves.
pub fn chi_d_star_range(leaves: usize) -> Result<(usize, usize), FamilyError> {
    match leaves {
        0 => Err(FamilyError::InvalidParams {
            kind: "star",
            reason: "leaves must be at least 1".into(),
        }),
        1 => Ok((2, 2)),
        _ => Ok((2, 3)),
    }
}

const C1: usize = 0;
const C2: usize = 1;

/// Path or cycle under construction, 1-based.
struct Layout {
    n: usize,
    arcs: Vec<(usize, usize)>,
    labels: Vec<usize>,
    next_label: usize,
}

impl Layout {
    fn new() -> Self {
        Self {
            n: 0,
            arcs: Vec::new(),
            labels: Vec::new(),
            next_label: 2,
        }
    }

    fn fresh(&mut self) -> usize {
        self.next_label += 1;
        self.next_label - 1
    }

    fn push_vertex(&mut self, label: usize) -> usize {
        self.n += 1;
        self.labels.push(label);
        self.n
    }

    fn push_fresh(&mut self) -> usize {
        let l = self.fresh();
        self.push_vertex(l)
    }

    fn relabel(&mut self, v: usize, label: usize) {
        self.labels[v - 1] = label;
    }

    fn label(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    fn arc(&mut self, u: usize, v: usize) {
        self.arcs.push((u, v));
    }

    fn into_witness(self) -> Result<ConstructiveWitness, FamilyError> {
        let d = Digraph::new(self.n, self.arcs.iter().map(|&(u, v)| (u - 1, v - 1)))?;
        ConstructiveWitness::new(d, Coloring::canonicalize(&self.labels))
    }
}

/// `P_{4k+1}` with out-degrees `{0,2,0,...,2,0}`: sources share `C1`,
/// sinks `v_i` with `i = 3 (mod 4)` are singletons, the other sinks share
/// `C2`. Each singleton serves the two sources beside it. `k + 2` classes.
fn path_4k1(k: usize) -> Layout {
    let mut l = Layout::new();
    for i in 1..=4 * k + 1 {
        match i % 4 {
            0 | 2 => {
                l.push_vertex(C1);
            }
            1 => {
                l.push_vertex(C2);
            }
            _ => {
                l.push_fresh();
            }
        }
    }
    for i in (2..=4 * k).step_by(2) {
        l.arc(i, i - 1);
        l.arc(i, i + 1);
    }
    l
}

/// `P_{4k+3}`: the `P_{4k+1}` layout plus a `C1` source and a fresh sink it
/// dominates. `k + 3` classes.
fn path_4k3(k: usize) -> Layout {
    let mut l = path_4k1(k);
    let last = l.n;
    let s = l.push_vertex(C1);
    let t = l.push_fresh();
    l.arc(s, last);
    l.arc(s, t);
    l
}

/// `P_{4k+2}`: the `P_{4k+1}` layout, last sink made unique and dominated by
/// one more `C1` vertex. `k + 3` classes.
fn path_4k2(k: usize) -> Layout {
    let mut l = path_4k1(k);
    let last = l.n;
    let f = l.fresh();
    l.relabel(last, f);
    let s = l.push_vertex(C1);
    l.arc(s, last);
    l
}

fn path_layout(n: usize) -> Layout {
    let (k, r) = (n / 4, n % 4);
    match (n, r) {
        (2, _) => {
            let mut l = Layout::new();
            l.push_fresh();
            l.push_fresh();
            l.arc(1, 2);
            l
        }
        (3, _) => {
            let mut l = Layout::new();
            l.push_vertex(C2);
            l.push_vertex(C1);
            l.push_vertex(C2);
            l.arc(2, 1);
            l.arc(2, 3);
            l
        }
        (6, _) => {
            // out-degrees {1,0,2,0,2,0}: {v1,v3,v5}, {v2}, {v4,v6}
            let mut l = Layout::new();
            let b = l.fresh();
            for label in [C1, b, C1, C2, C1, C2] {
                l.push_vertex(label);
            }
            for (u, v) in [(1, 2), (3, 2), (3, 4), (5, 4), (5, 6)] {
                l.arc(u, v);
            }
            l
        }
        (_, 1) => path_4k1(k),
        (_, 2) => path_4k2(k),
        (_, 3) => path_4k3(k),
        _ => {
            // n = 4(k'+1): P_{4k'+3} plus a C1 vertex dominating its unique end
            let mut l = path_4k3(k - 1);
            let last = l.n;
            let s = l.push_vertex(C1);
            l.arc(s, last);
            l
        }
    }
}

/// An orientation of the path on `n` vertices with an explicit dominator
/// coloring using [`chi_d_path_formula`]`(n)` classes.
pub fn path_optimal(n: usize) -> Result<ConstructiveWitness, FamilyError> {
    FamilySpec::Path { n }.validate()?;
    path_layout(n).into_witness()
}

/// `C_{4k}`, `k >= 2`: the `P_{4k+1}` layout with its two `C2` ends merged.
fn cycle_4k(k: usize) -> Layout {
    let mut l = path_4k1(k);
    l.n -= 1;
    l.labels.pop();
    let last_source = 4 * k;
    for a in &mut l.arcs {
        if *a == (last_source, 4 * k + 1) {
            *a = (last_source, 1);
        }
    }
    l
}

fn cycle_4_alternating() -> Layout {
    let mut l = Layout::new();
    for label in [C2, C1, C2, C1] {
        l.push_vertex(label);
    }
    for (u, v) in [(2, 1), (2, 3), (4, 3), (4, 1)] {
        l.arc(u, v);
    }
    l
}

/// `C_{4k+1}`: a `C_{4k}` layout with a vertex `w` spliced into the arc
/// `v_{4k} -> v1`. `w` takes over the class of `v1` and `v1` becomes a
/// singleton dominated by `w`.
fn cycle_4k1(k: usize) -> Layout {
    let mut l = if k == 1 {
        cycle_4_alternating()
    } else {
        cycle_4k(k)
    };
    let old = l.label(1);
    let w = l.push_vertex(old);
    let f = l.fresh();
    l.relabel(1, f);
    let pos = l
        .arcs
        .iter()
        .position(|&a| a == (4 * k, 1))
        .expect("C_4k closes with v_4k -> v1");
    l.arcs[pos] = (4 * k, w);
    l.arc(w, 1);
    l
}

/// `C_{4k+2}`, `k >= 2`: the `P_{4k+2}` layout closed by `v_{4k+2} -> v1`.
fn cycle_4k2(k: usize) -> Layout {
    let mut l = path_4k2(k);
    l.arc(4 * k + 2, 1);
    l
}

/// `C_{4k+3}`, `k >= 2`: `v1 -> v2` with `v2` a singleton, odd vertices
/// from `v3` on are `C1` sources, `v1` sits in `C2`, and the chain
/// `v4 .. v_{4k+2}` is colored like `P_{4(k-1)+3}`.
fn cycle_4k3(k: usize) -> Layout {
    let n = 4 * k + 3;
    let chain = path_4k3(k - 1);
    let mut l = Layout::new();
    l.push_vertex(C2);
    l.push_fresh();
    l.push_vertex(C1);
    let offset = l.next_label;
    for &label in &chain.labels {
        l.push_vertex(if label < 2 { label } else { label + offset });
    }
    l.next_label = offset + chain.next_label;
    l.push_vertex(C1);
    debug_assert_eq!(l.n, n);
    l.arc(1, 2);
    for i in (3..=n).step_by(2) {
        l.arc(i, i - 1);
        l.arc(i, if i == n { 1 } else { i + 1 });
    }
    l
}

fn cycle_layout(n: usize) -> Layout {
    let (k, r) = (n / 4, n % 4);
    match (n, r) {
        (3, _) => {
            let mut l = Layout::new();
            for _ in 0..3 {
                l.push_fresh();
            }
            for (u, v) in [(1, 2), (2, 3), (3, 1)] {
                l.arc(u, v);
            }
            l
        }
        (4, _) => cycle_4_alternating(),
        (6, _) => {
            // alternating sources; sinks {v1, v3} and {v5}
            let mut l = Layout::new();
            let b = l.fresh();
            for label in [C2, C1, C2, C1, b, C1] {
                l.push_vertex(label);
            }
            for (u, v) in [(2, 1), (2, 3), (4, 3), (4, 5), (6, 5), (6, 1)] {
                l.arc(u, v);
            }
            l
        }
        (7, _) => {
            // out-degrees {1,0,2,0,2,0,2}: v1, v2 singletons, {v4, v6}, sources
            let mut l = Layout::new();
            let (a, b) = (l.fresh(), l.fresh());
            for label in [a, b, C1, C2, C1, C2, C1] {
                l.push_vertex(label);
            }
            for (u, v) in [(1, 2), (3, 2), (3, 4), (5, 4), (5, 6), (7, 6), (7, 1)] {
                l.arc(u, v);
            }
            l
        }
        (_, 0) => cycle_4k(k),
        (_, 1) => cycle_4k1(k),
        (_, 2) => cycle_4k2(k),
        _ => cycle_4k3(k),
    }
}

/// An orientation of the cycle on `n` vertices with an explicit dominator
/// coloring using [`chi_d_cycle_formula`]`(n)` classes.
pub fn cycle_optimal(n: usize) -> Result<ConstructiveWitness, FamilyError> {
    FamilySpec::Cycle { n }.validate()?;
    cycle_layout(n).into_witness()
}

/// Star with hub 0: leaves `1..=in_arcs` point at the hub, the rest are
/// pointed at by it.
pub fn star_oriented(leaves: usize, in_arcs: usize) -> Result<Digraph, FamilyError> {
    FamilySpec::Star { leaves, in_arcs }.validate()?;
    let arcs = (1..=leaves).map(|v| if v <= in_arcs { (v, 0) } else { (0, v) });
    Ok(Digraph::new(leaves + 1, arcs)?)
}

/// `K_{m,n}` with sides `0..m` and `m..m+n`, every arc leaving the first.
pub fn one_way_complete_bipartite(m: usize, n: usize) -> Result<Digraph, FamilyError> {
    FamilySpec::CompleteBipartite { m, n }.validate()?;
    let arcs = (0..m).flat_map(|x| (m..m + n).map(move |y| (x, y)));
    Ok(Digraph::new(m + n, arcs)?)
}

/// Whether `d` is a complete bipartite digraph with every arc running from
/// one side to the other.
pub fn is_one_way_complete_bipartite(d: &Digraph) -> bool {
    let out = d.out_degree_sequence();
    let sources: Vec<usize> = (0..d.n()).filter(|&v| out[v] > 0).collect();
    let sinks = d.n() - sources.len();
    !sources.is_empty()
        && sinks > 0
        && d.arcs().len() == sources.len() * sinks
        && d.arcs().iter().all(|&(_, v)| out[v] == 0)
}

pub fn tournament(n: usize, chooser: TournamentChooser) -> Result<Digraph, FamilyError> {
    FamilySpec::Complete { n, chooser }.validate()?;
    let base = BaseGraph::complete(n);
    Ok(match chooser {
        TournamentChooser::Transitive => Digraph::new(n, base.edges().iter().copied())?,
        TournamentChooser::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let bits = (0..base.edge_count()).map(|_| rng.gen::<bool>()).collect();
            OrientationCode::new(base, bits)?.orient()
        }
        TournamentChooser::Index(index) => OrientationCode::from_index(base, index)?.orient(),
    })
}

/// Directed `n`-cycle plus a sink hub (vertex `n`) receiving an arc from
/// every cycle vertex.
pub fn tilde_cycle(n: usize) -> Result<Digraph, FamilyError> {
    FamilySpec::TildeCycle { n }.validate()?;
    let rim = (0..n).map(|i| (i, (i + 1) % n));
    let spokes = (0..n).map(|i| (i, n));
    Ok(Digraph::new(n + 1, rim.chain(spokes))?)
}

/// Hamiltonian directed path `v0 -> ... -> v5` with the extra arc `v4 -> v0`.
pub fn fig3_digraph() -> Digraph {
    Digraph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 0)])
        .expect("fixed digraph is valid")
}

/// Hamiltonian directed cycle `v0 -> ... -> v5 -> v0` with chords `v5 -> v2`
/// and `v1 -> v3`.
pub fn fig4_digraph() -> Digraph {
    Digraph::new(
        6,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (5, 2),
            (1, 3),
        ],
    )
    .expect("fixed digraph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::chi;

    fn value(d: &Digraph) -> usize {
        chi_d(d, DominationMode::SinkExempt).unwrap().value.unwrap()
    }

    #[test]
    fn base_graph_examples() {
        assert_eq!(
            base_graph(&FamilySpec::Path { n: 5 }).unwrap().edges(),
            &[(0, 1), (1, 2), (2, 3), (3, 4)]
        );
        assert_eq!(
            base_graph(&FamilySpec::Star {
                leaves: 4,
                in_arcs: 0
            })
            .unwrap(),
            BaseGraph::star(4)
        );
        let tilde = base_graph(&FamilySpec::TildeCycle { n: 6 }).unwrap();
        assert_eq!((tilde.n(), tilde.edge_count()), (7, 12));
        assert_eq!(tilde, tilde_cycle(6).unwrap().underlying());
    }

    #[test]
    fn directed_examples() {
        assert_eq!(directed_path(4).unwrap().arcs(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(directed_cycle(3).unwrap().arcs(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(value(&directed_cycle(6).unwrap()), 6);
        assert!(directed_cycle(2).is_err());
        assert!(directed_path(0).is_err());
    }

    #[test]
    fn path_formula_values() {
        let expected = [1, 2, 2, 3, 3, 3, 4, 4, 4, 5, 5, 5, 5, 6];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(chi_d_path_formula(i + 1).unwrap(), e, "n = {}", i + 1);
        }
        assert!(chi_d_path_formula(0).is_err());
    }

    #[test]
    fn cycle_formula_values() {
        let expected = [3, 2, 3, 3, 4, 4, 5, 5, 5, 5, 6];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(chi_d_cycle_formula(i + 3).unwrap(), e, "n = {}", i + 3);
        }
        assert!(chi_d_cycle_formula(2).is_err());
    }

    #[test]
    fn path_optimal_examples() {
        let w = path_optimal(5).unwrap();
        assert_eq!(w.digraph().out_degree_sequence(), vec![0, 2, 0, 2, 0]);
        assert_eq!(
            w.coloring().classes(),
            vec![vec![0, 4], vec![1, 3], vec![2]]
        );
        let w = path_optimal(6).unwrap();
        assert_eq!(w.digraph().out_degree_sequence(), vec![1, 0, 2, 0, 2, 0]);
        assert_eq!(
            w.coloring().classes(),
            vec![vec![0, 2, 4], vec![1], vec![3, 5]]
        );
        let w = path_optimal(4).unwrap();
        assert_eq!(w.digraph().out_degree_sequence(), vec![0, 2, 0, 1]);
        assert_eq!(w.claimed_value(), 3);
    }

    #[test]
    fn cycle_optimal_examples() {
        let w = cycle_optimal(4).unwrap();
        assert_eq!(w.digraph().out_degree_sequence(), vec![0, 2, 0, 2]);
        assert_eq!(w.coloring().assignment(), &[0, 1, 0, 1]);
        let w = cycle_optimal(8).unwrap();
        assert_eq!(
            w.digraph().out_degree_sequence(),
            vec![0, 2, 0, 2, 0, 2, 0, 2]
        );
        assert_eq!(w.claimed_value(), 4);
        let w = cycle_optimal(7).unwrap();
        assert_eq!(w.digraph().out_degree_sequence(), vec![1, 0, 2, 0, 2, 0, 2]);
        assert_eq!(
            w.coloring().classes(),
            vec![vec![0], vec![1], vec![2, 4, 6], vec![3, 5]]
        );
    }

    #[test]
    fn constructions_hit_formulas_up_to_forty() {
        for n in 1..=40 {
            let w = path_optimal(n).unwrap();
            assert_eq!(
                w.claimed_value(),
                chi_d_path_formula(n).unwrap(),
                "path n = {n}"
            );
            assert!(w.digraph().underlying().is_path_graph(), "path n = {n}");
        }
        for n in 3..=40 {
            let w = cycle_optimal(n).unwrap();
            assert_eq!(
                w.claimed_value(),
                chi_d_cycle_formula(n).unwrap(),
                "cycle n = {n}"
            );
            assert!(w.digraph().underlying().is_cycle_graph(), "cycle n = {n}");
        }
    }

    #[test]
    fn constructions_are_optimal_for_their_orientation() {
        for n in 1..=12 {
            let w = path_optimal(n).unwrap();
            assert_eq!(value(w.digraph()), w.claimed_value(), "path n = {n}");
        }
        for n in 3..=12 {
            let w = cycle_optimal(n).unwrap();
            assert_eq!(value(w.digraph()), w.claimed_value(), "cycle n = {n}");
        }
    }

    #[test]
    fn stars() {
        assert_eq!(value(&star_oriented(5, 0).unwrap()), 2);
        assert_eq!(value(&star_oriented(5, 5).unwrap()), 2);
        assert_eq!(value(&star_oriented(5, 2).unwrap()), 3);
        assert!(star_oriented(3, 4).is_err());
        assert!(star_oriented(0, 0).is_err());
    }

    #[test]
    fn one_way_bipartite() {
        assert_eq!(value(&one_way_complete_bipartite(2, 3).unwrap()), 2);
        assert_eq!(value(&one_way_complete_bipartite(3, 3).unwrap()), 2);
        assert_eq!(
            one_way_complete_bipartite(1, 4).unwrap(),
            star_oriented(4, 0).unwrap()
        );
        assert!(is_one_way_complete_bipartite(
            &one_way_complete_bipartite(2, 3).unwrap()
        ));
        assert!(!is_one_way_complete_bipartite(
            &star_oriented(3, 1).unwrap()
        ));
        assert!(!is_one_way_complete_bipartite(&directed_path(3).unwrap()));
        assert!(one_way_complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn tournaments() {
        assert_eq!(
            value(&tournament(3, TournamentChooser::Transitive).unwrap()),
            3
        );
        let cyclic = tournament(3, TournamentChooser::Index(0b010)).unwrap();
        assert_eq!(cyclic.out_degree_sequence(), vec![1, 1, 1]);
        assert_eq!(value(&cyclic), 3);
        for seed in 0..10 {
            let t = tournament(5, TournamentChooser::Seeded(seed)).unwrap();
            assert_eq!(t.underlying(), BaseGraph::complete(5));
            assert_eq!(value(&t), 5);
        }
        assert_eq!(
            tournament(5, TournamentChooser::Seeded(7)).unwrap(),
            tournament(5, TournamentChooser::Seeded(7)).unwrap()
        );
    }

    #[test]
    fn tilde_cycles() {
        assert_eq!(value(&tilde_cycle(6).unwrap()), 3);
        assert_eq!(value(&tilde_cycle(7).unwrap()), 4);
        assert_eq!(value(&tilde_cycle(4).unwrap()), 3);
        let d = tilde_cycle(5).unwrap();
        assert_eq!(d.sinks(), vec![5]);
    }

    #[test]
    fn fixed_figures() {
        let f3 = fig3_digraph();
        let f4 = fig4_digraph();
        assert_eq!(value(&f3), 5);
        assert_eq!(value(&f4), 5);
        let w = witness(&FamilySpec::Fig3).unwrap();
        assert_eq!(w.coloring().color(0), w.coloring().color(5));
        let w = witness(&FamilySpec::Fig4).unwrap();
        assert_eq!(w.coloring().color(0), w.coloring().color(2));
    }

    #[test]
    fn every_family_witness_verifies() {
        let specs = [
            FamilySpec::Path { n: 9 },
            FamilySpec::Cycle { n: 11 },
            FamilySpec::Star {
                leaves: 4,
                in_arcs: 1,
            },
            FamilySpec::Star {
                leaves: 1,
                in_arcs: 1,
            },
            FamilySpec::Complete {
                n: 5,
                chooser: TournamentChooser::Seeded(3),
            },
            FamilySpec::CompleteBipartite { m: 2, n: 4 },
            FamilySpec::TildeCycle { n: 7 },
            FamilySpec::TildeCycle { n: 8 },
            FamilySpec::Fig3,
            FamilySpec::Fig4,
        ];
        for spec in specs {
            let w = witness(&spec).unwrap();
            let d = digraph(&spec).unwrap();
            assert_eq!(w.digraph(), &d, "{spec:?}");
            assert_eq!(w.claimed_value(), value(&d), "{spec:?}");
            let lower = chi(&d.underlying()).unwrap();
            assert!(lower <= w.claimed_value() && w.claimed_value() <= d.n());
        }
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(
            FamilySpec::from_args("path", &[9]).unwrap(),
            FamilySpec::Path { n: 9 }
        );
        assert_eq!(
            FamilySpec::from_args("star", &[5]).unwrap(),
            FamilySpec::Star {
                leaves: 5,
                in_arcs: 0
            }
        );
        assert_eq!(
            FamilySpec::from_args("complete", &[4, 11]).unwrap(),
            FamilySpec::Complete {
                n: 4,
                chooser: TournamentChooser::Seeded(11)
            }
        );
        assert!(FamilySpec::from_args("wheel", &[5]).is_err());
        assert!(FamilySpec::from_args("cycle", &[2]).is_err());
        assert!(FamilySpec::from_args("fig3", &[1]).is_err());
        assert!(FamilySpec::from_args("complete-bipartite", &[2]).is_err());
        for kind in FamilySpec::KINDS {
            let params: &[u64] = match kind {
                "fig3" | "fig4" => &[],
                "complete-bipartite" => &[2, 2],
                _ => &[4],
            };
            assert_eq!(FamilySpec::from_args(kind, params).unwrap().kind(), kind);
        }
    }

    #[test]
    fn witness_constructor_rejects_bad_colorings() {
        let d = directed_path(3).unwrap();
        assert!(ConstructiveWitness::new(d.clone(), Coloring::canonicalize(&[0, 1, 0])).is_err());
        assert!(ConstructiveWitness::new(d, Coloring::canonicalize(&[0, 1])).is_err());
    }
}
