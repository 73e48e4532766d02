//! Base graphs, oriented digraphs, and orientation codes.
//!
//! Vertices are dense 0-based indices. A [`Digraph`] is always an orientation
//! of a simple graph: loops, repeated arcs and digons are rejected when it is
//! built.

use std::collections::HashSet;
use std::fmt;

use crate::error::GraphError;

/// Undirected simple graph used as the substrate for orientations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl BaseGraph {
    /// Builds a validated base graph. Each edge is stored as `(min, max)`;
    /// the order of the edge list is kept since orientation codes index it.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut stored = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge { u: e.0, v: e.1 });
            }
            stored.push(e);
        }
        Ok(Self { n, edges: stored })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Adjacency lists, neighbors in ascending order.
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// True iff the graph is connected. The empty graph and a single vertex
    /// both count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.neighbors();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Self { n, edges }
    }

    /// Cycle with edges `{i, i+1}` in order, closed by `{0, n-1}`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooSmall {
                what: "cycle",
                min: 3,
                got: n,
            });
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Ok(Self { n, edges })
    }

    /// Star `K_{1,leaves}` with hub 0.
    pub fn star(leaves: usize) -> Self {
        let edges = (1..=leaves).map(|i| (0, i)).collect();
        Self {
            n: leaves + 1,
            edges,
        }
    }

    /// Complete graph, edges in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self { n, edges }
    }

    /// `K_{m,n}` with sides `0..m` and `m..m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let mut edges = Vec::new();
        for x in 0..m {
            for y in m..m + n {
                edges.push((x, y));
            }
        }
        Self { n: m + n, edges }
    }

    /// Recognizes a path graph (connected, `n-1` edges, max degree 2).
    pub fn is_path_graph(&self) -> bool {
        self.n >= 1
            && self.edges.len() + 1 == self.n
            && self.degrees().iter().all(|&d| d <= 2)
            && self.is_connected()
    }

    /// Recognizes a cycle graph (connected, 2-regular, `n >= 3`).
    pub fn is_cycle_graph(&self) -> bool {
        self.n >= 3
            && self.edges.len() == self.n
            && self.degrees().iter().all(|&d| d == 2)
            && self.is_connected()
    }
}

/// A simple, loopless, digon-free directed graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    /// Validates and builds a digraph. Errors name the first offending arc.
    pub fn new(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut stored = Vec::new();
        for (u, v) in arcs {
            check_arc(n, u, v, &seen)?;
            seen.insert((u, v));
            stored.push((u, v));
        }
        Ok(Self { n, arcs: stored })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// Heads of arcs leaving `v`, ascending.
    pub fn out_neighbors(&self, v: usize) -> Result<Vec<usize>, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut out: Vec<usize> = self.arcs.iter().filter(|a| a.0 == v).map(|a| a.1).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Out-neighbor lists for every vertex, ascending.
    pub fn out_lists(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            out[u].push(v);
        }
        for list in &mut out {
            list.sort_unstable();
        }
        out
    }

    pub fn out_degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, _) in &self.arcs {
            deg[u] += 1;
        }
        deg
    }

    pub fn sinks(&self) -> Vec<usize> {
        self.out_degree_sequence()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn underlying(&self) -> BaseGraph {
        BaseGraph {
            n: self.n,
            edges: self
                .arcs
                .iter()
                .map(|&(u, v)| (u.min(v), u.max(v)))
                .collect(),
        }
    }

    /// Digraph with every arc reversed, arc order kept.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            arcs: self.arcs.iter().map(|&(u, v)| (v, u)).collect(),
        }
    }

    /// Sub-digraph induced by `vertices`, relabelled to `0..vertices.len()`
    /// in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Digraph, GraphError> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            index[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Digraph::new(vertices.len(), arcs)
    }

    /// Arc set as a sorted list, for order-insensitive comparison.
    pub fn sorted_arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = self.arcs.clone();
        arcs.sort_unstable();
        arcs
    }
}

fn check_arc(
    n: usize,
    u: usize,
    v: usize,
    seen: &HashSet<(usize, usize)>,
) -> Result<(), GraphError> {
    if u >= n || v >= n {
        return Err(GraphError::VertexOutOfRange {
            vertex: u.max(v),
            n,
        });
    }
    if u == v {
        return Err(GraphError::Loop { vertex: u });
    }
    if seen.contains(&(u, v)) {
        return Err(GraphError::DuplicateArc { u, v });
    }
    if seen.contains(&(v, u)) {
        return Err(GraphError::Digon { u, v });
    }
    Ok(())
}

/// Incremental digraph construction that reports which arc broke an
/// invariant. Used by the text parser to attach line numbers.
#[derive(Debug, Default)]
pub struct DigraphBuilder {
    n: usize,
    arcs: Vec<(usize, usize)>,
    seen: HashSet<(usize, usize)>,
}

impl DigraphBuilder {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            ..Default::default()
        }
    }

    pub fn push(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        check_arc(self.n, u, v, &self.seen)?;
        self.seen.insert((u, v));
        self.arcs.push((u, v));
        Ok(())
    }

    pub fn finish(self) -> Digraph {
        Digraph {
            n: self.n,
            arcs: self.arcs,
        }
    }
}

/// One direction bit per base edge. Bit `i = false` orients edge
/// `{u, v}` (with `u < v`) as `u -> v`; `true` orients it `v -> u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientationCode {
    base: BaseGraph,
    bits: Vec<bool>,
}

impl OrientationCode {
    pub fn new(base: BaseGraph, bits: Vec<bool>) -> Result<Self, GraphError> {
        if bits.len() != base.edge_count() {
            return Err(GraphError::CodeLength {
                expected: base.edge_count(),
                got: bits.len(),
            });
        }
        Ok(Self { base, bits })
    }

    /// Code whose numeric value is `index`, first edge as the most
    /// significant bit.
    pub fn from_index(base: BaseGraph, index: u64) -> Result<Self, GraphError> {
        let m = base.edge_count();
        if m > 63 || (m < 64 && index >> m != 0) {
            return Err(GraphError::CodeIndex { index, edges: m });
        }
        let bits = (0..m).map(|i| (index >> (m - 1 - i)) & 1 == 1).collect();
        Ok(Self { base, bits })
    }

    /// Parses a bitstring such as `"0110"`.
    pub fn from_bitstring(base: BaseGraph, s: &str) -> Result<Self, GraphError> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(GraphError::BadBitstring(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(base, bits)
    }

    /// The code that orients `base` like `d`. Fails if `d` is not an
    /// orientation of `base`.
    pub fn of_digraph(base: BaseGraph, d: &Digraph) -> Result<Self, GraphError> {
        if d.n() != base.n() || d.arcs().len() != base.edge_count() {
            return Err(GraphError::NotAnOrientation);
        }
        let bits = base
            .edges()
            .iter()
            .map(|&(u, v)| {
                if d.has_arc(u, v) {
                    Ok(false)
                } else if d.has_arc(v, u) {
                    Ok(true)
                } else {
                    Err(GraphError::NotAnOrientation)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { base, bits })
    }

    pub fn base(&self) -> &BaseGraph {
        &self.base
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn index(&self) -> u64 {
        self.bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64)
    }

    pub fn complement(&self) -> Self {
        Self {
            base: self.base.clone(),
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn orient(&self) -> Digraph {
        orient_bits(&self.base, &self.bits)
    }
}

impl fmt::Display for OrientationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub(crate) fn orient_bits(base: &BaseGraph, bits: &[bool]) -> Digraph {
    let arcs = base
        .edges()
        .iter()
        .zip(bits)
        .map(|(&(u, v), &flip)| if flip { (v, u) } else { (u, v) })
        .collect();
    Digraph { n: base.n(), arcs }
}

/// Orients `base` per the bits of `index` (first edge most significant)
/// without building an [`OrientationCode`].
pub(crate) fn orient_index(base: &BaseGraph, index: u64) -> Digraph {
    let m = base.edge_count();
    let arcs = base
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| {
            if (index >> (m - 1 - i)) & 1 == 1 {
                (v, u)
            } else {
                (u, v)
            }
        })
        .collect();
    Digraph { n: base.n(), arcs }
}

/// Partitions the `2^n` orientation codes of [`BaseGraph::cycle`]`(n)` into
/// orbits under rotations and reflections of the cycle. Each class is sorted
/// by code index; classes are ordered by their smallest member.
pub fn cycle_symmetry_classes(n: usize) -> Result<Vec<Vec<OrientationCode>>, GraphError> {
    let base = BaseGraph::cycle(n)?;
    if n > 24 {
        return Err(GraphError::TooLarge {
            what: "cycle symmetry classes",
            max: 24,
            got: n,
        });
    }
    let total = 1u64 << n;
    let mut class_of = vec![usize::MAX; total as usize];
    let mut classes: Vec<Vec<u64>> = Vec::new();
    for start in 0..total {
        if class_of[start as usize] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let d = orient_index(&base, start);
        let mut members = Vec::new();
        for map in dihedral_maps(n) {
            let image = Digraph {
                n,
                arcs: d.arcs().iter().map(|&(u, v)| (map[u], map[v])).collect(),
            };
            let code = OrientationCode::of_digraph(base.clone(), &image)
                .expect("dihedral image of a cycle orientation is a cycle orientation")
                .index();
            if class_of[code as usize] == usize::MAX {
                class_of[code as usize] = id;
                members.push(code);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    Ok(classes
        .into_iter()
        .map(|members| {
            members
                .into_iter()
                .map(|i| OrientationCode::from_index(base.clone(), i).expect("index below 2^n"))
                .collect()
        })
        .collect())
}

/// The `2n` vertex permutations of the cycle `0..n`.
fn dihedral_maps(n: usize) -> Vec<Vec<usize>> {
    let mut maps = Vec::with_capacity(2 * n);
    for r in 0..n {
        maps.push((0..n).map(|i| (i + r) % n).collect());
        maps.push((0..n).map(|i| (r + n - i) % n).collect());
    }
    maps
}
