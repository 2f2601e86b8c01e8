//! Immutable graphs, multigraphs, and the solution kinds defined on them.
//!
//! Vertices are dense 0-based integers. [`Graph`] is a simple undirected
//! graph; [`MultiGraph`] additionally stores a positive multiplicity per
//! unordered vertex pair, so parallel edges produced by instance
//! translations collapse canonically. Solution values ([`VertexSet`],
//! [`Matching`], [`Cut`]) are plain normalized values that do not borrow
//! the graph; the feasibility predicates validate membership ranges and
//! report violations as [`GraphError`]s.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset;

/// Index of a vertex, always in `[0, n)` for its owning graph.
pub type VertexId = usize;

/// Errors from graph construction and the feasibility predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// A vertex index is not in `[0, n)`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An edge joins a vertex to itself.
    SelfLoop { vertex: usize },
    /// The same unordered pair was listed twice for a simple graph.
    DuplicateEdge { u: usize, v: usize },
    /// A multigraph entry carries multiplicity zero.
    ZeroMultiplicity { u: usize, v: usize },
    /// A cut or assignment does not cover exactly `[0, n)`.
    SideCountMismatch { expected: usize, found: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph with {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u}, {v}}}"),
            GraphError::ZeroMultiplicity { u, v } => {
                write!(f, "edge {{{u}, {v}}} has multiplicity zero")
            }
            GraphError::SideCountMismatch { expected, found } => {
                write!(f, "solution covers {found} vertices, graph has {expected}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

fn ordered_pair(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph with sorted adjacency lists and an
/// adjacency bit matrix for the hot paths of the checkers and oracles.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    /// Flat adjacency bit matrix, `words` words per vertex row.
    bits: Vec<u64>,
    words: usize,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Rejects loops,
    /// duplicate edges, and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let words = bitset::words_for(n);
        let mut g = Graph {
            n,
            adj: vec![Vec::new(); n],
            bits: vec![0u64; n.max(1) * words],
            words,
            m: 0,
        };
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            let (u, v) = ordered_pair(u, v);
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
            bitset::set(&mut g.bits[u * words..(u + 1) * words], v);
            bitset::set(&mut g.bits[v * words..(v + 1) * words], u);
            g.m += 1;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph::new(n, &[]).expect("empty graph is always valid")
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).expect("complete graph is always valid")
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).expect("path graph is always valid")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).expect("cycle graph is always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        bitset::test(self.row(u), v)
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u].iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|list| list.is_empty())
    }

    /// Number of `u64` words per adjacency row.
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Adjacency row of `v` as a bitset slice.
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.max() {
            Some(v) if v >= self.n => Err(GraphError::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    /// Edge-complement: an edge is present iff absent here (no loops).
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, &edges).expect("complement preserves validity")
    }

    /// Appends `count` fresh isolated vertices after the existing ids.
    pub fn add_isolated_vertices(&self, count: usize) -> Graph {
        let edges: Vec<_> = self.edges().collect();
        Graph::new(self.n + count, &edges).expect("extension preserves validity")
    }

    /// Copy of the graph without one edge. Panics if the edge is absent.
    pub(crate) fn without_edge(&self, u: usize, v: usize) -> Graph {
        assert!(self.has_edge(u, v), "edge to remove must exist");
        let pair = ordered_pair(u, v);
        let edges: Vec<_> = self.edges().filter(|&e| e != pair).collect();
        Graph::new(self.n, &edges).expect("removal preserves validity")
    }

    /// Induced subgraph on the vertices outside `removed`, together with
    /// the map from new ids back to original ids.
    pub(crate) fn induced_without(&self, removed: &VertexSet) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|v| !removed.contains(*v)).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        for (u, v) in self.edges() {
            if new_id[u] != usize::MAX && new_id[v] != usize::MAX {
                edges.push((new_id[u], new_id[v]));
            }
        }
        (Graph::new(keep.len(), &edges).expect("induced subgraph is valid"), keep)
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent_set(&self, s: &VertexSet) -> Result<bool, GraphError> {
        self.check_set(s)?;
        let mask = s.to_words(self.words);
        Ok(s.iter().all(|v| bitset::disjoint(self.row(v), &mask)))
    }

    /// True iff every vertex outside `d` has a neighbor in `d`.
    pub fn is_dominating_set(&self, d: &VertexSet) -> Result<bool, GraphError> {
        self.check_set(d)?;
        let mask = d.to_words(self.words);
        Ok((0..self.n)
            .all(|v| bitset::test(&mask, v) || !bitset::disjoint(self.row(v), &mask)))
    }

    /// True iff the complement of `s` is an independent set, i.e. every
    /// edge has at least one endpoint in `s`.
    pub fn is_vertex_cover(&self, s: &VertexSet) -> Result<bool, GraphError> {
        self.check_set(s)?;
        Ok(self.edges().all(|(u, v)| s.contains(u) || s.contains(v)))
    }

    /// True iff removing `s` leaves an acyclic graph. Acyclicity is
    /// decided by union-find over the remaining edges, so there is no
    /// recursion depth to worry about on large instances.
    pub fn is_feedback_vertex_set(&self, s: &VertexSet) -> Result<bool, GraphError> {
        self.check_set(s)?;
        let mut uf = UnionFind::new(self.n);
        for (u, v) in self.edges() {
            if s.contains(u) || s.contains(v) {
                continue;
            }
            if !uf.union(u, v) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff the members of `s` are pairwise adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> Result<bool, GraphError> {
        self.check_set(s)?;
        let members = s.as_slice();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !self.has_edge(u, v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff every pair of `m` is an edge of this graph and no two
    /// pairs share an endpoint.
    pub fn is_matching(&self, m: &Matching) -> Result<bool, GraphError> {
        let mut seen = bitset::zeroed(self.words);
        for &(u, v) in m.edges() {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if !self.has_edge(u, v) {
                return Ok(false);
            }
            if bitset::test(&seen, u) || bitset::test(&seen, v) {
                return Ok(false);
            }
            bitset::set(&mut seen, u);
            bitset::set(&mut seen, v);
        }
        Ok(true)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// An undirected multigraph storing one record per unordered vertex
/// pair with a positive multiplicity. Duplicate pair records passed to
/// the constructor are merged by summing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiGraph {
    n: usize,
    mult: BTreeMap<(usize, usize), u64>,
    adj: Vec<Vec<(usize, u64)>>,
    total: u64,
}

impl MultiGraph {
    pub fn new(n: usize, entries: &[(usize, usize, u64)]) -> Result<Self, GraphError> {
        let mut mult = BTreeMap::new();
        for &(u, v, w) in entries {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if w == 0 {
                return Err(GraphError::ZeroMultiplicity { u, v });
            }
            *mult.entry(ordered_pair(u, v)).or_insert(0) += w;
        }
        let mut adj = vec![Vec::new(); n];
        let mut total = 0;
        for (&(u, v), &w) in &mult {
            adj[u].push((v, w));
            adj[v].push((u, w));
            total += w;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(MultiGraph { n, mult, adj, total })
    }

    /// Views a simple graph as a multigraph with unit multiplicities.
    pub fn from_graph(g: &Graph) -> Self {
        let entries: Vec<_> = g.edges().map(|(u, v)| (u, v, 1)).collect();
        MultiGraph::new(g.vertex_count(), &entries).expect("simple graph is a valid multigraph")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Total edge multiplicity `|E|`.
    pub fn total_multiplicity(&self) -> u64 {
        self.total
    }

    pub fn distinct_pair_count(&self) -> usize {
        self.mult.len()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        if u == v {
            return 0;
        }
        self.mult.get(&ordered_pair(u, v)).copied().unwrap_or(0)
    }

    /// Records as `(u, v, multiplicity)` with `u < v`, ascending.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.mult.iter().map(|(&(u, v), &w)| (u, v, w))
    }

    /// Incident records of `v` as `(neighbor, multiplicity)`, ascending.
    pub fn incident(&self, v: usize) -> &[(usize, u64)] {
        &self.adj[v]
    }

    /// Sum of multiplicities of pairs with endpoints on opposite sides.
    pub fn cut_weight(&self, c: &Cut) -> Result<u64, GraphError> {
        if c.len() != self.n {
            return Err(GraphError::SideCountMismatch { expected: self.n, found: c.len() });
        }
        Ok(self
            .pairs()
            .filter(|&(u, v, _)| c.in_x(u) != c.in_x(v))
            .map(|(_, _, w)| w)
            .sum())
    }
}

/// A set of vertices stored as a sorted, duplicate-free id list. The
/// derived ordering is lexicographic on the member list, which is the
/// canonical solution order used throughout.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn empty() -> Self {
        VertexSet::default()
    }

    /// The full set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet { members: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn max(&self) -> Option<usize> {
        self.members.last().copied()
    }

    pub fn insert(&mut self, v: usize) {
        if let Err(pos) = self.members.binary_search(&v) {
            self.members.insert(pos, v);
        }
    }

    pub fn remove(&mut self, v: usize) {
        if let Ok(pos) = self.members.binary_search(&v) {
            self.members.remove(pos);
        }
    }

    /// Members of `{0, ..., n-1}` not in this set.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet::new((0..n).filter(|&v| !self.contains(v)))
    }

    /// `(self \ remove) ∪ add`.
    pub fn apply_swap(&self, remove: &[usize], add: &[usize]) -> VertexSet {
        VertexSet::new(
            self.iter().filter(|v| !remove.contains(v)).chain(add.iter().copied()),
        )
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().filter(|&v| other.contains(v)))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub(crate) fn to_words(&self, words: usize) -> Vec<u64> {
        bitset::from_indices(words, self.iter())
    }

    pub(crate) fn from_words(bits: &[u64]) -> VertexSet {
        VertexSet { members: bitset::ones(bits).collect() }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A set of candidate matching edges, stored as sorted `(u, v)` pairs
/// with `u < v`. Whether the pairs are actual disjoint graph edges is
/// checked by [`Graph::is_matching`], not by construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default, Hash)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut normalized = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            normalized.push(ordered_pair(u, v));
        }
        normalized.sort_unstable();
        normalized.dedup();
        Ok(Matching { edges: normalized })
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&ordered_pair(u, v)).is_ok()
    }

    /// True iff some edge of this matching is incident to `v`.
    pub fn covers(&self, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }

    /// The vertex matched to `v`, if any.
    pub fn partner(&self, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .find_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Symmetric difference with a set of edges.
    pub fn symmetric_difference(&self, other: &[(usize, usize)]) -> Matching {
        let mut out: Vec<(usize, usize)> = self.edges.clone();
        for &(u, v) in other {
            let pair = ordered_pair(u, v);
            match out.binary_search(&pair) {
                Ok(pos) => {
                    out.remove(pos);
                }
                Err(pos) => out.insert(pos, pair),
            }
        }
        Matching { edges: out }
    }
}

impl FromIterator<(usize, usize)> for Matching {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        Matching::new(iter).expect("matching literals must not be loops")
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|(u, v)| (u, v))).finish()
    }
}

/// A bipartition of `[0, n)` into side X (`true`) and side Y (`false`).
///
/// Ordered cuts distinguish `(X, Y)` from `(Y, X)`. Unordered cuts are
/// equivalence classes under the global side flip and are stored in
/// canonical representative form: vertex 0 lies on side X, except that
/// the trivial full/empty split is represented as all-`false`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cut {
    side_x: Vec<bool>,
    ordered: bool,
}

impl Cut {
    /// An ordered cut; `side_x[v]` is true iff `v ∈ X`.
    pub fn ordered(side_x: Vec<bool>) -> Self {
        Cut { side_x, ordered: true }
    }

    /// An unordered cut, canonicalized under the global side flip.
    pub fn unordered(side_x: Vec<bool>) -> Self {
        let mut cut = Cut { side_x, ordered: false };
        cut.canonicalize();
        cut
    }

    fn canonicalize(&mut self) {
        if self.ordered || self.side_x.is_empty() {
            return;
        }
        let all_true = self.side_x.iter().all(|&b| b);
        let all_false = self.side_x.iter().all(|&b| !b);
        let flip = if all_true {
            true
        } else if all_false {
            false
        } else {
            !self.side_x[0]
        };
        if flip {
            for b in &mut self.side_x {
                *b = !*b;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.side_x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.side_x.is_empty()
    }

    pub fn is_ordered(&self) -> bool {
        self.ordered
    }

    pub fn in_x(&self, v: usize) -> bool {
        self.side_x[v]
    }

    pub fn sides(&self) -> &[bool] {
        &self.side_x
    }

    /// The members of side X as a vertex set.
    pub fn x_side(&self) -> VertexSet {
        VertexSet::new((0..self.len()).filter(|&v| self.side_x[v]))
    }

    /// The cut with all sides exchanged. For unordered cuts this is the
    /// same cut (the canonical representative is restored).
    pub fn flipped(&self) -> Cut {
        let side_x = self.side_x.iter().map(|&b| !b).collect();
        if self.ordered {
            Cut::ordered(side_x)
        } else {
            Cut::unordered(side_x)
        }
    }

    /// The cut with a single vertex moved to the other side.
    pub fn flip_vertex(&self, v: usize) -> Cut {
        let mut side_x = self.side_x.clone();
        side_x[v] = !side_x[v];
        if self.ordered {
            Cut::ordered(side_x)
        } else {
            Cut::unordered(side_x)
        }
    }
}

impl fmt::Debug for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x: Vec<usize> = (0..self.len()).filter(|&v| self.side_x[v]).collect();
        let y: Vec<usize> = (0..self.len()).filter(|&v| !self.side_x[v]).collect();
        if self.ordered {
            write!(f, "Cut({x:?} | {y:?})")
        } else {
            write!(f, "Cut{{{x:?} | {y:?}}}")
        }
    }
}

/// Union-find over vertex ids, used for the acyclicity tests.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Joins the components of `u` and `v`; false iff already joined.
    pub(crate) fn union(&mut self, u: usize, v: usize) -> bool {
        let ru = self.find(u);
        let rv = self.find(v);
        if ru == rv {
            return false;
        }
        self.parent[ru] = rv;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn vs(ids: &[usize]) -> VertexSet {
        VertexSet::new(ids.iter().copied())
    }

    #[test]
    fn construction_rejects_loops_and_duplicates() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(GraphError::SelfLoop { vertex: 0 }));
        assert_eq!(
            Graph::new(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn multigraph_merges_duplicates() {
        let mg = MultiGraph::new(3, &[(0, 1, 1), (1, 0, 2), (1, 2, 1)]).unwrap();
        assert_eq!(mg.multiplicity(0, 1), 3);
        assert_eq!(mg.multiplicity(1, 2), 1);
        assert_eq!(mg.total_multiplicity(), 4);
        assert_eq!(
            MultiGraph::new(2, &[(0, 1, 0)]),
            Err(GraphError::ZeroMultiplicity { u: 0, v: 1 })
        );
    }

    #[test]
    fn independent_set_examples() {
        let k3 = Graph::complete(3);
        assert!(k3.is_independent_set(&vs(&[0])).unwrap());
        assert!(!k3.is_independent_set(&vs(&[0, 1])).unwrap());
        let p3 = Graph::path(3);
        assert!(p3.is_independent_set(&vs(&[0, 2])).unwrap());
        assert_eq!(
            p3.is_independent_set(&vs(&[3])),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn dominating_set_examples() {
        // Star with center 0 and two leaves.
        let star = Graph::new(3, &[(0, 1), (0, 2)]).unwrap();
        assert!(star.is_dominating_set(&vs(&[0])).unwrap());
        let single = Graph::empty(1);
        assert!(!single.is_dominating_set(&VertexSet::empty()).unwrap());
        let p3 = Graph::path(3);
        assert!(!p3.is_dominating_set(&vs(&[0])).unwrap());
    }

    #[test]
    fn vertex_cover_examples() {
        let k3 = Graph::complete(3);
        assert!(k3.is_vertex_cover(&vs(&[0, 1])).unwrap());
        let p3 = Graph::path(3);
        assert!(p3.is_vertex_cover(&vs(&[1])).unwrap());
        assert!(!p3.is_vertex_cover(&vs(&[0])).unwrap());
    }

    #[test]
    fn feedback_vertex_set_examples() {
        let c4 = Graph::cycle(4);
        assert!(c4.is_feedback_vertex_set(&vs(&[0])).unwrap());
        assert!(!c4.is_feedback_vertex_set(&VertexSet::empty()).unwrap());
        let tree = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(tree.is_feedback_vertex_set(&VertexSet::empty()).unwrap());
    }

    #[test]
    fn matching_examples() {
        let p4 = Graph::path(4);
        let m = Matching::new([(0, 1), (2, 3)]).unwrap();
        assert!(p4.is_matching(&m).unwrap());
        let shared = Matching::new([(0, 1), (1, 2)]).unwrap();
        assert!(!p4.is_matching(&shared).unwrap());
        assert!(p4.is_matching(&Matching::empty()).unwrap());
        // A pair that is not an edge of the graph is not a matching of it.
        let non_edge = Matching::new([(0, 2)]).unwrap();
        assert!(!p4.is_matching(&non_edge).unwrap());
    }

    #[test]
    fn clique_examples() {
        let k3 = Graph::complete(3);
        assert!(k3.is_clique(&vs(&[0, 1, 2])).unwrap());
        let p3 = Graph::path(3);
        assert!(!p3.is_clique(&vs(&[0, 2])).unwrap());
        assert!(p3.is_clique(&vs(&[1])).unwrap());
    }

    #[test]
    fn cut_weight_examples() {
        let c4 = MultiGraph::from_graph(&Graph::cycle(4));
        let bipartition = Cut::unordered(vec![true, false, true, false]);
        assert_eq!(c4.cut_weight(&bipartition).unwrap(), 4);
        let trivial = Cut::unordered(vec![true, true, true, true]);
        assert_eq!(c4.cut_weight(&trivial).unwrap(), 0);
        let double = MultiGraph::new(2, &[(0, 1, 2)]).unwrap();
        let split = Cut::unordered(vec![true, false]);
        assert_eq!(double.cut_weight(&split).unwrap(), 2);
    }

    #[test]
    fn cut_canonical_form() {
        // Global flips identify the same unordered cut.
        let a = Cut::unordered(vec![true, false, true]);
        let b = Cut::unordered(vec![false, true, false]);
        assert_eq!(a, b);
        assert!(a.in_x(0));
        // The trivial split is canonically all-false.
        let t = Cut::unordered(vec![true, true, true]);
        assert_eq!(t.sides(), &[false, false, false]);
        // Ordered cuts are distinct under flips.
        let oa = Cut::ordered(vec![true, false]);
        assert_ne!(oa, oa.flipped());
    }

    #[test]
    fn complement_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.complement(), Graph::empty(3));
        assert_eq!(Graph::empty(3).complement(), Graph::complete(3));
        let p3 = Graph::path(3);
        assert_eq!(p3.complement(), Graph::new(3, &[(0, 2)]).unwrap());
    }

    #[test]
    fn add_isolated_examples() {
        let k3 = Graph::complete(3);
        let g = k3.add_isolated_vertices(2);
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(k3.add_isolated_vertices(0), k3);
        assert_eq!(Graph::empty(1).add_isolated_vertices(3), Graph::empty(4));
    }

    #[test]
    fn edges_are_sorted() {
        let g = Graph::new(4, &[(3, 2), (1, 0), (2, 0)]).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, [(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.neighbors(2), &[0, 3]);
    }
}
