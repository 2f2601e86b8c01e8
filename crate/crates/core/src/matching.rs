//! Maximum matchings and the polynomial-time search for two k-maximal
//! matchings.
//!
//! A matching is k-maximal exactly when the graph has no augmenting
//! path for it with at most `2k - 1` edges, so k-maximality reduces to
//! a depth-bounded alternating-path search. Combined with maximum
//! matching (which admits no augmenting path at all and is therefore
//! k-maximal for every k) this yields [`two_k_maximal_matchings`]:
//!
//! 1. compute a maximum matching `M*`;
//! 2. if a second maximum matching exists, return both;
//! 3. otherwise enumerate the simple paths of exactly `2k + 1` edges
//!    that alternate with respect to `M*` and begin and end with
//!    `M*`-edges — for each such path `P`, `M* △ P` is a matching of
//!    size `|M*| - 1`; return `(M*, M* △ P)` for the first `P` whose
//!    symmetric difference is k-maximal;
//! 4. if no candidate qualifies, fewer than two k-maximal matchings
//!    exist.
//!
//! A unique augmenting path longer than `2k + 1` edges needs no
//! separate treatment in step 3: its `2k + 1`-edge prefix from either
//! end is itself a candidate path and yields a k-maximal matching, so
//! the same enumeration finds it.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, GraphError, Matching};
use crate::local::MAX_SWAP_K;

/// Errors from the matching algorithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatchingError {
    /// `k` is zero or exceeds the guardrail.
    KOutOfRange { k: usize, max: usize },
    /// The supplied edge set is not a matching of the graph.
    NotAMatching,
    /// The supplied matching is not maximum.
    NotMaximum,
    /// The requested path length bound must be odd.
    EvenLengthBound { max_len: usize },
    Graph(GraphError),
}

impl fmt::Display for MatchingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingError::KOutOfRange { k, max } => {
                write!(f, "swap level k={k} outside supported range [1, {max}]")
            }
            MatchingError::NotAMatching => write!(f, "edge set is not a matching of the graph"),
            MatchingError::NotMaximum => write!(f, "matching is not maximum"),
            MatchingError::EvenLengthBound { max_len } => {
                write!(f, "augmenting paths have odd length, bound {max_len} is even")
            }
            MatchingError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for MatchingError {}

impl From<GraphError> for MatchingError {
    fn from(e: GraphError) -> Self {
        MatchingError::Graph(e)
    }
}

/// An alternating path `v_1, ..., v_l` with respect to a reference
/// matching: `v_1` is unmatched and the edges in even position belong
/// to the matching. The path is augmenting iff `v_l` is also unmatched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingPath {
    vertices: Vec<usize>,
}

impl AlternatingPath {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges on the path.
    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Computes a maximum matching with Edmonds' blossom algorithm
/// (the O(n^3) shrinking variant; general graphs are required because
/// the gadget builders produce odd cycles freely).
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.vertex_count();
    let none = usize::MAX;
    let mut mate = vec![none; n];
    let mut parent = vec![none; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut queue = VecDeque::new();
    let mut in_queue = vec![false; n];
    let mut in_blossom = vec![false; n];
    let mut on_lca_path = vec![false; n];

    // Finds the common base of the blossom containing v and w.
    let lca = |v: usize,
               w: usize,
               parent: &[usize],
               base: &[usize],
               mate: &[usize],
               on_path: &mut [bool]| {
        on_path.fill(false);
        let mut v = v;
        loop {
            v = base[v];
            on_path[v] = true;
            if mate[v] == none {
                break;
            }
            v = parent[mate[v]];
        }
        let mut w = w;
        loop {
            w = base[w];
            if on_path[w] {
                return w;
            }
            w = parent[mate[w]];
        }
    };

    // Marks the blossom vertices on the path from v down to the base b,
    // re-rooting parents so the stem alternates through child.
    fn mark_path(
        mut v: usize,
        b: usize,
        mut child: usize,
        parent: &mut [usize],
        base: &[usize],
        mate: &[usize],
        in_blossom: &mut [bool],
    ) {
        while base[v] != b {
            in_blossom[base[v]] = true;
            in_blossom[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    for root in 0..n {
        if mate[root] != none {
            continue;
        }
        // Grow an alternating tree from this free vertex.
        parent.fill(none);
        for (i, b) in base.iter_mut().enumerate() {
            *b = i;
        }
        in_queue.fill(false);
        queue.clear();
        queue.push_back(root);
        in_queue[root] = true;
        let mut endpoint = none;

        'bfs: while let Some(v) = queue.pop_front() {
            for &to in g.neighbors(v) {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != none && parent[mate[to]] != none) {
                    // Odd cycle: contract the blossom around the lca.
                    let cur = lca(v, to, &parent, &base, &mate, &mut on_lca_path);
                    in_blossom.fill(false);
                    mark_path(v, cur, to, &mut parent, &base, &mate, &mut in_blossom);
                    mark_path(to, cur, v, &mut parent, &base, &mate, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[base[i]] {
                            base[i] = cur;
                            if !in_queue[i] {
                                in_queue[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == none {
                    parent[to] = v;
                    if mate[to] == none {
                        endpoint = to;
                        break 'bfs;
                    }
                    if !in_queue[mate[to]] {
                        in_queue[mate[to]] = true;
                        queue.push_back(mate[to]);
                    }
                }
            }
        }

        // Augment along the tree path ending at the free endpoint.
        let mut v = endpoint;
        while v != none {
            let pv = parent[v];
            let next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }

    Matching::new(
        (0..n).filter(|&v| mate[v] != none && v < mate[v]).map(|v| (v, mate[v])),
    )
    .expect("mate array encodes a valid matching")
}

/// Finds a maximum matching different from `mstar`, or `None` iff the
/// maximum matching is unique. Any other maximum matching omits some
/// edge of `mstar`, so it suffices to delete each `mstar`-edge in turn
/// and test whether the maximum matching size survives.
pub fn second_maximum_matching(
    g: &Graph,
    mstar: &Matching,
) -> Result<Option<Matching>, MatchingError> {
    if !g.is_matching(mstar)? {
        return Err(MatchingError::NotAMatching);
    }
    let target = mstar.len();
    for &(u, v) in mstar.edges() {
        let reduced = g.without_edge(u, v);
        let other = maximum_matching(&reduced);
        if other.len() == target {
            return Ok(Some(other));
        }
        if other.len() + 1 < target {
            return Err(MatchingError::NotMaximum);
        }
    }
    // Deleting any edge outside a maximum matching changes nothing, so
    // checking the mstar-edges was exhaustive; also catch a non-maximum
    // input, which an augmenting-path search would expose.
    if maximum_matching(g).len() != target {
        return Err(MatchingError::NotMaximum);
    }
    Ok(None)
}

/// Exhaustive depth-bounded search for an augmenting path with at most
/// `max_len` edges (`max_len` odd), scanning start vertices and
/// neighbors in ascending order. Exponential only in `max_len`.
pub fn find_augmenting_path_upto(
    g: &Graph,
    m: &Matching,
    max_len: usize,
) -> Result<Option<AlternatingPath>, MatchingError> {
    if max_len % 2 == 0 {
        return Err(MatchingError::EvenLengthBound { max_len });
    }
    if !g.is_matching(m)? {
        return Err(MatchingError::NotAMatching);
    }
    let n = g.vertex_count();
    let mut mate = vec![usize::MAX; n];
    for &(u, v) in m.edges() {
        mate[u] = v;
        mate[v] = u;
    }
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(max_len + 1);
    for start in 0..n {
        if mate[start] != usize::MAX {
            continue;
        }
        on_path[start] = true;
        path.push(start);
        let found = extend_augmenting(g, &mate, max_len, &mut path, &mut on_path);
        on_path[start] = false;
        path.clear();
        if let Some(vertices) = found {
            return Ok(Some(AlternatingPath { vertices }));
        }
    }
    Ok(None)
}

/// Depth-first extension of an alternating path whose last edge was a
/// matching edge (or which is still a single free vertex). Returns the
/// first augmenting completion in scan order.
fn extend_augmenting(
    g: &Graph,
    mate: &[usize],
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> Option<Vec<usize>> {
    let v = *path.last().expect("path starts nonempty");
    if path.len() + 1 > max_len + 1 {
        return None;
    }
    for &u in g.neighbors(v) {
        // Next edge must leave the matching.
        if on_path[u] || mate[v] == u {
            continue;
        }
        if mate[u] == usize::MAX {
            // Free endpoint: augmenting path complete.
            let mut vertices = path.clone();
            vertices.push(u);
            return Some(vertices);
        }
        let w = mate[u];
        if on_path[w] || path.len() + 2 > max_len + 1 {
            continue;
        }
        path.push(u);
        path.push(w);
        on_path[u] = true;
        on_path[w] = true;
        let found = extend_augmenting(g, mate, max_len, path, on_path);
        on_path[u] = false;
        on_path[w] = false;
        path.pop();
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Characterization-based k-maximality test: true iff the graph has no
/// augmenting path for `m` with at most `2k - 1` edges.
pub fn is_k_maximal_matching_fast(
    g: &Graph,
    m: &Matching,
    k: usize,
) -> Result<bool, MatchingError> {
    if k == 0 {
        return Err(MatchingError::KOutOfRange { k, max: MAX_SWAP_K });
    }
    Ok(find_augmenting_path_upto(g, m, 2 * k - 1)?.is_none())
}

/// Decides whether the graph has at least two k-maximal matchings and
/// returns a witness pair, or `None` iff it has fewer than two.
pub fn two_k_maximal_matchings(
    g: &Graph,
    k: usize,
) -> Result<Option<(Matching, Matching)>, MatchingError> {
    if k == 0 || k > MAX_SWAP_K {
        return Err(MatchingError::KOutOfRange { k, max: MAX_SWAP_K });
    }
    two_k_maximal_matchings_unbounded(g, k)
}

/// [`two_k_maximal_matchings`] without the `k` guardrail.
pub fn two_k_maximal_matchings_unbounded(
    g: &Graph,
    k: usize,
) -> Result<Option<(Matching, Matching)>, MatchingError> {
    if k == 0 {
        return Err(MatchingError::KOutOfRange { k, max: MAX_SWAP_K });
    }
    let mstar = maximum_matching(g);
    // Maximum matchings admit no augmenting path, hence are k-maximal.
    if let Some(second) = second_maximum_matching(g, &mstar)? {
        return Ok(Some((mstar, second)));
    }
    let mut result = None;
    for_each_candidate_path(g, &mstar, 2 * k + 1, &mut |path| {
        let candidate = mstar.symmetric_difference(path);
        debug_assert_eq!(candidate.len() + 1, mstar.len());
        debug_assert!(g.is_matching(&candidate).unwrap_or(false));
        if is_k_maximal_matching_fast(g, &candidate, k).unwrap_or(false) {
            result = Some(candidate);
            true
        } else {
            false
        }
    });
    Ok(result.map(|second| (mstar, second)))
}

/// Enumerates the simple paths with exactly `edge_budget` edges that
/// alternate with respect to `mstar` and begin and end with
/// `mstar`-edges, in ascending order of their canonical (forward or
/// reversed) vertex sequence; paths are visited once per orientation
/// class. The callback returns true to stop early.
fn for_each_candidate_path(
    g: &Graph,
    mstar: &Matching,
    edge_budget: usize,
    visit: &mut dyn FnMut(&[(usize, usize)]) -> bool,
) {
    let n = g.vertex_count();
    let mut mate = vec![usize::MAX; n];
    for &(u, v) in mstar.edges() {
        mate[u] = v;
        mate[v] = u;
    }
    let mut on_path = vec![false; n];
    let mut path: Vec<usize> = Vec::with_capacity(edge_budget + 1);
    for first in 0..n {
        if mate[first] == usize::MAX {
            continue;
        }
        // The path starts with the matching edge at `first`; exploring
        // from both endpoints would revisit each path reversed, so keep
        // the orientation with the smaller start.
        path.push(first);
        path.push(mate[first]);
        on_path[first] = true;
        on_path[mate[first]] = true;
        let stop = extend_candidate(g, &mate, edge_budget, &mut path, &mut on_path, visit);
        on_path[first] = false;
        on_path[mate[first]] = false;
        path.clear();
        if stop {
            return;
        }
    }
}

fn extend_candidate(
    g: &Graph,
    mate: &[usize],
    edge_budget: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut dyn FnMut(&[(usize, usize)]) -> bool,
) -> bool {
    if path.len() == edge_budget + 1 {
        // Canonical orientation: start vertex below end vertex.
        if path[0] > *path.last().expect("nonempty") {
            return false;
        }
        let edges: Vec<(usize, usize)> = path.windows(2).map(|w| (w[0], w[1])).collect();
        return visit(&edges);
    }
    let v = *path.last().expect("nonempty");
    for &u in g.neighbors(v) {
        if on_path[u] || mate[v] == u || mate[u] == usize::MAX {
            continue;
        }
        let w = mate[u];
        if on_path[w] {
            continue;
        }
        path.push(u);
        path.push(w);
        on_path[u] = true;
        on_path[w] = true;
        let stop = extend_candidate(g, mate, edge_budget, path, on_path, visit);
        on_path[u] = false;
        on_path[w] = false;
        path.pop();
        path.pop();
        if stop {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::find_matching_improvement;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::new(10, &edges).unwrap()
    }

    #[test]
    fn maximum_matching_examples() {
        let p4 = Graph::path(4);
        let m = maximum_matching(&p4);
        assert_eq!(m, Matching::new([(0, 1), (2, 3)]).unwrap());

        let c5 = Graph::cycle(5);
        assert_eq!(maximum_matching(&c5).len(), 2);

        let m = maximum_matching(&petersen());
        assert_eq!(m.len(), 5);
        assert!(petersen().is_matching(&m).unwrap());
    }

    #[test]
    fn blossom_handles_odd_structures() {
        // 5-cycle with a chord, the classic contraction case.
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), 2);
        // Two triangles joined by a bridge: perfect matching exists.
        let g =
            Graph::new(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), 3);
    }

    #[test]
    fn second_maximum_examples() {
        let c4 = Graph::cycle(4);
        let mstar = maximum_matching(&c4);
        let second = second_maximum_matching(&c4, &mstar).unwrap().unwrap();
        assert_ne!(second, mstar);
        assert_eq!(second.len(), 2);

        let p4 = Graph::path(4);
        let mstar = maximum_matching(&p4);
        assert_eq!(second_maximum_matching(&p4, &mstar).unwrap(), None);

        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        let mstar = maximum_matching(&edge);
        assert_eq!(second_maximum_matching(&edge, &mstar).unwrap(), None);

        let not_max = Matching::empty();
        assert_eq!(second_maximum_matching(&p4, &not_max), Err(MatchingError::NotMaximum));
    }

    #[test]
    fn augmenting_path_examples() {
        let p4 = Graph::path(4);
        let middle = Matching::new([(1, 2)]).unwrap();
        let path = find_augmenting_path_upto(&p4, &middle, 3).unwrap().unwrap();
        assert_eq!(path.vertices(), &[0, 1, 2, 3]);
        assert_eq!(path.edge_count(), 3);

        let p6 = Graph::path(6);
        let m = Matching::new([(1, 2), (3, 4)]).unwrap();
        assert_eq!(find_augmenting_path_upto(&p6, &m, 3).unwrap(), None);
        let path = find_augmenting_path_upto(&p6, &m, 5).unwrap().unwrap();
        assert_eq!(path.vertices(), &[0, 1, 2, 3, 4, 5]);

        assert_eq!(
            find_augmenting_path_upto(&p4, &middle, 2),
            Err(MatchingError::EvenLengthBound { max_len: 2 })
        );
    }

    #[test]
    fn fast_k_maximality_examples() {
        let p4 = Graph::path(4);
        let maximum = Matching::new([(0, 1), (2, 3)]).unwrap();
        for k in 1..=4 {
            assert!(is_k_maximal_matching_fast(&p4, &maximum, k).unwrap());
        }
        let middle = Matching::new([(1, 2)]).unwrap();
        assert!(is_k_maximal_matching_fast(&p4, &middle, 1).unwrap());
        assert!(!is_k_maximal_matching_fast(&p4, &middle, 2).unwrap());
    }

    #[test]
    fn two_k_maximal_examples() {
        let p4 = Graph::path(4);
        let (a, b) = two_k_maximal_matchings(&p4, 1).unwrap().unwrap();
        assert_eq!(a, Matching::new([(0, 1), (2, 3)]).unwrap());
        assert_eq!(b, Matching::new([(1, 2)]).unwrap());
        assert_eq!(two_k_maximal_matchings(&p4, 2).unwrap(), None);

        let p6 = Graph::path(6);
        let (a, b) = two_k_maximal_matchings(&p6, 2).unwrap().unwrap();
        assert_eq!(a, Matching::new([(0, 1), (2, 3), (4, 5)]).unwrap());
        assert_eq!(b, Matching::new([(1, 2), (3, 4)]).unwrap());
    }

    #[test]
    fn two_k_maximal_agrees_with_checker_on_returned_pair() {
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (1, 4)])
            .unwrap();
        for k in 1..=3 {
            if let Some((a, b)) = two_k_maximal_matchings(&g, k).unwrap() {
                assert_ne!(a, b);
                for m in [&a, &b] {
                    assert!(is_k_maximal_matching_fast(&g, m, k).unwrap());
                    assert!(find_matching_improvement(&g, m, k).unwrap().is_none());
                }
            }
        }
    }

    #[test]
    fn no_edges_means_unique_empty_matching() {
        let g = Graph::empty(4);
        assert_eq!(two_k_maximal_matchings(&g, 2).unwrap(), None);
        assert_eq!(maximum_matching(&g), Matching::empty());
    }
}
