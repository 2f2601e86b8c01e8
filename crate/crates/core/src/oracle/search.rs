//! Candidate generation behind the oracle entry points.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::bitset;
use crate::climb::ProblemKind;
use crate::cnf::{Assignment, CnfFormula};
use crate::graph::{Cut, Graph, Matching, MultiGraph, VertexSet};

use super::raw_impl;
use super::{EnumerationBudget, OracleError};

/// Bron–Kerbosch with pivoting over an explicit adjacency bit matrix.
/// Reports every maximal clique of the given adjacency; passing the
/// complement adjacency reports every maximal independent set.
fn bron_kerbosch(
    adj: &[Vec<u64>],
    n: usize,
    words: usize,
    visit: &mut dyn FnMut(&[u64]) -> ControlFlow<()>,
) {
    let mut r = bitset::zeroed(words);
    let mut p = bitset::zeroed(words);
    let x = bitset::zeroed(words);
    for v in 0..n {
        bitset::set(&mut p, v);
    }
    let _ = bk_rec(adj, &mut r, p, x, visit);
}

fn bk_rec(
    adj: &[Vec<u64>],
    r: &mut [u64],
    p: Vec<u64>,
    x: Vec<u64>,
    visit: &mut dyn FnMut(&[u64]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if bitset::is_empty(&p) && bitset::is_empty(&x) {
        return visit(r);
    }
    // Pivot: the vertex of P ∪ X with the most neighbors inside P.
    let pivot = bitset::ones(&p)
        .chain(bitset::ones(&x))
        .max_by_key(|&u| p.iter().zip(&adj[u]).map(|(pw, aw)| (pw & aw).count_ones()).sum::<u32>())
        .expect("P ∪ X is nonempty here");
    let mut candidates = p.clone();
    bitset::and_not_into(&mut candidates, &adj[pivot]);
    let mut p = p;
    let mut x = x;
    for v in bitset::ones(&candidates).collect::<Vec<_>>() {
        bitset::set(r, v);
        let mut p_next = p.clone();
        bitset::and_into(&mut p_next, &adj[v]);
        let mut x_next = x.clone();
        bitset::and_into(&mut x_next, &adj[v]);
        bk_rec(adj, r, p_next, x_next, visit)?;
        bitset::clear(r, v);
        bitset::clear(&mut p, v);
        bitset::set(&mut x, v);
    }
    ControlFlow::Continue(())
}

fn adjacency_matrix(g: &Graph) -> Vec<Vec<u64>> {
    (0..g.vertex_count()).map(|v| g.row(v).to_vec()).collect()
}

fn complement_matrix(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.vertex_count();
    let words = g.words();
    let mut full = bitset::zeroed(words);
    for v in 0..n {
        bitset::set(&mut full, v);
    }
    (0..n)
        .map(|v| {
            let mut row: Vec<u64> = g.row(v).iter().zip(&full).map(|(a, f)| !a & f).collect();
            bitset::clear(&mut row, v);
            row
        })
        .collect()
}

/// Visits every maximal independent set of `g` as a bitset.
pub(super) fn for_each_maximal_independent_set(
    g: &Graph,
    visit: &mut dyn FnMut(&[u64]) -> ControlFlow<()>,
) {
    let comp = complement_matrix(g);
    bron_kerbosch(&comp, g.vertex_count(), g.words(), visit);
}

fn for_each_maximal_clique(g: &Graph, visit: &mut dyn FnMut(&[u64]) -> ControlFlow<()>) {
    let adj = adjacency_matrix(g);
    bron_kerbosch(&adj, g.vertex_count(), g.words(), visit);
}

/// Collects candidates passing `keep`, stopping at `limit`.
struct Collector<T> {
    out: Vec<T>,
    limit: Option<usize>,
}

impl<T> Collector<T> {
    fn new(limit: Option<usize>) -> Self {
        Collector { out: Vec::new(), limit }
    }

    fn full(&self) -> bool {
        self.limit.is_some_and(|l| self.out.len() >= l)
    }

    fn push(&mut self, item: T) -> ControlFlow<()> {
        if self.full() {
            return ControlFlow::Break(());
        }
        self.out.push(item);
        if self.full() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }
}

/// Local optima of the five vertex-subset problems.
pub(super) fn enumerate_vertex_optima(
    problem: ProblemKind,
    g: &Graph,
    k: usize,
    limit: Option<usize>,
) -> Vec<VertexSet> {
    let mut found = Collector::new(limit);
    if found.full() {
        return found.out;
    }
    match problem {
        ProblemKind::IndependentSet => {
            for_each_maximal_independent_set(g, &mut |mask| {
                let s = VertexSet::from_words(mask);
                if raw_impl::k_maximal_is_filter(g, &s, k) {
                    found.push(s)
                } else {
                    ControlFlow::Continue(())
                }
            });
        }
        ProblemKind::Clique => {
            for_each_maximal_clique(g, &mut |mask| {
                let s = VertexSet::from_words(mask);
                if raw_impl::k_maximal_clique_filter(g, &s, k) {
                    found.push(s)
                } else {
                    ControlFlow::Continue(())
                }
            });
        }
        ProblemKind::VertexCover => {
            // Minimal vertex covers are exactly the complements of
            // maximal independent sets.
            let n = g.vertex_count();
            for_each_maximal_independent_set(g, &mut |mask| {
                let cover = VertexSet::from_words(mask).complement(n);
                if raw_impl::is_k_minimal_vertex_cover(g, &cover, k).unwrap_or(false) {
                    found.push(cover)
                } else {
                    ControlFlow::Continue(())
                }
            });
        }
        ProblemKind::DominatingSet => {
            for cand in minimal_dominating_candidates(g) {
                let s = VertexSet::from_words(&cand);
                if raw_impl::is_k_minimal_dominating_set(g, &s, k).unwrap_or(false) {
                    if found.push(s).is_break() {
                        break;
                    }
                }
            }
        }
        ProblemKind::FeedbackVertexSet => {
            for cand in minimal_fvs_candidates(g) {
                let s = VertexSet::from_words(&cand);
                if raw_impl::is_k_minimal_feedback_vertex_set(g, &s, k).unwrap_or(false) {
                    if found.push(s).is_break() {
                        break;
                    }
                }
            }
        }
        _ => unreachable!("vertex problems only"),
    }
    found.out
}

/// Every minimal dominating set is produced by repeatedly choosing the
/// lowest undominated vertex and adding one member of its closed
/// neighborhood, so branching over those choices (with deduplication)
/// yields a complete candidate pool.
fn minimal_dominating_candidates(g: &Graph) -> BTreeSet<Vec<u64>> {
    let n = g.vertex_count();
    let words = g.words();
    let mut leaves = BTreeSet::new();
    let mut seen = BTreeSet::new();
    let mut chosen = bitset::zeroed(words);
    let mut dominated = bitset::zeroed(words);
    ds_branch(g, n, &mut chosen, &mut dominated, &mut seen, &mut leaves);
    leaves
}

fn ds_branch(
    g: &Graph,
    n: usize,
    chosen: &mut Vec<u64>,
    dominated: &mut Vec<u64>,
    seen: &mut BTreeSet<Vec<u64>>,
    leaves: &mut BTreeSet<Vec<u64>>,
) {
    let Some(u) = (0..n).find(|&v| !bitset::test(dominated, v)) else {
        leaves.insert(chosen.clone());
        return;
    };
    let mut options: Vec<usize> = g.neighbors(u).to_vec();
    options.push(u);
    options.sort_unstable();
    for w in options {
        bitset::set(chosen, w);
        if seen.insert(chosen.clone()) {
            let saved = dominated.clone();
            bitset::or_into(dominated, g.row(w));
            bitset::set(dominated, w);
            ds_branch(g, n, chosen, dominated, seen, leaves);
            *dominated = saved;
        }
        bitset::clear(chosen, w);
    }
}

/// Every feedback vertex set hits every cycle, so branching on the
/// vertices of a shortest remaining cycle (with deduplication) yields a
/// candidate pool containing all minimal feedback vertex sets.
fn minimal_fvs_candidates(g: &Graph) -> BTreeSet<Vec<u64>> {
    let words = g.words();
    let mut leaves = BTreeSet::new();
    let mut seen = BTreeSet::new();
    let mut removed = bitset::zeroed(words);
    fvs_branch(g, &mut removed, &mut seen, &mut leaves);
    leaves
}

fn fvs_branch(
    g: &Graph,
    removed: &mut Vec<u64>,
    seen: &mut BTreeSet<Vec<u64>>,
    leaves: &mut BTreeSet<Vec<u64>>,
) {
    let Some(cycle) = shortest_cycle_avoiding(g, removed) else {
        leaves.insert(removed.clone());
        return;
    };
    for v in cycle {
        bitset::set(removed, v);
        if seen.insert(removed.clone()) {
            fvs_branch(g, removed, seen, leaves);
        }
        bitset::clear(removed, v);
    }
}

/// A shortest cycle in the graph induced on the vertices outside
/// `removed`: for each remaining edge, the edge plus a shortest path
/// between its endpoints that avoids the edge itself.
fn shortest_cycle_avoiding(g: &Graph, removed: &[u64]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut prev = vec![usize::MAX; n];
    let mut queue = Vec::new();
    for (u, v) in g.edges() {
        if bitset::test(removed, u) || bitset::test(removed, v) {
            continue;
        }
        // BFS from u to v without using the edge {u, v}.
        dist.fill(usize::MAX);
        prev.fill(usize::MAX);
        queue.clear();
        dist[u] = 0;
        queue.push(u);
        let mut head = 0;
        'bfs: while head < queue.len() {
            let w = queue[head];
            head += 1;
            for &t in g.neighbors(w) {
                if bitset::test(removed, t) || dist[t] != usize::MAX {
                    continue;
                }
                if w == u && t == v {
                    continue;
                }
                dist[t] = dist[w] + 1;
                prev[t] = w;
                if t == v {
                    break 'bfs;
                }
                queue.push(t);
            }
        }
        if dist[v] == usize::MAX {
            continue;
        }
        let mut cycle = Vec::with_capacity(dist[v] + 1);
        let mut w = v;
        while w != usize::MAX {
            cycle.push(w);
            w = prev[w];
        }
        if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
            best = Some(cycle);
        }
    }
    best
}

/// Visits every matching of `g` (including the empty one) as an index
/// set into `edges`.
fn for_each_matching(
    g: &Graph,
    edges: &[(usize, usize)],
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let mut covered = bitset::zeroed(g.words());
    let mut picked: Vec<usize> = Vec::new();
    matching_rec(edges, 0, &mut covered, &mut picked, visit)
}

fn matching_rec(
    edges: &[(usize, usize)],
    from: usize,
    covered: &mut [u64],
    picked: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    visit(picked)?;
    for i in from..edges.len() {
        let (u, v) = edges[i];
        if bitset::test(covered, u) || bitset::test(covered, v) {
            continue;
        }
        bitset::set(covered, u);
        bitset::set(covered, v);
        picked.push(i);
        let flow = matching_rec(edges, i + 1, covered, picked, visit);
        picked.pop();
        bitset::clear(covered, u);
        bitset::clear(covered, v);
        flow?;
    }
    ControlFlow::Continue(())
}

pub(super) fn enumerate_k_maximal_matchings(
    g: &Graph,
    k: usize,
    limit: Option<usize>,
) -> Vec<Matching> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut found = Collector::new(limit);
    if found.full() {
        return found.out;
    }
    let _ = for_each_matching(g, &edges, &mut |picked| {
        // Maximality first: some edge with both endpoints free would
        // extend the matching.
        let m = Matching::new(picked.iter().map(|&i| edges[i]))
            .expect("graph edges are valid matching pairs");
        let extendable = edges
            .iter()
            .any(|&(u, v)| !m.covers(u) && !m.covers(v));
        if extendable {
            return ControlFlow::Continue(());
        }
        if raw_impl::k_maximal_matching_filter(g, &edges, &m, k) {
            found.push(m)
        } else {
            ControlFlow::Continue(())
        }
    });
    found.out
}

pub(super) fn enumerate_maximum_matchings(g: &Graph) -> Vec<Matching> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best: Vec<Matching> = vec![Matching::empty()];
    let mut best_size = 0usize;
    let _ = for_each_matching(g, &edges, &mut |picked| {
        if picked.len() > best_size {
            best_size = picked.len();
            best.clear();
        }
        if picked.len() == best_size {
            best.push(
                Matching::new(picked.iter().map(|&i| edges[i]))
                    .expect("graph edges are valid matching pairs"),
            );
        }
        ControlFlow::Continue(())
    });
    best
}

/// Cap on the subset dynamic program of [`count_maximum_matchings`],
/// which needs `O(2^n)` memory.
pub(crate) const MAX_COUNT_VERTICES: usize = 20;

/// Maximum matching size and the number of matchings attaining it,
/// computed by dynamic programming over vertex subsets — an
/// enumeration-free second route for cross-checking the matching
/// algorithms.
pub fn count_maximum_matchings(g: &Graph) -> Result<(usize, u64), OracleError> {
    let budget = EnumerationBudget {
        max_vertices: MAX_COUNT_VERTICES,
        ..EnumerationBudget::default()
    };
    count_maximum_matchings_with(g, &budget)
}

/// [`count_maximum_matchings`] with an explicit budget; memory grows as
/// `O(2^n)` words.
pub fn count_maximum_matchings_with(
    g: &Graph,
    budget: &EnumerationBudget,
) -> Result<(usize, u64), OracleError> {
    let n = g.vertex_count();
    if n > budget.max_vertices {
        return Err(OracleError::BudgetExceeded {
            what: "vertex count",
            size: n,
            max: budget.max_vertices,
        });
    }
    if n == 0 {
        return Ok((0, 1));
    }
    let full = 1usize << n;
    let mut size = vec![0u8; full];
    let mut ways = vec![0u64; full];
    ways[0] = 1;
    for mask in 1..full {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        // Either v stays unmatched or is matched to a neighbor in mask.
        let mut best = size[rest];
        for &u in g.neighbors(v) {
            if mask >> u & 1 == 1 {
                let sub = rest & !(1 << u);
                best = best.max(size[sub] + 1);
            }
        }
        let mut count = 0u64;
        if size[rest] == best {
            count += ways[rest];
        }
        for &u in g.neighbors(v) {
            if mask >> u & 1 == 1 {
                let sub = rest & !(1 << u);
                if size[sub] + 1 == best {
                    count += ways[sub];
                }
            }
        }
        size[mask] = best;
        ways[mask] = count;
    }
    Ok((size[full - 1] as usize, ways[full - 1]))
}

/// Stable cuts by scanning all side vectors; for unordered cuts only
/// canonical representatives are visited.
pub(super) fn enumerate_stable_cuts(
    mg: &MultiGraph,
    ordered: bool,
    limit: Option<usize>,
) -> Vec<Cut> {
    let n = mg.vertex_count();
    assert!(n < usize::BITS as usize, "budget check bounds n");
    let mut found = Collector::new(limit);
    if found.full() {
        return found.out;
    }
    for mask in 0usize..1 << n {
        if !ordered && n > 0 {
            // Canonical representatives: vertex 0 on side X, with the
            // trivial split written as all-false.
            let all_true = mask == (1 << n) - 1;
            let canonical = mask == 0 || (mask & 1 == 1 && !all_true);
            if !canonical {
                continue;
            }
        }
        if mask_cut_is_stable(mg, mask) {
            let sides: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            let cut = if ordered { Cut::ordered(sides) } else { Cut::unordered(sides) };
            if found.push(cut).is_break() {
                break;
            }
        }
    }
    found.out
}

fn mask_cut_is_stable(mg: &MultiGraph, mask: usize) -> bool {
    for v in 0..mg.vertex_count() {
        let side_v = mask >> v & 1;
        let mut gain = 0i64;
        for &(w, mult) in mg.incident(v) {
            if mask >> w & 1 == side_v {
                gain += mult as i64;
            } else {
                gain -= mult as i64;
            }
        }
        if gain > 0 {
            return false;
        }
    }
    true
}

/// Unflippable (or NAE-unflippable) assignments by scanning all truth
/// tables, using per-clause true-literal counts for the flip deltas.
pub(super) fn enumerate_unflippable(
    f: &CnfFormula,
    nae: bool,
    limit: Option<usize>,
) -> Vec<Assignment> {
    let vars = f.num_vars();
    assert!(vars < u64::BITS as usize, "budget check bounds the variable count");
    let mut found = Collector::new(limit);
    if found.full() {
        return found.out;
    }
    let mut counts: Vec<usize> = Vec::with_capacity(f.clause_count());
    for mask in 0u64..1 << vars {
        counts.clear();
        counts.extend(f.clauses().iter().map(|c| {
            c.literals().iter().filter(|l| (mask >> l.var & 1 == 1) != l.negated).count()
        }));
        if mask_is_unflippable(f, mask, nae, &counts) {
            if found.push(Assignment::from_bits(vars, mask)).is_break() {
                break;
            }
        }
    }
    found.out
}

fn mask_is_unflippable(f: &CnfFormula, mask: u64, nae: bool, counts: &[usize]) -> bool {
    for x in 0..f.num_vars() {
        let mut delta = 0i64;
        for &ci in f.occurrences(x) {
            let clause = &f.clauses()[ci];
            let len = clause.len();
            let t = counts[ci];
            let lit = clause
                .literals()
                .iter()
                .find(|l| l.var == x)
                .expect("occurrence index is consistent");
            let lit_true = (mask >> x & 1 == 1) != lit.negated;
            let t_after = if lit_true { t - 1 } else { t + 1 };
            let (sat, sat_after) = if nae {
                (t > 0 && t < len, t_after > 0 && t_after < len)
            } else {
                (t > 0, t_after > 0)
            };
            delta += sat_after as i64 - sat as i64;
        }
        if delta > 0 {
            return false;
        }
    }
    true
}

/// See [`super::solve_mise`]; `x` has been validated independent.
pub(super) fn solve_mise(g: &Graph, x: &VertexSet) -> Option<VertexSet> {
    let (sub, old_ids) = g.induced_without(x);
    let mut result = None;
    for_each_maximal_independent_set(&sub, &mut |mask| {
        let d = VertexSet::new(bitset::ones(mask).map(|v| old_ids[v]));
        // Maximal in g iff additionally every excluded vertex of x is
        // dominated by d.
        let dominated = x.iter().all(|v| g.neighbors(v).iter().any(|&u| d.contains(u)));
        if dominated {
            result = Some(d);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::climb::{Instance, Solution};
    use crate::oracle::{
        count_at_least, enumerate_local_optima, enumerate_maximum_matchings,
        enumerate_stable_cuts as enumerate_cuts_api, solve_mise as solve_mise_api,
    };

    fn vs(ids: &[usize]) -> VertexSet {
        VertexSet::new(ids.iter().copied())
    }

    #[test]
    fn enumerate_is_examples() {
        let p3 = Instance::Graph(Graph::path(3));
        let got = enumerate_local_optima(ProblemKind::IndependentSet, &p3, 2, None).unwrap();
        assert_eq!(got.solutions, vec![Solution::Vertices(vs(&[0, 2]))]);

        let k3 = Instance::Graph(Graph::complete(3));
        let got = enumerate_local_optima(ProblemKind::IndependentSet, &k3, 2, None).unwrap();
        assert_eq!(
            got.solutions,
            vec![
                Solution::Vertices(vs(&[0])),
                Solution::Vertices(vs(&[1])),
                Solution::Vertices(vs(&[2])),
            ]
        );
    }

    #[test]
    fn enumerate_unordered_cuts_example() {
        let c4 = Instance::MultiGraph(MultiGraph::from_graph(&Graph::cycle(4)));
        let got = enumerate_local_optima(ProblemKind::MaxCut, &c4, 1, None).unwrap();
        assert_eq!(got.len(), 3);
        let bipartition = Cut::unordered(vec![true, false, true, false]);
        assert!(got.contains(&Solution::Cut(bipartition)));
    }

    #[test]
    fn count_at_least_examples() {
        let p3 = Instance::Graph(Graph::path(3));
        assert!(!count_at_least(ProblemKind::IndependentSet, &p3, 2, 2).unwrap());
        let k3 = Instance::Graph(Graph::complete(3));
        assert!(count_at_least(ProblemKind::IndependentSet, &k3, 2, 2).unwrap());
        // Any formula with a non-unit clause has a NAE optimum and its
        // complement.
        let f = CnfFormula::new(2, vec![crate::cnf::Clause::positive([0, 1]).unwrap()]).unwrap();
        assert!(count_at_least(ProblemKind::MaxNaeSat, &Instance::Formula(f), 1, 2).unwrap());
    }

    #[test]
    fn solve_mise_examples() {
        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(solve_mise_api(&edge, &vs(&[0])).unwrap(), Some(vs(&[1])));

        let p4 = Graph::path(4);
        assert_eq!(solve_mise_api(&p4, &vs(&[0, 3])).unwrap(), None);

        let p3 = Graph::path(3);
        assert_eq!(solve_mise_api(&p3, &vs(&[0, 2])).unwrap(), Some(vs(&[1])));
    }

    #[test]
    fn maximum_matching_enumeration_examples() {
        let p4 = Graph::path(4);
        let got = enumerate_maximum_matchings(&p4).unwrap();
        assert_eq!(
            got.solutions,
            vec![Solution::Edges(Matching::new([(0, 1), (2, 3)]).unwrap())]
        );

        let p6 = Graph::path(6);
        let got = enumerate_maximum_matchings(&p6).unwrap();
        assert_eq!(got.len(), 1);

        let c4 = Graph::cycle(4);
        let got = enumerate_maximum_matchings(&c4).unwrap();
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn count_maximum_matchings_matches_enumeration() {
        for g in [Graph::path(4), Graph::cycle(5), Graph::complete(4), Graph::cycle(6)] {
            let list = enumerate_maximum_matchings(&g).unwrap();
            let size = match &list.solutions[0] {
                Solution::Edges(m) => m.len(),
                _ => unreachable!(),
            };
            assert_eq!(count_maximum_matchings(&g).unwrap(), (size, list.len() as u64));
        }
    }

    #[test]
    fn ordered_and_unordered_cut_counts() {
        let mg = MultiGraph::from_graph(&Graph::cycle(4));
        let unordered = enumerate_cuts_api(&mg, false, None).unwrap();
        let ordered = enumerate_cuts_api(&mg, true, None).unwrap();
        // Every nontrivial unordered stable cut has two orientations.
        assert_eq!(ordered.len(), 2 * unordered.len());
    }

    #[test]
    fn monotone_in_k() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let inst = Instance::Graph(g);
        let mut prev: Option<Vec<Solution>> = None;
        for k in (1..=3).rev() {
            let cur =
                enumerate_local_optima(ProblemKind::IndependentSet, &inst, k, None).unwrap();
            if let Some(prev) = &prev {
                for s in prev {
                    assert!(cur.solutions.contains(s), "k-maximal must stay (k-1)-maximal");
                }
            }
            prev = Some(cur.solutions);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = Instance::Graph(Graph::empty(30));
        let err = enumerate_local_optima(ProblemKind::IndependentSet, &g, 1, None).unwrap_err();
        assert!(matches!(err, OracleError::BudgetExceeded { .. }));
    }
}
