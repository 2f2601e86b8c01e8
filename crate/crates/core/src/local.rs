//! Definition-level local-optimality checkers.
//!
//! Each checker either returns an improving move witness or certifies
//! that the solution is locally optimal at level `k`:
//!
//! * maximization by swaps (independent set, clique, matching): remove
//!   at most `k-1` elements and add one more than was removed;
//! * minimization by swaps (vertex cover, dominating set, feedback
//!   vertex set): add at most `k-1` elements and remove one more than
//!   was added;
//! * single flips (cut weight, satisfied / NAE-satisfied clauses): move
//!   one vertex across the cut or flip one variable.
//!
//! An improving swap with a larger incoming surplus exists iff one with
//! surplus exactly one exists (feasibility of all six swap families is
//! preserved under shrinking the incoming set), so the checkers search
//! only surplus-one swaps; `oracle::raw` retains the literal any-surplus
//! scan for cross-validation.
//!
//! Enumeration order is fixed: the side bounded by `k-1` by increasing
//! size then lexicographically, the other side lexicographically; the
//! first improving witness is returned, which makes every search trace
//! reproducible.
//!
//! The cost of a level-`k` check grows like `n^O(k)`, so checkers refuse
//! `k > MAX_SWAP_K` unless the `_unbounded` variant is used.

use alloc::vec::Vec;
use core::fmt;

use crate::bitset;
use crate::cnf::{Assignment, CnfError, CnfFormula};
use crate::combo::Combinations;
use crate::graph::{Cut, Graph, GraphError, Matching, MultiGraph, UnionFind, VertexSet};

/// Largest swap level accepted by the guarded checker entry points.
pub const MAX_SWAP_K: usize = 6;

/// Errors from the local-optimality checkers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalError {
    /// `k` is zero or exceeds the guardrail.
    KOutOfRange { k: usize, max: usize },
    /// The solution fails the feasibility precondition.
    Infeasible { expected: &'static str },
    Graph(GraphError),
    Cnf(CnfError),
}

impl fmt::Display for LocalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalError::KOutOfRange { k, max } => {
                write!(f, "swap level k={k} outside supported range [1, {max}]")
            }
            LocalError::Infeasible { expected } => {
                write!(f, "solution is not {expected}")
            }
            LocalError::Graph(e) => write!(f, "{e}"),
            LocalError::Cnf(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for LocalError {}

impl From<GraphError> for LocalError {
    fn from(e: GraphError) -> Self {
        LocalError::Graph(e)
    }
}

impl From<CnfError> for LocalError {
    fn from(e: CnfError) -> Self {
        LocalError::Cnf(e)
    }
}

/// An improving vertex swap: the new solution is
/// `(current \ remove) ∪ add`. For maximization problems
/// `|add| = |remove| + 1`; for minimization problems
/// `|remove| = |add| + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SwapMove {
    pub remove: Vec<usize>,
    pub add: Vec<usize>,
}

/// An improving edge swap on a matching, with the same surplus
/// conventions as [`SwapMove`].
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EdgeSwapMove {
    pub remove: Vec<(usize, usize)>,
    pub add: Vec<(usize, usize)>,
}

/// An improving single-element flip: a vertex moved across a cut or a
/// variable whose assignment is flipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FlipMove {
    pub target: usize,
}

fn guard_k(k: usize) -> Result<(), LocalError> {
    if k == 0 || k > MAX_SWAP_K {
        Err(LocalError::KOutOfRange { k, max: MAX_SWAP_K })
    } else {
        Ok(())
    }
}

fn require_k_positive(k: usize) -> Result<(), LocalError> {
    if k == 0 {
        Err(LocalError::KOutOfRange { k, max: MAX_SWAP_K })
    } else {
        Ok(())
    }
}

/// Searches for an independent-set swap: remove `X ⊆ S` with
/// `|X| ≤ k-1`, add an independent `Y` disjoint from `S` with
/// `|Y| = |X| + 1`. Returns `None` iff `s` is k-maximal.
pub fn find_is_improvement(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<Option<SwapMove>, LocalError> {
    guard_k(k)?;
    find_is_improvement_unbounded(g, s, k)
}

/// [`find_is_improvement`] without the `k` guardrail.
pub fn find_is_improvement_unbounded(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<Option<SwapMove>, LocalError> {
    require_k_positive(k)?;
    if !g.is_independent_set(s)? {
        return Err(LocalError::Infeasible { expected: "an independent set" });
    }
    Ok(is_swap_search(g, s, k))
}

fn is_swap_search(g: &Graph, s: &VertexSet, k: usize) -> Option<SwapMove> {
    let n = g.vertex_count();
    let words = g.words();
    let smask = s.to_words(words);
    let members = s.as_slice();
    let mut retained = bitset::zeroed(words);
    let mut cand: Vec<usize> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut chosen_mask = bitset::zeroed(words);

    for out_size in 0..k.min(members.len() + 1) {
        let mut combos = Combinations::new(members.len(), out_size);
        while let Some(out_idx) = combos.next() {
            bitset::copy_into(&mut retained, &smask);
            for &i in out_idx {
                bitset::clear(&mut retained, members[i]);
            }
            // Only vertices with no neighbor among the retained members
            // can enter the solution.
            cand.clear();
            for v in 0..n {
                if !bitset::test(&smask, v) && bitset::disjoint(g.row(v), &retained) {
                    cand.push(v);
                }
            }
            if cand.len() <= out_size {
                continue;
            }
            chosen.clear();
            bitset::clear_all(&mut chosen_mask);
            if pick_independent(g, &cand, out_size + 1, 0, &mut chosen, &mut chosen_mask) {
                let remove = out_idx.iter().map(|&i| members[i]).collect();
                return Some(SwapMove { remove, add: chosen.clone() });
            }
        }
    }
    None
}

/// Lexicographically first independent `need`-subset of `cand`.
fn pick_independent(
    g: &Graph,
    cand: &[usize],
    need: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    chosen_mask: &mut [u64],
) -> bool {
    if chosen.len() == need {
        return true;
    }
    for i in start..cand.len() {
        if cand.len() - i < need - chosen.len() {
            return false;
        }
        let v = cand[i];
        if bitset::disjoint(g.row(v), chosen_mask) {
            chosen.push(v);
            bitset::set(chosen_mask, v);
            if pick_independent(g, cand, need, i + 1, chosen, chosen_mask) {
                return true;
            }
            chosen.pop();
            bitset::clear(chosen_mask, v);
        }
    }
    false
}

/// Clique analogue of [`find_is_improvement`]: delegates to the
/// independent-set search on the complement graph.
pub fn find_clique_improvement(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<Option<SwapMove>, LocalError> {
    guard_k(k)?;
    find_clique_improvement_unbounded(g, s, k)
}

/// [`find_clique_improvement`] without the `k` guardrail.
pub fn find_clique_improvement_unbounded(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<Option<SwapMove>, LocalError> {
    require_k_positive(k)?;
    if !g.is_clique(s)? {
        return Err(LocalError::Infeasible { expected: "a clique" });
    }
    Ok(is_swap_search(&g.complement(), s, k))
}

/// Searches for a vertex-cover swap: add `X ⊄ S` with `|X| ≤ k-1`,
/// remove `Y ⊆ S` with `|Y| = |X| + 1` while every edge stays covered.
/// Returns `None` iff `s` is a k-minimal vertex cover.
pub fn find_vc_improvement(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<Option<SwapMove>, LocalError> {
    guard_k(k)?;
    find_vc_improvement_unbounded(g, s, k)
}

/// [`find_vc_improvement`] without the `k` guardrail.
pub fn find_vc_improvement_unbounded(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<Option<SwapMove>, LocalError> {
    require_k_positive(k)?;
    if !g.is_vertex_cover(s)? {
        return Err(LocalError::Infeasible { expected: "a vertex cover" });
    }
    Ok(shrink_swap_search(g, s, k, &|g, base, removal| {
        // Removing `removal` keeps coverage iff each of its edges is
        // covered from the other side.
        bitset::subset(g.row(removal), base)
    }, &|_, _| true))
}

/// Searches for a dominating-set swap with the same shape as
/// [`find_vc_improvement`]. Returns `None` iff `d` is k-minimal.
pub fn find_ds_improvement(
    g: &Graph,
    d: &VertexSet,
    k: usize,
) -> Result<Option<SwapMove>, LocalError> {
    guard_k(k)?;
    find_ds_improvement_unbounded(g, d, k)
}

/// [`find_ds_improvement`] without the `k` guardrail.
pub fn find_ds_improvement_unbounded(
    g: &Graph,
    d: &VertexSet,
    k: usize,
) -> Result<Option<SwapMove>, LocalError> {
    require_k_positive(k)?;
    if !g.is_dominating_set(d)? {
        return Err(LocalError::Infeasible { expected: "a dominating set" });
    }
    Ok(shrink_swap_search(
        g,
        d,
        k,
        // Necessary: the removed vertex must still be dominated.
        &|g, base, removal| !bitset::disjoint(g.row(removal), base),
        &|g, base| {
            let words = g.words();
            let mut dominated = bitset::zeroed(words);
            for v in bitset::ones(base) {
                bitset::or_into(&mut dominated, g.row(v));
                bitset::set(&mut dominated, v);
            }
            (0..g.vertex_count()).all(|v| bitset::test(&dominated, v))
        },
    ))
}

/// Searches for a feedback-vertex-set swap with the same shape as
/// [`find_vc_improvement`]. Returns `None` iff `s` is k-minimal.
pub fn find_fvs_improvement(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<Option<SwapMove>, LocalError> {
    guard_k(k)?;
    find_fvs_improvement_unbounded(g, s, k)
}

/// [`find_fvs_improvement`] without the `k` guardrail.
pub fn find_fvs_improvement_unbounded(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<Option<SwapMove>, LocalError> {
    require_k_positive(k)?;
    if !g.is_feedback_vertex_set(s)? {
        return Err(LocalError::Infeasible { expected: "a feedback vertex set" });
    }
    Ok(shrink_swap_search(g, s, k, &|_, _, _| true, &|g, base| {
        let mut uf = UnionFind::new(g.vertex_count());
        for (u, v) in g.edges() {
            if bitset::test(base, u) || bitset::test(base, v) {
                continue;
            }
            if !uf.union(u, v) {
                return false;
            }
        }
        true
    }))
}

/// Shared search for the three shrinking problems. `base` passed to the
/// predicates is the candidate solution `(S \ Y) ∪ X` with the removal
/// under test already excluded. `removal_ok` is a sound partial filter
/// applied as `Y` grows; `feasible` is the full leaf check.
fn shrink_swap_search(
    g: &Graph,
    s: &VertexSet,
    k: usize,
    removal_ok: &dyn Fn(&Graph, &[u64], usize) -> bool,
    feasible: &dyn Fn(&Graph, &[u64]) -> bool,
) -> Option<SwapMove> {
    let n = g.vertex_count();
    let words = g.words();
    let smask = s.to_words(words);
    let members = s.as_slice();
    let outside: Vec<usize> = (0..n).filter(|&v| !s.contains(v)).collect();
    let mut base = bitset::zeroed(words);
    let mut removed: Vec<usize> = Vec::new();

    for in_size in 0..k.min(outside.len() + 1) {
        if in_size + 1 > members.len() {
            break;
        }
        let mut combos = Combinations::new(outside.len(), in_size);
        while let Some(in_idx) = combos.next() {
            bitset::copy_into(&mut base, &smask);
            for &i in in_idx {
                bitset::set(&mut base, outside[i]);
            }
            removed.clear();
            if pick_removals(g, members, in_size + 1, 0, &mut base, &mut removed, removal_ok, feasible)
            {
                let add = in_idx.iter().map(|&i| outside[i]).collect();
                return Some(SwapMove { remove: removed.clone(), add });
            }
        }
    }
    None
}

fn pick_removals(
    g: &Graph,
    members: &[usize],
    need: usize,
    start: usize,
    base: &mut [u64],
    removed: &mut Vec<usize>,
    removal_ok: &dyn Fn(&Graph, &[u64], usize) -> bool,
    feasible: &dyn Fn(&Graph, &[u64]) -> bool,
) -> bool {
    if removed.len() == need {
        return feasible(g, base);
    }
    for i in start..members.len() {
        if members.len() - i < need - removed.len() {
            return false;
        }
        let y = members[i];
        bitset::clear(base, y);
        if removal_ok(g, base, y) {
            removed.push(y);
            if pick_removals(g, members, need, i + 1, base, removed, removal_ok, feasible) {
                return true;
            }
            removed.pop();
        }
        bitset::set(base, y);
    }
    false
}

/// Searches for a matching edge swap: remove `X ⊆ M` with `|X| ≤ k-1`,
/// add edges `Y ⊆ E \ M` with `|Y| = |X| + 1` so the result is again a
/// matching. Returns `None` iff `m` is a k-maximal matching.
pub fn find_matching_improvement(
    g: &Graph,
    m: &Matching,
    k: usize,
) -> Result<Option<EdgeSwapMove>, LocalError> {
    guard_k(k)?;
    find_matching_improvement_unbounded(g, m, k)
}

/// [`find_matching_improvement`] without the `k` guardrail.
pub fn find_matching_improvement_unbounded(
    g: &Graph,
    m: &Matching,
    k: usize,
) -> Result<Option<EdgeSwapMove>, LocalError> {
    require_k_positive(k)?;
    if !g.is_matching(m)? {
        return Err(LocalError::Infeasible { expected: "a matching" });
    }
    let words = g.words();
    let all_edges: Vec<(usize, usize)> = g.edges().collect();
    let matched = m.edges();
    let mut covered = bitset::zeroed(words);
    let mut cand: Vec<(usize, usize)> = Vec::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new();

    for out_size in 0..k.min(matched.len() + 1) {
        let mut combos = Combinations::new(matched.len(), out_size);
        while let Some(out_idx) = combos.next() {
            bitset::clear_all(&mut covered);
            for (i, &(u, v)) in matched.iter().enumerate() {
                if !out_idx.contains(&i) {
                    bitset::set(&mut covered, u);
                    bitset::set(&mut covered, v);
                }
            }
            cand.clear();
            for &(u, v) in &all_edges {
                if !m.contains(u, v)
                    && !bitset::test(&covered, u)
                    && !bitset::test(&covered, v)
                {
                    cand.push((u, v));
                }
            }
            if cand.len() <= out_size {
                continue;
            }
            chosen.clear();
            let mut used = bitset::zeroed(words);
            if pick_disjoint_edges(&cand, out_size + 1, 0, &mut chosen, &mut used) {
                let remove = out_idx.iter().map(|&i| matched[i]).collect();
                return Ok(Some(EdgeSwapMove { remove, add: chosen.clone() }));
            }
        }
    }
    Ok(None)
}

fn pick_disjoint_edges(
    cand: &[(usize, usize)],
    need: usize,
    start: usize,
    chosen: &mut Vec<(usize, usize)>,
    used: &mut [u64],
) -> bool {
    if chosen.len() == need {
        return true;
    }
    for i in start..cand.len() {
        if cand.len() - i < need - chosen.len() {
            return false;
        }
        let (u, v) = cand[i];
        if !bitset::test(used, u) && !bitset::test(used, v) {
            chosen.push((u, v));
            bitset::set(used, u);
            bitset::set(used, v);
            if pick_disjoint_edges(cand, need, i + 1, chosen, used) {
                return true;
            }
            chosen.pop();
            bitset::clear(used, u);
            bitset::clear(used, v);
        }
    }
    false
}

/// Searches for a vertex whose side change strictly increases the cut
/// weight. The gain of moving `v` is its same-side incident
/// multiplicity minus its cross-side incident multiplicity. Returns
/// `None` iff the cut is stable.
pub fn find_cut_improvement(
    mg: &MultiGraph,
    c: &Cut,
) -> Result<Option<FlipMove>, LocalError> {
    if c.len() != mg.vertex_count() {
        return Err(LocalError::Graph(GraphError::SideCountMismatch {
            expected: mg.vertex_count(),
            found: c.len(),
        }));
    }
    for v in 0..mg.vertex_count() {
        let mut gain = 0i64;
        for &(w, mult) in mg.incident(v) {
            if c.in_x(w) == c.in_x(v) {
                gain += mult as i64;
            } else {
                gain -= mult as i64;
            }
        }
        if gain > 0 {
            return Ok(Some(FlipMove { target: v }));
        }
    }
    Ok(None)
}

/// First variable whose flip strictly increases the satisfied-clause
/// count. Returns `None` iff `a` is unflippable.
pub fn find_sat_flip(
    f: &CnfFormula,
    a: &Assignment,
) -> Result<Option<FlipMove>, LocalError> {
    for x in 0..f.num_vars() {
        if f.sat_delta(a, x)? > 0 {
            return Ok(Some(FlipMove { target: x }));
        }
    }
    Ok(None)
}

/// First variable whose flip strictly increases the NAE-satisfied
/// clause count. Returns `None` iff `a` is NAE-unflippable.
pub fn find_nae_flip(
    f: &CnfFormula,
    a: &Assignment,
) -> Result<Option<FlipMove>, LocalError> {
    for x in 0..f.num_vars() {
        if f.nae_delta(a, x)? > 0 {
            return Ok(Some(FlipMove { target: x }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::{Clause, Literal};
    use alloc::vec;

    fn vs(ids: &[usize]) -> VertexSet {
        VertexSet::new(ids.iter().copied())
    }

    #[test]
    fn is_improvement_examples() {
        let p3 = Graph::path(3);
        let mv = find_is_improvement(&p3, &vs(&[1]), 2).unwrap().unwrap();
        assert_eq!(mv, SwapMove { remove: vec![1], add: vec![0, 2] });

        let k3 = Graph::complete(3);
        assert_eq!(find_is_improvement(&k3, &vs(&[0]), 2).unwrap(), None);

        let empty3 = Graph::empty(3);
        for k in 1..=3 {
            assert_eq!(find_is_improvement(&empty3, &vs(&[0, 1, 2]), k).unwrap(), None);
        }
    }

    #[test]
    fn is_improvement_rejects_infeasible_and_bad_k() {
        let k3 = Graph::complete(3);
        assert_eq!(
            find_is_improvement(&k3, &vs(&[0, 1]), 2),
            Err(LocalError::Infeasible { expected: "an independent set" })
        );
        assert_eq!(
            find_is_improvement(&k3, &vs(&[0]), 0),
            Err(LocalError::KOutOfRange { k: 0, max: MAX_SWAP_K })
        );
        assert_eq!(
            find_is_improvement(&k3, &vs(&[0]), 7),
            Err(LocalError::KOutOfRange { k: 7, max: MAX_SWAP_K })
        );
        assert!(find_is_improvement_unbounded(&k3, &vs(&[0]), 7).unwrap().is_none());
    }

    #[test]
    fn clique_improvement_examples() {
        // Complement of P3: edge {0,2} plus isolated 1.
        let g = Graph::new(3, &[(0, 2)]).unwrap();
        let mv = find_clique_improvement(&g, &vs(&[1]), 2).unwrap().unwrap();
        assert_eq!(mv, SwapMove { remove: vec![1], add: vec![0, 2] });

        // Complement of K3 is empty; {0} stays 2-maximal there.
        let e3 = Graph::empty(3);
        assert_eq!(find_clique_improvement(&e3, &vs(&[0]), 2).unwrap(), None);

        let k3 = Graph::complete(3);
        assert_eq!(find_clique_improvement(&k3, &vs(&[0, 1, 2]), 2).unwrap(), None);
    }

    #[test]
    fn vc_improvement_examples() {
        let p3 = Graph::path(3);
        let mv = find_vc_improvement(&p3, &vs(&[0, 1, 2]), 1).unwrap().unwrap();
        assert_eq!(mv, SwapMove { remove: vec![0], add: vec![] });

        assert_eq!(find_vc_improvement(&p3, &vs(&[1]), 2).unwrap(), None);

        let k3 = Graph::complete(3);
        assert_eq!(find_vc_improvement(&k3, &vs(&[0, 1]), 2).unwrap(), None);
    }

    #[test]
    fn ds_improvement_examples() {
        let star = Graph::new(3, &[(0, 1), (0, 2)]).unwrap();
        let mv = find_ds_improvement(&star, &vs(&[0, 1]), 1).unwrap().unwrap();
        assert_eq!(mv, SwapMove { remove: vec![1], add: vec![] });

        assert_eq!(find_ds_improvement(&star, &vs(&[0]), 2).unwrap(), None);

        let p3 = Graph::path(3);
        assert_eq!(find_ds_improvement(&p3, &vs(&[1]), 2).unwrap(), None);
    }

    #[test]
    fn fvs_improvement_examples() {
        let c4 = Graph::cycle(4);
        let mv = find_fvs_improvement(&c4, &vs(&[0, 2]), 1).unwrap().unwrap();
        assert_eq!(mv.remove.len(), 1);
        assert_eq!(mv.add.len(), 0);

        assert_eq!(find_fvs_improvement(&c4, &vs(&[0]), 2).unwrap(), None);

        let forest = Graph::path(5);
        assert_eq!(find_fvs_improvement(&forest, &VertexSet::empty(), 2).unwrap(), None);
    }

    #[test]
    fn matching_improvement_examples() {
        let p4 = Graph::path(4);
        let middle = Matching::new([(1, 2)]).unwrap();
        let mv = find_matching_improvement(&p4, &middle, 2).unwrap().unwrap();
        assert_eq!(
            mv,
            EdgeSwapMove { remove: vec![(1, 2)], add: vec![(0, 1), (2, 3)] }
        );

        let maximum = Matching::new([(0, 1), (2, 3)]).unwrap();
        for k in 1..=3 {
            assert_eq!(find_matching_improvement(&p4, &maximum, k).unwrap(), None);
        }

        assert_eq!(find_matching_improvement(&p4, &middle, 1).unwrap(), None);
    }

    #[test]
    fn cut_improvement_examples() {
        let c4 = MultiGraph::from_graph(&Graph::cycle(4));
        let lopsided = Cut::unordered(vec![true, false, false, false]);
        let mv = find_cut_improvement(&c4, &lopsided).unwrap().unwrap();
        assert_eq!(mv.target, 2);
        let improved = lopsided.flip_vertex(2);
        assert!(c4.cut_weight(&improved).unwrap() > c4.cut_weight(&lopsided).unwrap());

        let bipartition = Cut::unordered(vec![true, false, true, false]);
        assert_eq!(find_cut_improvement(&c4, &bipartition).unwrap(), None);

        let k3 = MultiGraph::from_graph(&Graph::complete(3));
        let cut = Cut::unordered(vec![true, false, false]);
        assert_eq!(find_cut_improvement(&k3, &cut).unwrap(), None);
    }

    #[test]
    fn sat_flip_examples() {
        let triple = CnfFormula::with_repeats(
            1,
            &[(Clause::positive([0]).unwrap(), 3)],
        )
        .unwrap();
        let mv = find_sat_flip(&triple, &Assignment::all_false(1)).unwrap().unwrap();
        assert_eq!(mv.target, 0);

        let f = CnfFormula::new(
            2,
            vec![
                Clause::positive([0, 1]).unwrap(),
                Clause::new([Literal::negative(0), Literal::negative(1)]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(
            find_sat_flip(&f, &Assignment::new(vec![true, false])).unwrap(),
            None
        );
        assert!(find_sat_flip(&f, &Assignment::all_true(2)).unwrap().is_some());
    }

    #[test]
    fn nae_flip_examples() {
        let f = CnfFormula::new(2, vec![Clause::positive([0, 1]).unwrap()]).unwrap();
        assert!(find_nae_flip(&f, &Assignment::all_true(2)).unwrap().is_some());
        assert_eq!(
            find_nae_flip(&f, &Assignment::new(vec![true, false])).unwrap(),
            None
        );

        let f3 = CnfFormula::new(3, vec![Clause::positive([0, 1, 2]).unwrap()]).unwrap();
        assert_eq!(
            find_nae_flip(&f3, &Assignment::new(vec![true, true, false])).unwrap(),
            None
        );
    }

    #[test]
    fn cut_stability_is_side_symmetric() {
        let mg = MultiGraph::new(4, &[(0, 1, 2), (1, 2, 1), (2, 3, 3), (0, 3, 1)]).unwrap();
        for code in 0..16u32 {
            let sides: Vec<bool> = (0..4).map(|i| code >> i & 1 == 1).collect();
            let cut = Cut::ordered(sides);
            let stable = find_cut_improvement(&mg, &cut).unwrap().is_none();
            let flipped = find_cut_improvement(&mg, &cut.flipped()).unwrap().is_none();
            assert_eq!(stable, flipped);
        }
    }
}
