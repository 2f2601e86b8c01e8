//! Literal swap/flip optimality tests.
//!
//! These deliberately avoid the production checkers' incremental
//! candidate construction: the base tests prefilter the incoming
//! candidates with the sound membership conditions and then scan plain
//! combinations; the `_all_sizes` tests scan every incoming subset the
//! definitions quantify over and evaluate feasibility with the public
//! graph predicates. Both routes are exponential and meant for oracle
//! filtering and cross-validation at small sizes.

use alloc::vec::Vec;

use crate::bitset;
use crate::cnf::{Assignment, CnfFormula};
use crate::combo::Combinations;
use crate::graph::{Cut, Graph, GraphError, Matching, MultiGraph, UnionFind, VertexSet};

use super::OracleError;

fn require_k(k: usize) -> Result<(), OracleError> {
    if k == 0 {
        Err(OracleError::KZero)
    } else {
        Ok(())
    }
}

/// True iff no swap removing at most `k-1` members of `s` and adding
/// one more incoming vertex yields a larger independent set.
pub fn is_k_maximal_independent_set(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<bool, OracleError> {
    require_k(k)?;
    if !g.is_independent_set(s)? {
        return Err(OracleError::Infeasible { expected: "an independent set" });
    }
    Ok(k_maximal_is_filter(g, s, k))
}

pub(super) fn k_maximal_is_filter(g: &Graph, s: &VertexSet, k: usize) -> bool {
    let n = g.vertex_count();
    let words = g.words();
    let smask = s.to_words(words);
    let members = s.as_slice();
    let mut retained = bitset::zeroed(words);
    let mut cand: Vec<usize> = Vec::new();
    for out_size in 0..k.min(members.len() + 1) {
        let mut combos = Combinations::new(members.len(), out_size);
        while let Some(out_idx) = combos.next() {
            bitset::copy_into(&mut retained, &smask);
            for &i in out_idx {
                bitset::clear(&mut retained, members[i]);
            }
            cand.clear();
            cand.extend(
                (0..n).filter(|&v| {
                    !bitset::test(&smask, v) && bitset::disjoint(g.row(v), &retained)
                }),
            );
            if has_independent_subset(g, &cand, out_size + 1) {
                return false;
            }
        }
    }
    true
}

fn has_independent_subset(g: &Graph, cand: &[usize], size: usize) -> bool {
    if cand.len() < size {
        return false;
    }
    let mut combos = Combinations::new(cand.len(), size);
    while let Some(idx) = combos.next() {
        let ok = idx.iter().enumerate().all(|(a, &i)| {
            idx[a + 1..].iter().all(|&j| !g.has_edge(cand[i], cand[j]))
        });
        if ok {
            return true;
        }
    }
    false
}

/// The literal form of [`is_k_maximal_independent_set`]: the incoming
/// set ranges over every subset of the outside vertices larger than the
/// outgoing set. Exponential in the number of outside vertices.
pub fn is_k_maximal_independent_set_all_sizes(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<bool, OracleError> {
    require_k(k)?;
    if !g.is_independent_set(s)? {
        return Err(OracleError::Infeasible { expected: "an independent set" });
    }
    let feasible = |candidate: &VertexSet| g.is_independent_set(candidate).unwrap_or(false);
    Ok(grow_swap_all_sizes(g.vertex_count(), s, k, &feasible))
}

/// Shared literal scan for the growing problems: some `X ⊆ s` with
/// `|X| <= k-1` and `Y` outside `s` with `|Y| >= |X|+1` makes
/// `(s \ X) ∪ Y` feasible iff the scan returns false.
fn grow_swap_all_sizes(
    n: usize,
    s: &VertexSet,
    k: usize,
    feasible: &dyn Fn(&VertexSet) -> bool,
) -> bool {
    let members = s.as_slice();
    let outside: Vec<usize> = (0..n).filter(|&v| !s.contains(v)).collect();
    for out_size in 0..k.min(members.len() + 1) {
        let mut out_combos = Combinations::new(members.len(), out_size);
        while let Some(out_idx) = out_combos.next() {
            let removed: Vec<usize> = out_idx.iter().map(|&i| members[i]).collect();
            for in_size in out_size + 1..=outside.len() {
                let mut in_combos = Combinations::new(outside.len(), in_size);
                while let Some(in_idx) = in_combos.next() {
                    let added: Vec<usize> = in_idx.iter().map(|&i| outside[i]).collect();
                    if feasible(&s.apply_swap(&removed, &added)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Shared literal scan for the shrinking problems: some `X` outside `s`
/// with `|X| <= k-1` and `Y ⊆ s` with `|Y| >= |X|+1` keeps
/// `(s \ Y) ∪ X` feasible iff the scan returns false.
fn shrink_swap_all_sizes(
    n: usize,
    s: &VertexSet,
    k: usize,
    feasible: &dyn Fn(&VertexSet) -> bool,
) -> bool {
    let members = s.as_slice();
    let outside: Vec<usize> = (0..n).filter(|&v| !s.contains(v)).collect();
    for in_size in 0..k.min(outside.len() + 1) {
        let mut in_combos = Combinations::new(outside.len(), in_size);
        while let Some(in_idx) = in_combos.next() {
            let added: Vec<usize> = in_idx.iter().map(|&i| outside[i]).collect();
            for out_size in in_size + 1..=members.len() {
                let mut out_combos = Combinations::new(members.len(), out_size);
                while let Some(out_idx) = out_combos.next() {
                    let removed: Vec<usize> = out_idx.iter().map(|&i| members[i]).collect();
                    if feasible(&s.apply_swap(&removed, &added)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Clique counterpart of [`is_k_maximal_independent_set`].
pub fn is_k_maximal_clique(g: &Graph, s: &VertexSet, k: usize) -> Result<bool, OracleError> {
    require_k(k)?;
    if !g.is_clique(s)? {
        return Err(OracleError::Infeasible { expected: "a clique" });
    }
    Ok(k_maximal_clique_filter(g, s, k))
}

pub(super) fn k_maximal_clique_filter(g: &Graph, s: &VertexSet, k: usize) -> bool {
    let n = g.vertex_count();
    let words = g.words();
    let smask = s.to_words(words);
    let members = s.as_slice();
    let mut retained = bitset::zeroed(words);
    let mut cand: Vec<usize> = Vec::new();
    for out_size in 0..k.min(members.len() + 1) {
        let mut combos = Combinations::new(members.len(), out_size);
        while let Some(out_idx) = combos.next() {
            bitset::copy_into(&mut retained, &smask);
            for &i in out_idx {
                bitset::clear(&mut retained, members[i]);
            }
            cand.clear();
            cand.extend((0..n).filter(|&v| {
                !bitset::test(&smask, v) && bitset::subset(&retained, g.row(v))
            }));
            if has_clique_subset(g, &cand, out_size + 1) {
                return false;
            }
        }
    }
    true
}

fn has_clique_subset(g: &Graph, cand: &[usize], size: usize) -> bool {
    if cand.len() < size {
        return false;
    }
    let mut combos = Combinations::new(cand.len(), size);
    while let Some(idx) = combos.next() {
        let ok = idx.iter().enumerate().all(|(a, &i)| {
            idx[a + 1..].iter().all(|&j| g.has_edge(cand[i], cand[j]))
        });
        if ok {
            return true;
        }
    }
    false
}

/// Literal form of [`is_k_maximal_clique`].
pub fn is_k_maximal_clique_all_sizes(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<bool, OracleError> {
    require_k(k)?;
    if !g.is_clique(s)? {
        return Err(OracleError::Infeasible { expected: "a clique" });
    }
    let feasible = |candidate: &VertexSet| g.is_clique(candidate).unwrap_or(false);
    Ok(grow_swap_all_sizes(g.vertex_count(), s, k, &feasible))
}

/// True iff no swap adding at most `k-1` outside vertices and removing
/// one more member keeps `s` a vertex cover.
pub fn is_k_minimal_vertex_cover(g: &Graph, s: &VertexSet, k: usize) -> Result<bool, OracleError> {
    require_k(k)?;
    if !g.is_vertex_cover(s)? {
        return Err(OracleError::Infeasible { expected: "a vertex cover" });
    }
    Ok(k_minimal_filter(g, s, k, &|g, base| cover_ok(g, base)))
}

fn cover_ok(g: &Graph, base: &[u64]) -> bool {
    g.edges().all(|(u, v)| bitset::test(base, u) || bitset::test(base, v))
}

/// Literal form of [`is_k_minimal_vertex_cover`].
pub fn is_k_minimal_vertex_cover_all_sizes(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<bool, OracleError> {
    require_k(k)?;
    if !g.is_vertex_cover(s)? {
        return Err(OracleError::Infeasible { expected: "a vertex cover" });
    }
    let feasible = |candidate: &VertexSet| g.is_vertex_cover(candidate).unwrap_or(false);
    Ok(shrink_swap_all_sizes(g.vertex_count(), s, k, &feasible))
}

/// True iff no swap adding at most `k-1` outside vertices and removing
/// one more member keeps `s` dominating.
pub fn is_k_minimal_dominating_set(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<bool, OracleError> {
    require_k(k)?;
    if !g.is_dominating_set(s)? {
        return Err(OracleError::Infeasible { expected: "a dominating set" });
    }
    Ok(k_minimal_filter(g, s, k, &|g, base| domination_ok(g, base)))
}

fn domination_ok(g: &Graph, base: &[u64]) -> bool {
    let mut dominated = bitset::zeroed(g.words());
    for v in bitset::ones(base) {
        bitset::or_into(&mut dominated, g.row(v));
        bitset::set(&mut dominated, v);
    }
    (0..g.vertex_count()).all(|v| bitset::test(&dominated, v))
}

/// Literal form of [`is_k_minimal_dominating_set`].
pub fn is_k_minimal_dominating_set_all_sizes(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<bool, OracleError> {
    require_k(k)?;
    if !g.is_dominating_set(s)? {
        return Err(OracleError::Infeasible { expected: "a dominating set" });
    }
    let feasible = |candidate: &VertexSet| g.is_dominating_set(candidate).unwrap_or(false);
    Ok(shrink_swap_all_sizes(g.vertex_count(), s, k, &feasible))
}

/// True iff no swap adding at most `k-1` outside vertices and removing
/// one more member keeps the remainder acyclic.
pub fn is_k_minimal_feedback_vertex_set(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<bool, OracleError> {
    require_k(k)?;
    if !g.is_feedback_vertex_set(s)? {
        return Err(OracleError::Infeasible { expected: "a feedback vertex set" });
    }
    Ok(k_minimal_filter(g, s, k, &|g, base| acyclic_ok(g, base)))
}

fn acyclic_ok(g: &Graph, base: &[u64]) -> bool {
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
}

/// Literal form of [`is_k_minimal_feedback_vertex_set`].
pub fn is_k_minimal_feedback_vertex_set_all_sizes(
    g: &Graph,
    s: &VertexSet,
    k: usize,
) -> Result<bool, OracleError> {
    require_k(k)?;
    if !g.is_feedback_vertex_set(s)? {
        return Err(OracleError::Infeasible { expected: "a feedback vertex set" });
    }
    let feasible = |candidate: &VertexSet| g.is_feedback_vertex_set(candidate).unwrap_or(false);
    Ok(shrink_swap_all_sizes(g.vertex_count(), s, k, &feasible))
}

/// Combination scan shared by the three shrinking filters; `base` is
/// the candidate solution bitset handed to `feasible`.
fn k_minimal_filter(
    g: &Graph,
    s: &VertexSet,
    k: usize,
    feasible: &dyn Fn(&Graph, &[u64]) -> bool,
) -> bool {
    let n = g.vertex_count();
    let words = g.words();
    let smask = s.to_words(words);
    let members = s.as_slice();
    let outside: Vec<usize> = (0..n).filter(|&v| !s.contains(v)).collect();
    let mut base = bitset::zeroed(words);
    for in_size in 0..k.min(outside.len() + 1) {
        if in_size + 1 > members.len() {
            break;
        }
        let mut in_combos = Combinations::new(outside.len(), in_size);
        while let Some(in_idx) = in_combos.next() {
            let mut out_combos = Combinations::new(members.len(), in_size + 1);
            while let Some(out_idx) = out_combos.next() {
                bitset::copy_into(&mut base, &smask);
                for &i in in_idx {
                    bitset::set(&mut base, outside[i]);
                }
                for &i in out_idx {
                    bitset::clear(&mut base, members[i]);
                }
                if feasible(g, &base) {
                    return false;
                }
            }
        }
    }
    true
}

/// True iff no edge swap removing at most `k-1` matching edges and
/// adding one more keeps the edge set a matching.
pub fn is_k_maximal_matching(g: &Graph, m: &Matching, k: usize) -> Result<bool, OracleError> {
    require_k(k)?;
    if !g.is_matching(m)? {
        return Err(OracleError::Infeasible { expected: "a matching" });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    Ok(k_maximal_matching_filter(g, &edges, m, k))
}

pub(super) fn k_maximal_matching_filter(
    g: &Graph,
    all_edges: &[(usize, usize)],
    m: &Matching,
    k: usize,
) -> bool {
    let words = g.words();
    let matched = m.edges();
    let mut covered = bitset::zeroed(words);
    let mut cand: Vec<(usize, usize)> = Vec::new();
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
            cand.extend(all_edges.iter().copied().filter(|&(u, v)| {
                !m.contains(u, v) && !bitset::test(&covered, u) && !bitset::test(&covered, v)
            }));
            if has_disjoint_edge_subset(&cand, out_size + 1) {
                return false;
            }
        }
    }
    true
}

fn has_disjoint_edge_subset(cand: &[(usize, usize)], size: usize) -> bool {
    if cand.len() < size {
        return false;
    }
    let mut combos = Combinations::new(cand.len(), size);
    while let Some(idx) = combos.next() {
        let ok = idx.iter().enumerate().all(|(a, &i)| {
            idx[a + 1..].iter().all(|&j| {
                let (u1, v1) = cand[i];
                let (u2, v2) = cand[j];
                u1 != u2 && u1 != v2 && v1 != u2 && v1 != v2
            })
        });
        if ok {
            return true;
        }
    }
    false
}

/// Literal form of [`is_k_maximal_matching`].
pub fn is_k_maximal_matching_all_sizes(
    g: &Graph,
    m: &Matching,
    k: usize,
) -> Result<bool, OracleError> {
    require_k(k)?;
    if !g.is_matching(m)? {
        return Err(OracleError::Infeasible { expected: "a matching" });
    }
    let all_edges: Vec<(usize, usize)> = g.edges().collect();
    let outside: Vec<(usize, usize)> =
        all_edges.iter().copied().filter(|&(u, v)| !m.contains(u, v)).collect();
    let matched = m.edges();
    for out_size in 0..k.min(matched.len() + 1) {
        let mut out_combos = Combinations::new(matched.len(), out_size);
        while let Some(out_idx) = out_combos.next() {
            for in_size in out_size + 1..=outside.len() {
                let mut in_combos = Combinations::new(outside.len(), in_size);
                while let Some(in_idx) = in_combos.next() {
                    let candidate: Vec<(usize, usize)> = matched
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| !out_idx.contains(i))
                        .map(|(_, &e)| e)
                        .chain(in_idx.iter().map(|&i| outside[i]))
                        .collect();
                    let candidate = Matching::new(candidate)
                        .expect("graph edges are valid matching pairs");
                    if g.is_matching(&candidate).unwrap_or(false) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Stability by full recomputation: the cut is stable iff no single
/// vertex move strictly increases [`MultiGraph::cut_weight`].
pub fn is_stable_cut(mg: &MultiGraph, c: &Cut) -> Result<bool, OracleError> {
    if c.len() != mg.vertex_count() {
        return Err(OracleError::Graph(GraphError::SideCountMismatch {
            expected: mg.vertex_count(),
            found: c.len(),
        }));
    }
    let weight = mg.cut_weight(c)?;
    for v in 0..mg.vertex_count() {
        if mg.cut_weight(&c.flip_vertex(v))? > weight {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Unflippability by full recomputation of the satisfied-clause count
/// for every single-variable flip.
pub fn is_unflippable(f: &CnfFormula, a: &Assignment) -> Result<bool, OracleError> {
    let count = f.count_satisfied(a)?;
    for x in 0..f.num_vars() {
        if f.count_satisfied(&a.flip(x))? > count {
            return Ok(false);
        }
    }
    Ok(true)
}

/// NAE-unflippability by full recomputation.
pub fn is_nae_unflippable(f: &CnfFormula, a: &Assignment) -> Result<bool, OracleError> {
    let count = f.count_nae_satisfied(a)?;
    for x in 0..f.num_vars() {
        if f.count_nae_satisfied(&a.flip(x))? > count {
            return Ok(false);
        }
    }
    Ok(true)
}
