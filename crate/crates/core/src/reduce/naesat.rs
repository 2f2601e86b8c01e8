//! Extension-to-NAE-satisfiability formula.
//!
//! The source graph is first padded with `n + 4m|X|` fresh isolated
//! vertices. Every maximal independent set avoiding the forbidden
//! vertices contains all pads, so for any such set `D` of the padded
//! graph, `|D| - |V \ D| >= 4m|X|`: flipping `y*` on the induced
//! assignment then loses at least as much on the per-vertex clauses as
//! it gains on the selector-pair block, which is what makes those
//! assignments locally optimal. (Padding with fewer vertices — enough
//! only for `|D| >= |V \ D|` — leaves the selector-pair gain
//! uncompensated and the lifted assignments flippable at `y*`.)
//!
//! Over variables `x_v` (per padded vertex), `s_e` (per edge), and the
//! two selectors `x*`, `y*`, the formula is, with `m` the edge count:
//!
//! * per edge `e = {u, v}`: `(x* ∨ y* ∨ s_e)²`,
//!   `(¬s_e ∨ ¬x_u ∨ ¬x_v)²`, `(s_e ∨ x*)³` — 7 clauses;
//! * per padded vertex `v`: `(x_v ∨ y*)`;
//! * per forbidden vertex `v`: `(x_v ∨ ¬x* ∨ y*)^(4m)`;
//! * once: `(x* ∨ y*)^(4m|X|)`.
//!
//! Exactly two NAE-unflippable assignments split the selectors (the
//! canonical pair below), and the remaining NAE-unflippable
//! assignments correspond to the maximal independent sets of the
//! source graph avoiding the forbidden set.

use alloc::vec::Vec;

use crate::cnf::{Assignment, Clause, CnfFormula, Literal};
use crate::graph::VertexSet;
use crate::local;

use super::{MiseInstance, ReduceError};

/// Variable layout of one built formula.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NaesatGadgetMap {
    /// Original vertex count (before padding).
    pub original_n: usize,
    /// Variable of each padded vertex; index = padded vertex id.
    pub x_v: Vec<usize>,
    /// Variable of each edge, parallel to `edges`.
    pub s_e: Vec<usize>,
    /// Source edges in ascending order.
    pub edges: Vec<(usize, usize)>,
    pub x_star: usize,
    pub y_star: usize,
    /// Ids of the padding vertices in the padded graph.
    pub pads: Vec<usize>,
    /// The forbidden original vertices, ascending.
    pub x: Vec<usize>,
    /// Edge count of the source graph.
    pub m: usize,
}

/// Builds the formula for an extension instance with at least one edge
/// (the multiplicity constants degenerate on edgeless graphs; solve
/// those directly). With `p = n + 4m|X|` pads the formula has
/// `n + p + m + 2` variables and `7m + (n + p) + 8m|X|` clauses.
pub fn build_naesat(inst: &MiseInstance) -> Result<(CnfFormula, NaesatGadgetMap), ReduceError> {
    let g = inst.graph();
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return Err(ReduceError::NoEdges);
    }
    let padded_n = 2 * n + 4 * m * inst.forbidden().len();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let x: Vec<usize> = inst.forbidden().iter().collect();
    let map = NaesatGadgetMap {
        original_n: n,
        x_v: (0..padded_n).collect(),
        s_e: (0..m).map(|j| padded_n + j).collect(),
        edges: edges.clone(),
        x_star: padded_n + m,
        y_star: padded_n + m + 1,
        pads: (n..padded_n).collect(),
        x,
        m,
    };

    let pos = Literal::positive;
    let neg = Literal::negative;
    let mut blocks: Vec<(Clause, usize)> = Vec::new();
    for (j, &(u, v)) in edges.iter().enumerate() {
        let se = map.s_e[j];
        blocks.push((Clause::new([pos(map.x_star), pos(map.y_star), pos(se)])?, 2));
        blocks.push((Clause::new([neg(se), neg(map.x_v[u]), neg(map.x_v[v])])?, 2));
        blocks.push((Clause::new([pos(se), pos(map.x_star)])?, 3));
    }
    for v in 0..padded_n {
        blocks.push((Clause::new([pos(map.x_v[v]), pos(map.y_star)])?, 1));
    }
    for &v in &map.x {
        blocks.push((
            Clause::new([pos(map.x_v[v]), neg(map.x_star), pos(map.y_star)])?,
            4 * m,
        ));
    }
    if !map.x.is_empty() {
        blocks.push((
            Clause::new([pos(map.x_star), pos(map.y_star)])?,
            4 * m * map.x.len(),
        ));
    }
    let num_vars = padded_n + m + 2;
    let formula = CnfFormula::with_repeats(num_vars, &blocks)?;
    Ok((formula, map))
}

impl NaesatGadgetMap {
    pub fn num_vars(&self) -> usize {
        self.x_v.len() + self.s_e.len() + 2
    }

    fn padded_n(&self) -> usize {
        self.x_v.len()
    }

    /// Extends a solution over the original vertices with all pads,
    /// yielding the corresponding maximal independent set of the padded
    /// graph.
    pub fn pad_solution(&self, d: &VertexSet) -> VertexSet {
        VertexSet::new(d.iter().chain(self.pads.iter().copied()))
    }

    /// The two NAE-unflippable assignments that split the selectors:
    /// `x* = true`, `y* = false`, every `s_e` false, every `x_v` true —
    /// and its complement.
    pub fn canonical_pair(&self) -> (Assignment, Assignment) {
        let mut values = alloc::vec![false; self.num_vars()];
        for &xv in &self.x_v {
            values[xv] = true;
        }
        values[self.x_star] = true;
        let first = Assignment::new(values);
        let second = first.complement();
        (first, second)
    }

    /// Lifts a maximal independent set of the padded graph (avoiding
    /// the forbidden vertices, containing all pads) to an
    /// NAE-unflippable assignment with both selectors false.
    pub fn lift(&self, d: &VertexSet) -> Result<Assignment, ReduceError> {
        if d.max().is_some_and(|v| v >= self.padded_n()) {
            return Err(ReduceError::InvalidSolution {
                expected: "a set of padded-graph vertices",
            });
        }
        if self.x.iter().any(|&v| d.contains(v)) {
            return Err(ReduceError::InvalidSolution {
                expected: "a solution avoiding the forbidden vertices",
            });
        }
        if !self.pads.iter().all(|&p| d.contains(p)) {
            return Err(ReduceError::InvalidSolution {
                expected: "a solution containing every padding vertex",
            });
        }
        let mut values = alloc::vec![false; self.num_vars()];
        for v in d.iter() {
            values[self.x_v[v]] = true;
        }
        for &se in &self.s_e {
            values[se] = true;
        }
        Ok(Assignment::new(values))
    }

    /// Projects an NAE-unflippable assignment with equal selectors to a
    /// maximal independent set of the original graph avoiding the
    /// forbidden vertices. The assignment is normalized so that `x*` is
    /// false (complementing preserves NAE-unflippability); padding
    /// vertices are dropped from the result.
    pub fn project(
        &self,
        formula: &CnfFormula,
        a: &Assignment,
    ) -> Result<VertexSet, ReduceError> {
        if a.value(self.x_star) != a.value(self.y_star) {
            return Err(ReduceError::InvalidSolution {
                expected: "an assignment with equal selector values",
            });
        }
        if local::find_nae_flip(formula, a)?.is_some() {
            return Err(ReduceError::InvalidSolution {
                expected: "an NAE-unflippable assignment",
            });
        }
        let normalized = if a.value(self.x_star) { a.complement() } else { a.clone() };
        Ok(VertexSet::new(
            (0..self.original_n).filter(|&v| normalized.value(self.x_v[v])),
        ))
    }
}
