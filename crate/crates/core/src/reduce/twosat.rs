//! Multigraphs as 2-CNF formulas: per unit of edge multiplicity the
//! clause pair `(u ∨ v) ∧ (¬u ∨ ¬v)` (both satisfied exactly when the
//! endpoints take different values), plus `2|E| + 1` copies of the
//! unit clause on an anchor vertex, which pins the anchor true in
//! every unflippable assignment.
//!
//! For every non-anchor vertex the flip delta of the formula equals
//! the cut weight delta of the corresponding side move. At the anchor
//! itself the unit block outweighs any cut change, so anchor flips are
//! never improving regardless of the cut. The exact correspondence is
//! therefore: unflippable assignments are the anchor-on-X orientations
//! of the cuts that are stable at every NON-anchor vertex. Every
//! stable cut yields an unflippable assignment, but a cut improvable
//! only by moving the anchor does too, so unflippable assignments can
//! outnumber the stable cuts (the 4-cycle with anchor 0 has three
//! stable cuts and four unflippable assignments, the extra one being
//! the cut `{0,1,3} | {2}`).

use alloc::vec::Vec;

use crate::cnf::{Assignment, Clause, CnfFormula, Literal};
use crate::graph::{Cut, GraphError, MultiGraph};

use super::ReduceError;

/// Correspondence between vertices and variables (the identity), with
/// the anchor vertex fixed to vertex 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CutSatMap {
    pub vertices: usize,
    pub v_star: usize,
    /// Total edge multiplicity of the source multigraph.
    pub total_multiplicity: u64,
}

/// Builds the 2-CNF formula of a multigraph with at least one vertex.
/// Clause count: `2|E| + (2|E| + 1)`.
pub fn build_2sat(mg: &MultiGraph) -> Result<(CnfFormula, CutSatMap), ReduceError> {
    let n = mg.vertex_count();
    if n == 0 {
        return Err(ReduceError::InvalidSolution { expected: "a nonempty vertex set" });
    }
    let map = CutSatMap { vertices: n, v_star: 0, total_multiplicity: mg.total_multiplicity() };
    let mut blocks: Vec<(Clause, usize)> = Vec::new();
    for (u, v, mult) in mg.pairs() {
        blocks.push((Clause::positive([u, v])?, mult as usize));
        blocks.push((Clause::new([Literal::negative(u), Literal::negative(v)])?, mult as usize));
    }
    blocks.push((
        Clause::positive([map.v_star])?,
        2 * mg.total_multiplicity() as usize + 1,
    ));
    Ok((CnfFormula::with_repeats(n, &blocks)?, map))
}

impl CutSatMap {
    /// The ordered cut whose X side holds the true variables; for
    /// unflippable assignments the anchor lies on side X.
    pub fn cut_of_assignment(&self, a: &Assignment) -> Result<Cut, ReduceError> {
        if a.len() != self.vertices {
            return Err(ReduceError::InvalidSolution {
                expected: "an assignment of the built formula",
            });
        }
        Ok(Cut::ordered(a.values().to_vec()))
    }

    /// The assignment of a cut, oriented so the anchor is true.
    pub fn assignment_of_cut(&self, c: &Cut) -> Result<Assignment, ReduceError> {
        if c.len() != self.vertices {
            return Err(ReduceError::Graph(GraphError::SideCountMismatch {
                expected: self.vertices,
                found: c.len(),
            }));
        }
        let flip = !c.in_x(self.v_star);
        Ok(Assignment::new(c.sides().iter().map(|&side| side != flip).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracle::raw;

    #[test]
    fn clause_counts() {
        let single = MultiGraph::new(2, &[(0, 1, 1)]).unwrap();
        let (f, _) = build_2sat(&single).unwrap();
        assert_eq!(f.clause_count(), 2 + 3);

        let double = MultiGraph::new(2, &[(0, 1, 2)]).unwrap();
        let (f, _) = build_2sat(&double).unwrap();
        assert_eq!(f.clause_count(), 4 + 5);
    }

    /// Stability of a cut at every vertex except the anchor.
    fn stable_away_from_anchor(mg: &MultiGraph, cut: &Cut, anchor: usize) -> bool {
        let w = mg.cut_weight(cut).unwrap();
        (0..mg.vertex_count())
            .filter(|&v| v != anchor)
            .all(|v| mg.cut_weight(&cut.flip_vertex(v)).unwrap() <= w)
    }

    #[test]
    fn unflippable_iff_cut_stable_away_from_anchor() {
        let mg = MultiGraph::from_graph(&Graph::cycle(4));
        let (f, map) = build_2sat(&mg).unwrap();
        let mut unflippable = 0;
        for code in 0..16u64 {
            let a = Assignment::from_bits(4, code);
            let cut = map.cut_of_assignment(&a).unwrap();
            let expected =
                a.value(map.v_star) && stable_away_from_anchor(&mg, &cut, map.v_star);
            assert_eq!(raw::is_unflippable(&f, &a).unwrap(), expected);
            if expected {
                unflippable += 1;
            }
        }
        // The three stable cuts of the 4-cycle plus {0,1,3}|{2}, which
        // is improvable only by moving the anchor.
        assert_eq!(unflippable, 4);
    }

    #[test]
    fn stable_cuts_orient_to_unflippable_assignments() {
        let mg = MultiGraph::from_graph(&Graph::cycle(4));
        let (f, map) = build_2sat(&mg).unwrap();
        let mut stable = 0;
        for code in 0..16u64 {
            let sides: Vec<bool> = (0..4).map(|v| code >> v & 1 == 1).collect();
            let cut = Cut::ordered(sides);
            if !cut.in_x(map.v_star) || !raw::is_stable_cut(&mg, &cut).unwrap() {
                continue;
            }
            stable += 1;
            let a = map.assignment_of_cut(&cut).unwrap();
            assert!(a.value(map.v_star));
            assert!(raw::is_unflippable(&f, &a).unwrap());
        }
        assert_eq!(stable, 3);
    }

    #[test]
    fn round_trip_identity() {
        let mg = MultiGraph::new(3, &[(0, 1, 2), (1, 2, 1)]).unwrap();
        let (_, map) = build_2sat(&mg).unwrap();
        for code in 0..8u64 {
            let a = Assignment::from_bits(3, code);
            if !a.value(map.v_star) {
                continue;
            }
            let cut = map.cut_of_assignment(&a).unwrap();
            assert_eq!(map.assignment_of_cut(&cut).unwrap(), a);
        }
        // Unordered canonical cuts orient back to anchor-true.
        let cut = Cut::unordered(alloc::vec![false, true, false]);
        let a = map.assignment_of_cut(&cut).unwrap();
        assert!(a.value(map.v_star));
    }

    #[test]
    fn flip_delta_equals_cut_delta() {
        let mg = MultiGraph::new(4, &[(0, 1, 2), (1, 2, 1), (2, 3, 3), (0, 2, 1)]).unwrap();
        let (f, map) = build_2sat(&mg).unwrap();
        for code in 0..16u64 {
            let a = Assignment::from_bits(4, code);
            let cut = map.cut_of_assignment(&a).unwrap();
            let w = mg.cut_weight(&cut).unwrap() as i64;
            for u in 1..4 {
                let flipped_w = mg.cut_weight(&cut.flip_vertex(u)).unwrap() as i64;
                let sat = f.count_satisfied(&a).unwrap() as i64;
                let sat_flipped = f.count_satisfied(&a.flip(u)).unwrap() as i64;
                assert_eq!(sat - sat_flipped, w - flipped_w);
            }
        }
    }

    #[test]
    fn rejects_empty_vertex_set() {
        let mg = MultiGraph::new(0, &[]).unwrap();
        assert!(build_2sat(&mg).is_err());
    }
}
