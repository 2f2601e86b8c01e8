//! Positive 2-/3-clause formulas as multigraphs: a 2-clause adds two
//! parallel edges between its variables, a 3-clause adds a triangle.
//! An NAE-satisfied clause then contributes exactly 2 to the weight of
//! the cut induced by an assignment, so assignments map to ordered cuts
//! with NAE-unflippable assignments hitting exactly the stable ones.

use crate::cnf::{Assignment, CnfFormula};
use crate::graph::{Cut, GraphError, MultiGraph};

use super::ReduceError;

/// Correspondence between the variables of the source formula and the
/// vertices of the built multigraph (the identity on ids).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VarVertexMap {
    pub vars: usize,
}

/// Builds the multigraph of a positive formula whose clauses all have
/// two or three literals.
pub fn build_maxcut(f: &CnfFormula) -> Result<(MultiGraph, VarVertexMap), ReduceError> {
    let mut entries = alloc::vec::Vec::new();
    for clause in f.clauses() {
        if let Some(l) = clause.literals().iter().find(|l| l.negated) {
            return Err(ReduceError::NegativeLiteral { var: l.var });
        }
        match clause.literals() {
            [x, y] => entries.push((x.var, y.var, 2)),
            [x, y, z] => {
                entries.push((x.var, y.var, 1));
                entries.push((y.var, z.var, 1));
                entries.push((z.var, x.var, 1));
            }
            lits => return Err(ReduceError::UnsupportedClause { len: lits.len() }),
        }
    }
    let mg = MultiGraph::new(f.num_vars(), &entries)?;
    Ok((mg, VarVertexMap { vars: f.num_vars() }))
}

impl VarVertexMap {
    /// The ordered cut whose X side holds the true variables.
    pub fn cut_of_assignment(&self, a: &Assignment) -> Result<Cut, ReduceError> {
        if a.len() != self.vars {
            return Err(ReduceError::InvalidSolution {
                expected: "an assignment of the source formula",
            });
        }
        Ok(Cut::ordered(a.values().to_vec()))
    }

    /// The assignment reading each vertex's side (X = true).
    pub fn assignment_of_cut(&self, c: &Cut) -> Result<Assignment, ReduceError> {
        if c.len() != self.vars {
            return Err(ReduceError::Graph(GraphError::SideCountMismatch {
                expected: self.vars,
                found: c.len(),
            }));
        }
        Ok(Assignment::new(c.sides().to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::{Clause, Literal};
    use crate::oracle::raw;

    fn positive(vars: &[usize]) -> Clause {
        Clause::positive(vars.iter().copied()).unwrap()
    }

    #[test]
    fn clause_shapes() {
        let f = CnfFormula::new(2, alloc::vec![positive(&[0, 1])]).unwrap();
        let (mg, _) = build_maxcut(&f).unwrap();
        assert_eq!(mg.multiplicity(0, 1), 2);

        let f = CnfFormula::new(3, alloc::vec![positive(&[0, 1, 2])]).unwrap();
        let (mg, _) = build_maxcut(&f).unwrap();
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            assert_eq!(mg.multiplicity(u, v), 1);
        }

        let f = CnfFormula::new(3, alloc::vec![positive(&[0, 1]), positive(&[0, 1, 2])]).unwrap();
        let (mg, _) = build_maxcut(&f).unwrap();
        assert_eq!(mg.multiplicity(0, 1), 3);
        assert_eq!(mg.multiplicity(0, 2), 1);
        assert_eq!(mg.multiplicity(1, 2), 1);
    }

    #[test]
    fn rejects_units_oversized_and_negative() {
        let unit = CnfFormula::new(1, alloc::vec![positive(&[0])]).unwrap();
        assert_eq!(build_maxcut(&unit), Err(ReduceError::UnsupportedClause { len: 1 }));

        let wide = CnfFormula::new(4, alloc::vec![positive(&[0, 1, 2, 3])]).unwrap();
        assert_eq!(build_maxcut(&wide), Err(ReduceError::UnsupportedClause { len: 4 }));

        let neg = CnfFormula::new(
            2,
            alloc::vec![Clause::new([Literal::negative(0), Literal::positive(1)]).unwrap()],
        )
        .unwrap();
        assert_eq!(build_maxcut(&neg), Err(ReduceError::NegativeLiteral { var: 0 }));
    }

    #[test]
    fn unflippable_matches_stable() {
        // (x ∨ y) ∧ (y ∨ z): check the correspondence pointwise.
        let f = CnfFormula::new(3, alloc::vec![positive(&[0, 1]), positive(&[1, 2])]).unwrap();
        let (mg, map) = build_maxcut(&f).unwrap();
        for code in 0..8u64 {
            let a = Assignment::from_bits(3, code);
            let cut = map.cut_of_assignment(&a).unwrap();
            assert_eq!(
                raw::is_nae_unflippable(&f, &a).unwrap(),
                raw::is_stable_cut(&mg, &cut).unwrap()
            );
            assert_eq!(map.assignment_of_cut(&cut).unwrap(), a);
            // NAE-satisfied clauses contribute exactly 2 each.
            assert_eq!(
                mg.cut_weight(&cut).unwrap(),
                2 * f.count_nae_satisfied(&a).unwrap() as u64
            );
        }
    }
}
