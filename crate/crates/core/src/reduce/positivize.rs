//! Positivization: every negative literal `¬x` is replaced by a fresh
//! partner variable `x'`, and `(x ∨ x')^(m+1)` is appended for every
//! original variable (`m` = original clause count).
//!
//! The pair blocks force `x' = ¬x` in every NAE-unflippable assignment
//! of the result: a pair block with equal values is NAE-unsatisfied and
//! flipping the partner gains all `m + 1` copies. They also cut both
//! ways: once the partners are consistent, any single flip breaks its
//! own pair block for a loss of `m + 1`, which exceeds every possible
//! gain (at most `m`) from the original clauses. The NAE-unflippable
//! assignments of the positivized formula are therefore exactly the
//! `2^n` partner-consistent assignments, whatever the source formula's
//! own optima. [`PolarityMap::lift`] still embeds every source optimum
//! into the image optima with [`PolarityMap::project`] as its inverse,
//! but the two optimum sets do not biject in general.

use alloc::vec::Vec;

use crate::cnf::{Assignment, Clause, CnfFormula, Literal};

use super::ReduceError;

/// Variable layout of a positivized formula: original variable `x`
/// keeps its id, its partner is `original_vars + x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PolarityMap {
    pub original_vars: usize,
    pub original_clauses: usize,
}

/// Builds the positive formula; the variable count exactly doubles and
/// `n * (m + 1)` pair clauses are appended.
pub fn positivize(f: &CnfFormula) -> Result<(CnfFormula, PolarityMap), ReduceError> {
    let n = f.num_vars();
    let m = f.clause_count();
    let map = PolarityMap { original_vars: n, original_clauses: m };
    let mut clauses: Vec<Clause> = Vec::with_capacity(m + n * (m + 1));
    for clause in f.clauses() {
        clauses.push(Clause::new(clause.literals().iter().map(|l| {
            if l.negated {
                Literal::positive(map.partner(l.var))
            } else {
                Literal::positive(l.var)
            }
        }))?);
    }
    for x in 0..n {
        let pair = Clause::positive([x, map.partner(x)])?;
        for _ in 0..m + 1 {
            clauses.push(pair.clone());
        }
    }
    Ok((CnfFormula::new(2 * n, clauses)?, map))
}

impl PolarityMap {
    /// The partner variable standing in for `¬x`.
    pub fn partner(&self, x: usize) -> usize {
        self.original_vars + x
    }

    /// Lifts an assignment of the original formula by giving every
    /// partner the negated value: the lift of an NAE-unflippable
    /// assignment is NAE-unflippable for the positivized formula.
    pub fn lift(&self, a: &Assignment) -> Result<Assignment, ReduceError> {
        if a.len() != self.original_vars {
            return Err(ReduceError::InvalidSolution {
                expected: "an assignment of the original formula",
            });
        }
        let values: Vec<bool> =
            a.values().iter().copied().chain(a.values().iter().map(|v| !v)).collect();
        Ok(Assignment::new(values))
    }

    /// Projects an assignment of the positivized formula by dropping
    /// the partner variables.
    pub fn project(&self, a: &Assignment) -> Result<Assignment, ReduceError> {
        if a.len() != 2 * self.original_vars {
            return Err(ReduceError::InvalidSolution {
                expected: "an assignment of the positivized formula",
            });
        }
        Ok(Assignment::new(a.values()[..self.original_vars].to_vec()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::raw;

    fn neg_or(y: usize, x: usize) -> Clause {
        Clause::new([Literal::negative(x), Literal::positive(y)]).unwrap()
    }

    #[test]
    fn example_shape() {
        // (¬x ∨ y) with m = 1 becomes (x' ∨ y) plus two pair blocks.
        let f = CnfFormula::new(2, alloc::vec![neg_or(1, 0)]).unwrap();
        let (pos, map) = positivize(&f).unwrap();
        assert_eq!(pos.num_vars(), 4);
        assert_eq!(pos.clause_count(), 1 + 2 + 2);
        assert!(pos.is_positive());
        assert_eq!(map.partner(0), 2);
    }

    #[test]
    fn already_positive_formula_keeps_clauses() {
        let f = CnfFormula::new(2, alloc::vec![Clause::positive([0, 1]).unwrap()]).unwrap();
        let (pos, _) = positivize(&f).unwrap();
        assert_eq!(pos.clauses()[0], Clause::positive([0, 1]).unwrap());
        assert_eq!(pos.num_vars(), 4);
    }

    #[test]
    fn image_optima_are_exactly_the_consistent_assignments() {
        // (x ∨ y) ∧ (¬x ∨ ¬y): scan both formulas exhaustively.
        let f = CnfFormula::new(
            2,
            alloc::vec![
                Clause::positive([0, 1]).unwrap(),
                Clause::new([Literal::negative(0), Literal::negative(1)]).unwrap(),
            ],
        )
        .unwrap();
        let (pos, map) = positivize(&f).unwrap();

        let mut source = Vec::new();
        for code in 0..4u64 {
            let a = Assignment::from_bits(2, code);
            if raw::is_nae_unflippable(&f, &a).unwrap() {
                source.push(a);
            }
        }
        assert_eq!(source.len(), 2);

        let mut image = Vec::new();
        for code in 0..16u64 {
            let a = Assignment::from_bits(4, code);
            let consistent = (0..2).all(|x| a.value(x) != a.value(map.partner(x)));
            // Partner-consistency characterizes the image optima: any
            // single flip breaks a pair block for m+1 > m.
            assert_eq!(raw::is_nae_unflippable(&pos, &a).unwrap(), consistent);
            if consistent {
                image.push(a);
            }
        }
        assert_eq!(image.len(), 4);

        // Lift embeds the source optima; project inverts it there.
        for a in &source {
            let lifted = map.lift(a).unwrap();
            assert!(image.contains(&lifted));
            assert_eq!(map.project(&lifted).unwrap(), *a);
        }
    }
}
