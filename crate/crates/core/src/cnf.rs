//! CNF formulas as clause multisets, truth assignments, and the
//! satisfaction / NAE-satisfaction counters with incremental flip deltas.
//!
//! Clause multiplicity is represented by repetition in the clause list;
//! [`CnfFormula::with_repeats`] expands run-length blocks eagerly so all
//! counting has uniform semantics. A clause never contains the same
//! variable twice (in either polarity) — the gadget builders never
//! produce such clauses and they would complicate the flip deltas.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from formula construction and the counting operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CnfError {
    EmptyClause,
    /// The same variable occurs twice within one clause.
    DuplicateVariable { var: usize },
    VariableOutOfRange { var: usize, num_vars: usize },
    /// An assignment does not assign exactly the formula's variables.
    AssignmentLengthMismatch { expected: usize, found: usize },
}

impl fmt::Display for CnfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CnfError::EmptyClause => write!(f, "clauses must be nonempty"),
            CnfError::DuplicateVariable { var } => {
                write!(f, "variable {var} occurs twice in one clause")
            }
            CnfError::VariableOutOfRange { var, num_vars } => {
                write!(f, "variable {var} out of range for formula with {num_vars} variables")
            }
            CnfError::AssignmentLengthMismatch { expected, found } => {
                write!(f, "assignment covers {found} variables, formula has {expected}")
            }
        }
    }
}

impl core::error::Error for CnfError {}

/// A possibly negated variable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn positive(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn negative(var: usize) -> Self {
        Literal { var, negated: true }
    }

    /// Truth value under `a`.
    pub fn eval(&self, a: &Assignment) -> bool {
        a.value(self.var) != self.negated
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "¬x{}", self.var)
        } else {
            write!(f, "x{}", self.var)
        }
    }
}

/// A nonempty disjunction of literals over distinct variables, stored
/// sorted by variable id.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause {
    lits: Vec<Literal>,
}

impl Clause {
    pub fn new(lits: impl IntoIterator<Item = Literal>) -> Result<Self, CnfError> {
        let mut lits: Vec<Literal> = lits.into_iter().collect();
        if lits.is_empty() {
            return Err(CnfError::EmptyClause);
        }
        lits.sort_unstable_by_key(|l| l.var);
        for pair in lits.windows(2) {
            if pair[0].var == pair[1].var {
                return Err(CnfError::DuplicateVariable { var: pair[0].var });
            }
        }
        Ok(Clause { lits })
    }

    /// Clause of positive literals, e.g. `(x0 ∨ x3)`.
    pub fn positive(vars: impl IntoIterator<Item = usize>) -> Result<Self, CnfError> {
        Clause::new(vars.into_iter().map(Literal::positive))
    }

    pub fn literals(&self) -> &[Literal] {
        &self.lits
    }

    pub fn len(&self) -> usize {
        self.lits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.lits.binary_search_by_key(&var, |l| l.var).is_ok()
    }

    pub fn is_positive(&self) -> bool {
        self.lits.iter().all(|l| !l.negated)
    }

    /// Number of literals true under `a`.
    pub fn count_true(&self, a: &Assignment) -> usize {
        self.lits.iter().filter(|l| l.eval(a)).count()
    }

    pub fn is_satisfied(&self, a: &Assignment) -> bool {
        self.lits.iter().any(|l| l.eval(a))
    }

    /// True iff the clause contains both a true and a false literal
    /// under `a`, i.e. is satisfied under `a` and its complement. Unit
    /// clauses are never NAE-satisfied.
    pub fn is_nae_satisfied(&self, a: &Assignment) -> bool {
        let t = self.count_true(a);
        t > 0 && t < self.lits.len()
    }
}

impl fmt::Debug for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.lits.iter().enumerate() {
            if i > 0 {
                write!(f, " ∨ ")?;
            }
            write!(f, "{l:?}")?;
        }
        write!(f, ")")
    }
}

/// A total truth assignment over `[0, num_vars)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn all_true(n: usize) -> Self {
        Assignment { values: vec![true; n] }
    }

    pub fn all_false(n: usize) -> Self {
        Assignment { values: vec![false; n] }
    }

    /// Assignment whose variable `i` is true iff bit `i` of `code` is set.
    pub fn from_bits(n: usize, code: u64) -> Self {
        Assignment { values: (0..n).map(|i| code >> i & 1 == 1).collect() }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, var: usize) -> bool {
        self.values[var]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    /// The assignment differing from this one exactly at `x`.
    pub fn flip(&self, x: usize) -> Assignment {
        let mut values = self.values.clone();
        values[x] = !values[x];
        Assignment { values }
    }

    /// The complement assignment (every variable flipped).
    pub fn complement(&self) -> Assignment {
        Assignment { values: self.values.iter().map(|v| !v).collect() }
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α[")?;
        for &v in &self.values {
            write!(f, "{}", if v { 'T' } else { 'F' })?;
        }
        write!(f, "]")
    }
}

/// A CNF formula: an ordered clause list (repetition encodes
/// multiplicity) with a per-variable occurrence index built once at
/// construction.
#[derive(Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
    occ: Vec<Vec<usize>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self, CnfError> {
        let mut occ = vec![Vec::new(); num_vars];
        for (i, clause) in clauses.iter().enumerate() {
            for lit in clause.literals() {
                if lit.var >= num_vars {
                    return Err(CnfError::VariableOutOfRange { var: lit.var, num_vars });
                }
                occ[lit.var].push(i);
            }
        }
        Ok(CnfFormula { num_vars, clauses, occ })
    }

    /// Expands run-length blocks `(clause, count)` into the plain
    /// clause-list representation.
    pub fn with_repeats(
        num_vars: usize,
        blocks: &[(Clause, usize)],
    ) -> Result<Self, CnfError> {
        let mut clauses = Vec::with_capacity(blocks.iter().map(|(_, t)| t).sum());
        for (clause, count) in blocks {
            for _ in 0..*count {
                clauses.push(clause.clone());
            }
        }
        CnfFormula::new(num_vars, clauses)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Indices of the clauses containing `var`.
    pub fn occurrences(&self, var: usize) -> &[usize] {
        &self.occ[var]
    }

    pub fn is_positive(&self) -> bool {
        self.clauses.iter().all(Clause::is_positive)
    }

    fn check_assignment(&self, a: &Assignment) -> Result<(), CnfError> {
        if a.len() == self.num_vars {
            Ok(())
        } else {
            Err(CnfError::AssignmentLengthMismatch { expected: self.num_vars, found: a.len() })
        }
    }

    fn check_var(&self, x: usize) -> Result<(), CnfError> {
        if x < self.num_vars {
            Ok(())
        } else {
            Err(CnfError::VariableOutOfRange { var: x, num_vars: self.num_vars })
        }
    }

    /// Number of clauses with at least one true literal, counting
    /// repetitions.
    pub fn count_satisfied(&self, a: &Assignment) -> Result<usize, CnfError> {
        self.check_assignment(a)?;
        Ok(self.clauses.iter().filter(|c| c.is_satisfied(a)).count())
    }

    /// Number of clauses containing both a true and a false literal.
    pub fn count_nae_satisfied(&self, a: &Assignment) -> Result<usize, CnfError> {
        self.check_assignment(a)?;
        Ok(self.clauses.iter().filter(|c| c.is_nae_satisfied(a)).count())
    }

    /// True-literal count of clause `ci` after flipping `x`, given the
    /// count `t` before the flip. The clause must contain `x`.
    fn count_true_after_flip(&self, ci: usize, a: &Assignment, x: usize, t: usize) -> usize {
        let clause = &self.clauses[ci];
        let lit = clause
            .literals()
            .iter()
            .find(|l| l.var == x)
            .expect("occurrence index lists only clauses containing the variable");
        if lit.eval(a) {
            t - 1
        } else {
            t + 1
        }
    }

    /// Change in the satisfied-clause count caused by flipping `x`,
    /// touching only the clauses containing `x`.
    pub fn sat_delta(&self, a: &Assignment, x: usize) -> Result<i64, CnfError> {
        self.check_assignment(a)?;
        self.check_var(x)?;
        let mut delta = 0i64;
        for &ci in &self.occ[x] {
            let t = self.clauses[ci].count_true(a);
            let t_after = self.count_true_after_flip(ci, a, x, t);
            delta += (t_after > 0) as i64 - (t > 0) as i64;
        }
        Ok(delta)
    }

    /// Change in the NAE-satisfied-clause count caused by flipping `x`.
    pub fn nae_delta(&self, a: &Assignment, x: usize) -> Result<i64, CnfError> {
        self.check_assignment(a)?;
        self.check_var(x)?;
        let mut delta = 0i64;
        for &ci in &self.occ[x] {
            let len = self.clauses[ci].len();
            let t = self.clauses[ci].count_true(a);
            let t_after = self.count_true_after_flip(ci, a, x, t);
            delta += (t_after > 0 && t_after < len) as i64 - (t > 0 && t < len) as i64;
        }
        Ok(delta)
    }
}

impl fmt::Debug for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CnfFormula(vars={}, clauses={:?})", self.num_vars, self.clauses)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(v: i64) -> Literal {
        if v < 0 {
            Literal::negative((-v - 1) as usize)
        } else {
            Literal::positive((v - 1) as usize)
        }
    }

    fn clause(vs: &[i64]) -> Clause {
        Clause::new(vs.iter().map(|&v| lit(v))).unwrap()
    }

    fn assignment(vs: &[bool]) -> Assignment {
        Assignment::new(vs.to_vec())
    }

    #[test]
    fn clause_validation() {
        assert_eq!(Clause::new([]), Err(CnfError::EmptyClause));
        assert_eq!(
            Clause::new([lit(1), lit(-1)]),
            Err(CnfError::DuplicateVariable { var: 0 })
        );
        assert_eq!(
            CnfFormula::new(1, vec![clause(&[2])]),
            Err(CnfError::VariableOutOfRange { var: 1, num_vars: 1 })
        );
    }

    #[test]
    fn count_satisfied_examples() {
        let f = CnfFormula::new(1, vec![clause(&[1])]).unwrap();
        assert_eq!(f.count_satisfied(&assignment(&[true])).unwrap(), 1);

        let f = CnfFormula::new(2, vec![clause(&[1, 2]), clause(&[-1, -2])]).unwrap();
        assert_eq!(f.count_satisfied(&assignment(&[true, false])).unwrap(), 2);

        let f = CnfFormula::new(3, vec![]).unwrap();
        assert_eq!(f.count_satisfied(&assignment(&[true, true, true])).unwrap(), 0);
    }

    #[test]
    fn count_nae_satisfied_examples() {
        let f = CnfFormula::new(2, vec![clause(&[1, 2])]).unwrap();
        assert_eq!(f.count_nae_satisfied(&assignment(&[true, false])).unwrap(), 1);
        assert_eq!(f.count_nae_satisfied(&assignment(&[true, true])).unwrap(), 0);

        let f =
            CnfFormula::with_repeats(3, &[(clause(&[1, 2, 3]), 2)]).unwrap();
        assert_eq!(f.count_nae_satisfied(&assignment(&[true, true, false])).unwrap(), 2);
    }

    #[test]
    fn flip_examples() {
        let a = assignment(&[true, false]);
        assert_eq!(a.flip(0), assignment(&[false, false]));
        assert_eq!(a.flip(0).flip(0), a);
        assert_eq!(assignment(&[true]).flip(0), assignment(&[false]));
    }

    #[test]
    fn sat_delta_examples() {
        let f = CnfFormula::with_repeats(1, &[(clause(&[1]), 3)]).unwrap();
        assert_eq!(f.sat_delta(&assignment(&[false]), 0).unwrap(), 3);

        // A variable not occurring in a clause contributes nothing.
        let f = CnfFormula::new(2, vec![clause(&[1])]).unwrap();
        assert_eq!(f.sat_delta(&assignment(&[true, true]), 1).unwrap(), 0);

        let f = CnfFormula::new(2, vec![clause(&[1, 2]), clause(&[-1, -2])]).unwrap();
        assert_eq!(f.sat_delta(&assignment(&[true, true]), 0).unwrap(), 1);
    }

    #[test]
    fn nae_delta_examples() {
        let f = CnfFormula::new(2, vec![clause(&[1, 2])]).unwrap();
        assert_eq!(f.nae_delta(&assignment(&[true, true]), 0).unwrap(), 1);
        assert_eq!(f.nae_delta(&assignment(&[true, false]), 0).unwrap(), -1);

        // NAE counting is symmetric under complementation.
        let a = assignment(&[true, false]);
        assert_eq!(
            f.nae_delta(&a, 0).unwrap(),
            f.nae_delta(&a.complement(), 0).unwrap()
        );
    }

    #[test]
    fn deltas_match_recomputation() {
        // Deterministic pseudo-random triples, checked from scratch.
        let clauses = vec![
            clause(&[1, -2, 3]),
            clause(&[2, 4]),
            clause(&[-1, -3, -4]),
            clause(&[1, 2, 3]),
            clause(&[-2, 3]),
            clause(&[4]),
            clause(&[1, -4]),
        ];
        let f = CnfFormula::new(4, clauses).unwrap();
        for code in 0..16u64 {
            let a = Assignment::from_bits(4, code);
            for x in 0..4 {
                let flipped = a.flip(x);
                let sat = f.count_satisfied(&flipped).unwrap() as i64
                    - f.count_satisfied(&a).unwrap() as i64;
                let nae = f.count_nae_satisfied(&flipped).unwrap() as i64
                    - f.count_nae_satisfied(&a).unwrap() as i64;
                assert_eq!(f.sat_delta(&a, x).unwrap(), sat);
                assert_eq!(f.nae_delta(&a, x).unwrap(), nae);
            }
        }
    }

    #[test]
    fn bound_properties() {
        let clauses = vec![clause(&[1, 2]), clause(&[-1, 2]), clause(&[-2])];
        let f = CnfFormula::new(2, clauses).unwrap();
        for code in 0..4u64 {
            let a = Assignment::from_bits(2, code);
            let nae = f.count_nae_satisfied(&a).unwrap();
            let sat = f.count_satisfied(&a).unwrap();
            assert!(nae <= sat && sat <= f.clause_count());
            assert_eq!(nae, f.count_nae_satisfied(&a.complement()).unwrap());
        }
    }
}
