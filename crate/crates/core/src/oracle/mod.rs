//! Exhaustive ground-truth enumeration of local optima.
//!
//! Everything else in the toolkit is validated against this module: it
//! enumerates *all* local optima of an instance by explicit search and
//! filters candidates with the literal swap/flip definitions in
//! [`raw`], not with the production checkers. Enumeration is
//! exponential by nature, so the entry points enforce a size guardrail
//! ([`EnumerationBudget`]) that callers can relax explicitly.
//!
//! Candidate generation per problem:
//!
//! * independent sets, cliques: maximal-set enumeration with pivoting
//!   (every k-maximal solution is inclusion-maximal);
//! * vertex covers: complements of maximal independent sets;
//! * dominating sets: branching on the lowest undominated vertex;
//! * feedback vertex sets: branching on a shortest cycle;
//! * matchings: recursion over the edge list;
//! * cuts and assignments: full scans of the side vectors / truth
//!   tables with per-clause true-literal counts.

mod raw_impl;
mod search;

pub mod raw {
    //! Definition-level optimality tests used as the oracle's filters.
    //!
    //! The `..._all_sizes` variants scan every incoming-set size the
    //! definitions quantify over; the base variants scan only swaps
    //! whose incoming side is exactly one element larger, which is
    //! equivalent (shrinking the incoming set preserves feasibility in
    //! all six swap families) and is cross-checked against the
    //! `_all_sizes` route in the test suites. Cut and assignment tests
    //! recompute objectives from scratch for every probe.
    pub use super::raw_impl::{
        is_k_maximal_clique, is_k_maximal_clique_all_sizes, is_k_maximal_independent_set,
        is_k_maximal_independent_set_all_sizes, is_k_maximal_matching,
        is_k_maximal_matching_all_sizes, is_k_minimal_dominating_set,
        is_k_minimal_dominating_set_all_sizes, is_k_minimal_feedback_vertex_set,
        is_k_minimal_feedback_vertex_set_all_sizes, is_k_minimal_vertex_cover,
        is_k_minimal_vertex_cover_all_sizes, is_nae_unflippable, is_stable_cut, is_unflippable,
    };
}

use alloc::vec::Vec;
use core::fmt;

use crate::climb::{Instance, ProblemKind, Solution};
use crate::cnf::CnfError;
use crate::graph::{Graph, GraphError, MultiGraph, VertexSet};

pub use search::{count_maximum_matchings, count_maximum_matchings_with};

/// Size guardrails for the enumeration entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Vertex bound for subset problems and cut scans.
    pub max_vertices: usize,
    /// Edge bound for matching enumeration.
    pub max_edges: usize,
    /// Variable bound for assignment scans.
    pub max_variables: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_vertices: 24, max_edges: 24, max_variables: 24 }
    }
}

impl EnumerationBudget {
    /// A budget admitting any instance; enumeration cost is then
    /// entirely the caller's responsibility.
    pub fn unlimited() -> Self {
        EnumerationBudget {
            max_vertices: usize::MAX,
            max_edges: usize::MAX,
            max_variables: usize::MAX,
        }
    }
}

/// Errors from the oracle entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// Instance size exceeds the budget; pass a larger
    /// [`EnumerationBudget`] to force the run.
    BudgetExceeded { what: &'static str, size: usize, max: usize },
    /// The instance kind does not fit the problem.
    KindMismatch { problem: ProblemKind, expected: &'static str },
    /// `k` must be at least 1 for swap problems.
    KZero,
    /// A solution argument fails its feasibility precondition.
    Infeasible { expected: &'static str },
    Graph(GraphError),
    Cnf(CnfError),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::BudgetExceeded { what, size, max } => {
                write!(f, "{what} size {size} exceeds enumeration budget {max}")
            }
            OracleError::KindMismatch { problem, expected } => {
                write!(f, "problem {problem} needs {expected}")
            }
            OracleError::KZero => write!(f, "swap level k must be at least 1"),
            OracleError::Infeasible { expected } => write!(f, "solution is not {expected}"),
            OracleError::Graph(e) => write!(f, "{e}"),
            OracleError::Cnf(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for OracleError {}

impl From<GraphError> for OracleError {
    fn from(e: GraphError) -> Self {
        OracleError::Graph(e)
    }
}

impl From<CnfError> for OracleError {
    fn from(e: CnfError) -> Self {
        OracleError::Cnf(e)
    }
}

/// All local optima of one instance in canonical order: vertex sets and
/// matchings sorted lexicographically, unordered cuts by canonical
/// representative, assignments in binary order (variable 0 most
/// significant, false before true).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionList {
    pub kind: ProblemKind,
    pub solutions: Vec<Solution>,
}

impl SolutionList {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn contains(&self, solution: &Solution) -> bool {
        self.solutions.binary_search(solution).is_ok()
    }

    /// The vertex sets of a subset-problem solution list.
    pub fn vertex_sets(&self) -> impl Iterator<Item = &VertexSet> {
        self.solutions.iter().filter_map(|s| match s {
            Solution::Vertices(v) => Some(v),
            _ => None,
        })
    }

    fn from_unsorted(kind: ProblemKind, mut solutions: Vec<Solution>) -> Self {
        solutions.sort();
        solutions.dedup();
        SolutionList { kind, solutions }
    }
}

fn require_graph<'a>(
    problem: ProblemKind,
    instance: &'a Instance,
) -> Result<&'a Graph, OracleError> {
    instance
        .as_graph()
        .ok_or(OracleError::KindMismatch { problem, expected: "a graph instance" })
}

fn check_budget(what: &'static str, size: usize, max: usize) -> Result<(), OracleError> {
    if size > max {
        Err(OracleError::BudgetExceeded { what, size, max })
    } else {
        Ok(())
    }
}

/// Enumerates exactly the local optima of `(problem, k)` under the
/// default budget. With `limit`, enumeration stops as soon as that many
/// optima have been found (the returned subset is deterministic and
/// sorted, but which optima are kept depends on internal search order).
pub fn enumerate_local_optima(
    problem: ProblemKind,
    instance: &Instance,
    k: usize,
    limit: Option<usize>,
) -> Result<SolutionList, OracleError> {
    enumerate_local_optima_with(problem, instance, k, limit, &EnumerationBudget::default())
}

/// [`enumerate_local_optima`] with an explicit budget.
pub fn enumerate_local_optima_with(
    problem: ProblemKind,
    instance: &Instance,
    k: usize,
    limit: Option<usize>,
    budget: &EnumerationBudget,
) -> Result<SolutionList, OracleError> {
    if !problem.is_flip_problem() && k == 0 {
        return Err(OracleError::KZero);
    }
    let solutions = match problem {
        ProblemKind::IndependentSet
        | ProblemKind::Clique
        | ProblemKind::VertexCover
        | ProblemKind::DominatingSet
        | ProblemKind::FeedbackVertexSet => {
            let g = require_graph(problem, instance)?;
            check_budget("vertex count", g.vertex_count(), budget.max_vertices)?;
            search::enumerate_vertex_optima(problem, g, k, limit)
                .into_iter()
                .map(Solution::Vertices)
                .collect()
        }
        ProblemKind::Matching => {
            let g = require_graph(problem, instance)?;
            check_budget("edge count", g.edge_count(), budget.max_edges)?;
            search::enumerate_k_maximal_matchings(g, k, limit)
                .into_iter()
                .map(Solution::Edges)
                .collect()
        }
        ProblemKind::MaxCut => {
            let mg = instance.as_multigraph().ok_or(OracleError::KindMismatch {
                problem,
                expected: "a multigraph instance",
            })?;
            return enumerate_stable_cuts_with(mg, false, limit, budget);
        }
        ProblemKind::MaxSat | ProblemKind::MaxNaeSat => {
            let f = instance.as_formula().ok_or(OracleError::KindMismatch {
                problem,
                expected: "a CNF instance",
            })?;
            check_budget("variable count", f.num_vars(), budget.max_variables)?;
            let nae = problem == ProblemKind::MaxNaeSat;
            search::enumerate_unflippable(f, nae, limit)
                .into_iter()
                .map(Solution::Assignment)
                .collect()
        }
    };
    Ok(SolutionList::from_unsorted(problem, solutions))
}

/// Enumerates the stable cuts of a multigraph, ordered or unordered.
pub fn enumerate_stable_cuts(
    mg: &MultiGraph,
    ordered: bool,
    limit: Option<usize>,
) -> Result<SolutionList, OracleError> {
    enumerate_stable_cuts_with(mg, ordered, limit, &EnumerationBudget::default())
}

/// [`enumerate_stable_cuts`] with an explicit budget.
pub fn enumerate_stable_cuts_with(
    mg: &MultiGraph,
    ordered: bool,
    limit: Option<usize>,
    budget: &EnumerationBudget,
) -> Result<SolutionList, OracleError> {
    check_budget("vertex count", mg.vertex_count(), budget.max_vertices)?;
    let solutions =
        search::enumerate_stable_cuts(mg, ordered, limit).into_iter().map(Solution::Cut).collect();
    Ok(SolutionList::from_unsorted(ProblemKind::MaxCut, solutions))
}

/// True iff the number of local optima is at least `threshold`,
/// stopping the search as soon as the threshold is reached.
pub fn count_at_least(
    problem: ProblemKind,
    instance: &Instance,
    k: usize,
    threshold: usize,
) -> Result<bool, OracleError> {
    count_at_least_with(problem, instance, k, threshold, &EnumerationBudget::default())
}

/// [`count_at_least`] with an explicit budget.
pub fn count_at_least_with(
    problem: ProblemKind,
    instance: &Instance,
    k: usize,
    threshold: usize,
    budget: &EnumerationBudget,
) -> Result<bool, OracleError> {
    let found = enumerate_local_optima_with(problem, instance, k, Some(threshold), budget)?;
    Ok(found.len() >= threshold)
}

/// Finds a maximal independent set of `g` disjoint from `x`, or `None`
/// if none exists. The candidates are the maximal independent sets of
/// `g - x`, checked for maximality in `g`; the first hit in search
/// order is returned.
pub fn solve_mise(g: &Graph, x: &VertexSet) -> Result<Option<VertexSet>, OracleError> {
    if !g.is_independent_set(x)? {
        return Err(OracleError::Infeasible { expected: "an independent set" });
    }
    Ok(search::solve_mise(g, x))
}

/// Enumerates all matchings of maximum cardinality, without consulting
/// the matching algorithms in [`crate::matching`].
pub fn enumerate_maximum_matchings(g: &Graph) -> Result<SolutionList, OracleError> {
    enumerate_maximum_matchings_with(g, &EnumerationBudget::default())
}

/// [`enumerate_maximum_matchings`] with an explicit budget.
pub fn enumerate_maximum_matchings_with(
    g: &Graph,
    budget: &EnumerationBudget,
) -> Result<SolutionList, OracleError> {
    check_budget("edge count", g.edge_count(), budget.max_edges)?;
    let solutions =
        search::enumerate_maximum_matchings(g).into_iter().map(Solution::Edges).collect();
    Ok(SolutionList::from_unsorted(ProblemKind::Matching, solutions))
}
