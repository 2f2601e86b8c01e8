//! Deterministic hill-climbing drivers.
//!
//! [`climb`] iterates the matching improvement checker from a feasible
//! start until no improving move remains, using first-improvement move
//! selection in the checkers' enumeration order. Every step raises an
//! integral objective by at least one, which bounds the step count:
//!
//! | problem                  | objective        | steps at most        |
//! |--------------------------|------------------|----------------------|
//! | independent set, clique  | `\|S\|`          | `n`                  |
//! | vertex cover, dominating set, feedback vertex set | `-\|S\|` | `n` |
//! | matching                 | `\|M\|`          | `n / 2`              |
//! | max cut                  | cut weight       | total multiplicity   |
//! | max sat / max NAE sat    | (NAE-)satisfied  | clause count         |

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cnf::{Assignment, CnfFormula};
use crate::graph::{Cut, Graph, Matching, MultiGraph, VertexSet};
use crate::local::{self, EdgeSwapMove, FlipMove, LocalError, SwapMove};

/// The seven problem families the toolkit knows how to climb, check,
/// and enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ProblemKind {
    IndependentSet,
    Clique,
    VertexCover,
    DominatingSet,
    FeedbackVertexSet,
    Matching,
    MaxCut,
    MaxSat,
    MaxNaeSat,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 9] = [
        ProblemKind::IndependentSet,
        ProblemKind::Clique,
        ProblemKind::VertexCover,
        ProblemKind::DominatingSet,
        ProblemKind::FeedbackVertexSet,
        ProblemKind::Matching,
        ProblemKind::MaxCut,
        ProblemKind::MaxSat,
        ProblemKind::MaxNaeSat,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ProblemKind::IndependentSet => "independent-set",
            ProblemKind::Clique => "clique",
            ProblemKind::VertexCover => "vertex-cover",
            ProblemKind::DominatingSet => "dominating-set",
            ProblemKind::FeedbackVertexSet => "feedback-vertex-set",
            ProblemKind::Matching => "matching",
            ProblemKind::MaxCut => "cut",
            ProblemKind::MaxSat => "sat",
            ProblemKind::MaxNaeSat => "naesat",
        }
    }

    /// True for the problems whose neighborhood is a single flip, where
    /// the swap level `k` is irrelevant.
    pub fn is_flip_problem(&self) -> bool {
        matches!(self, ProblemKind::MaxCut | ProblemKind::MaxSat | ProblemKind::MaxNaeSat)
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An instance of any of the supported problems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    MultiGraph(MultiGraph),
    Formula(CnfFormula),
}

impl Instance {
    pub fn as_graph(&self) -> Option<&Graph> {
        match self {
            Instance::Graph(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_multigraph(&self) -> Option<&MultiGraph> {
        match self {
            Instance::MultiGraph(mg) => Some(mg),
            _ => None,
        }
    }

    pub fn as_formula(&self) -> Option<&CnfFormula> {
        match self {
            Instance::Formula(f) => Some(f),
            _ => None,
        }
    }
}

/// A solution of any of the supported problems.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Solution {
    Vertices(VertexSet),
    Edges(Matching),
    Cut(Cut),
    Assignment(Assignment),
}

/// One improving step recorded in a climb trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    Swap(SwapMove),
    EdgeSwap(EdgeSwapMove),
    Flip(FlipMove),
}

/// Result of a hill climb: the local optimum reached, the number of
/// improving steps taken, and optionally the move trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClimbReport {
    pub solution: Solution,
    pub steps: usize,
    pub trace: Option<Vec<Move>>,
}

/// Errors from the hill-climbing driver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClimbError {
    /// The instance or start solution does not fit the problem kind.
    KindMismatch { problem: ProblemKind, expected: &'static str },
    Local(LocalError),
}

impl fmt::Display for ClimbError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClimbError::KindMismatch { problem, expected } => {
                write!(f, "problem {problem} needs {expected}")
            }
            ClimbError::Local(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ClimbError {}

impl From<LocalError> for ClimbError {
    fn from(e: LocalError) -> Self {
        ClimbError::Local(e)
    }
}

struct Trace {
    moves: Option<Vec<Move>>,
    steps: usize,
}

impl Trace {
    fn new(keep: bool) -> Self {
        Trace { moves: keep.then(Vec::new), steps: 0 }
    }

    fn record(&mut self, mv: Move) {
        self.steps += 1;
        if let Some(moves) = &mut self.moves {
            moves.push(mv);
        }
    }
}

/// Climbs from `start` (or the canonical start) to a local optimum for
/// `(problem, k)`.
///
/// Canonical starts: greedy ascending-id insertion for independent set,
/// clique, and matching; the full vertex set for the three covering
/// problems; all vertices on one side for cut; all-true for the SAT
/// problems. First-improvement selection makes the result a pure
/// function of `(problem, instance, k, start)`.
pub fn climb(
    problem: ProblemKind,
    instance: &Instance,
    k: usize,
    start: Option<Solution>,
    keep_trace: bool,
) -> Result<ClimbReport, ClimbError> {
    match problem {
        ProblemKind::IndependentSet
        | ProblemKind::Clique
        | ProblemKind::VertexCover
        | ProblemKind::DominatingSet
        | ProblemKind::FeedbackVertexSet => {
            let g = require_graph(problem, instance)?;
            let s = match start {
                Some(Solution::Vertices(s)) => s,
                Some(_) => return Err(kind_mismatch(problem, "a vertex-set start")),
                None => canonical_vertex_start(problem, g),
            };
            climb_vertex_problem(problem, g, s, k, keep_trace)
        }
        ProblemKind::Matching => {
            let g = require_graph(problem, instance)?;
            let m = match start {
                Some(Solution::Edges(m)) => m,
                Some(_) => return Err(kind_mismatch(problem, "a matching start")),
                None => greedy_matching(g),
            };
            climb_matching(g, m, k, keep_trace)
        }
        ProblemKind::MaxCut => {
            let mg = match instance {
                Instance::MultiGraph(mg) => mg,
                _ => return Err(kind_mismatch(problem, "a multigraph instance")),
            };
            let c = match start {
                Some(Solution::Cut(c)) => c,
                Some(_) => return Err(kind_mismatch(problem, "a cut start")),
                None => Cut::unordered(vec![false; mg.vertex_count()]),
            };
            climb_cut(mg, c, keep_trace)
        }
        ProblemKind::MaxSat | ProblemKind::MaxNaeSat => {
            let f = match instance {
                Instance::Formula(f) => f,
                _ => return Err(kind_mismatch(problem, "a CNF instance")),
            };
            let a = match start {
                Some(Solution::Assignment(a)) => a,
                Some(_) => return Err(kind_mismatch(problem, "an assignment start")),
                None => Assignment::all_true(f.num_vars()),
            };
            climb_flip_formula(problem, f, a, keep_trace)
        }
    }
}

fn kind_mismatch(problem: ProblemKind, expected: &'static str) -> ClimbError {
    ClimbError::KindMismatch { problem, expected }
}

fn require_graph<'a>(
    problem: ProblemKind,
    instance: &'a Instance,
) -> Result<&'a Graph, ClimbError> {
    instance.as_graph().ok_or(kind_mismatch(problem, "a graph instance"))
}

fn canonical_vertex_start(problem: ProblemKind, g: &Graph) -> VertexSet {
    match problem {
        ProblemKind::IndependentSet => {
            let mut s = VertexSet::empty();
            for v in 0..g.vertex_count() {
                if g.neighbors(v).iter().all(|&u| !s.contains(u)) {
                    s.insert(v);
                }
            }
            s
        }
        ProblemKind::Clique => {
            let mut s = VertexSet::empty();
            for v in 0..g.vertex_count() {
                if s.iter().all(|u| g.has_edge(u, v)) {
                    s.insert(v);
                }
            }
            s
        }
        _ => VertexSet::full(g.vertex_count()),
    }
}

fn greedy_matching(g: &Graph) -> Matching {
    let mut taken: Vec<(usize, usize)> = Vec::new();
    let mut covered = vec![false; g.vertex_count()];
    for (u, v) in g.edges() {
        if !covered[u] && !covered[v] {
            covered[u] = true;
            covered[v] = true;
            taken.push((u, v));
        }
    }
    Matching::new(taken).expect("greedy edges are valid pairs")
}

fn climb_vertex_problem(
    problem: ProblemKind,
    g: &Graph,
    mut s: VertexSet,
    k: usize,
    keep_trace: bool,
) -> Result<ClimbReport, ClimbError> {
    let checker = match problem {
        ProblemKind::IndependentSet => local::find_is_improvement,
        ProblemKind::Clique => local::find_clique_improvement,
        ProblemKind::VertexCover => local::find_vc_improvement,
        ProblemKind::DominatingSet => local::find_ds_improvement,
        ProblemKind::FeedbackVertexSet => local::find_fvs_improvement,
        _ => unreachable!("vertex problems only"),
    };
    let mut trace = Trace::new(keep_trace);
    while let Some(mv) = checker(g, &s, k)? {
        s = s.apply_swap(&mv.remove, &mv.add);
        trace.record(Move::Swap(mv));
    }
    Ok(ClimbReport { solution: Solution::Vertices(s), steps: trace.steps, trace: trace.moves })
}

fn climb_matching(
    g: &Graph,
    mut m: Matching,
    k: usize,
    keep_trace: bool,
) -> Result<ClimbReport, ClimbError> {
    let mut trace = Trace::new(keep_trace);
    while let Some(mv) = local::find_matching_improvement(g, &m, k)? {
        let mut edges: Vec<(usize, usize)> =
            m.iter().filter(|e| !mv.remove.contains(e)).collect();
        edges.extend_from_slice(&mv.add);
        m = Matching::new(edges).expect("swap produces valid pairs");
        trace.record(Move::EdgeSwap(mv));
    }
    Ok(ClimbReport { solution: Solution::Edges(m), steps: trace.steps, trace: trace.moves })
}

fn climb_cut(mg: &MultiGraph, mut c: Cut, keep_trace: bool) -> Result<ClimbReport, ClimbError> {
    let mut trace = Trace::new(keep_trace);
    while let Some(mv) = local::find_cut_improvement(mg, &c)? {
        c = c.flip_vertex(mv.target);
        trace.record(Move::Flip(mv));
    }
    Ok(ClimbReport { solution: Solution::Cut(c), steps: trace.steps, trace: trace.moves })
}

fn climb_flip_formula(
    problem: ProblemKind,
    f: &CnfFormula,
    mut a: Assignment,
    keep_trace: bool,
) -> Result<ClimbReport, ClimbError> {
    let checker = match problem {
        ProblemKind::MaxSat => local::find_sat_flip,
        ProblemKind::MaxNaeSat => local::find_nae_flip,
        _ => unreachable!("flip formulas only"),
    };
    let mut trace = Trace::new(keep_trace);
    while let Some(mv) = checker(f, &a)? {
        a = a.flip(mv.target);
        trace.record(Move::Flip(mv));
    }
    Ok(ClimbReport { solution: Solution::Assignment(a), steps: trace.steps, trace: trace.moves })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::Clause;

    #[test]
    fn climb_is_example() {
        let p3 = Graph::path(3);
        let report = climb(
            ProblemKind::IndependentSet,
            &Instance::Graph(p3),
            2,
            Some(Solution::Vertices(VertexSet::new([1]))),
            true,
        )
        .unwrap();
        assert_eq!(report.solution, Solution::Vertices(VertexSet::new([0, 2])));
        assert_eq!(report.steps, 1);
        assert_eq!(report.trace.as_ref().map(Vec::len), Some(1));
    }

    #[test]
    fn climb_cut_example() {
        let c4 = MultiGraph::from_graph(&Graph::cycle(4));
        let report = climb(ProblemKind::MaxCut, &Instance::MultiGraph(c4.clone()), 1, None, false)
            .unwrap();
        let Solution::Cut(cut) = &report.solution else { panic!("cut expected") };
        assert_eq!(c4.cut_weight(cut).unwrap(), 4);
        assert!(report.steps <= c4.total_multiplicity() as usize);
    }

    #[test]
    fn climb_sat_example() {
        let f = CnfFormula::with_repeats(1, &[(Clause::positive([0]).unwrap(), 3)]).unwrap();
        let report = climb(
            ProblemKind::MaxSat,
            &Instance::Formula(f),
            1,
            Some(Solution::Assignment(Assignment::all_false(1))),
            false,
        )
        .unwrap();
        assert_eq!(report.solution, Solution::Assignment(Assignment::all_true(1)));
        assert_eq!(report.steps, 1);
    }

    #[test]
    fn canonical_starts_are_feasible_and_deterministic() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        for problem in [
            ProblemKind::IndependentSet,
            ProblemKind::Clique,
            ProblemKind::VertexCover,
            ProblemKind::DominatingSet,
            ProblemKind::FeedbackVertexSet,
            ProblemKind::Matching,
        ] {
            let instance = Instance::Graph(g.clone());
            let a = climb(problem, &instance, 2, None, false).unwrap();
            let b = climb(problem, &instance, 2, None, false).unwrap();
            assert_eq!(a, b, "{problem} climb must be deterministic");
            assert!(a.steps <= g.vertex_count());
        }
    }

    #[test]
    fn infeasible_start_is_rejected() {
        let k3 = Graph::complete(3);
        let err = climb(
            ProblemKind::IndependentSet,
            &Instance::Graph(k3),
            2,
            Some(Solution::Vertices(VertexSet::new([0, 1]))),
            false,
        )
        .unwrap_err();
        assert!(matches!(err, ClimbError::Local(LocalError::Infeasible { .. })));
    }

    #[test]
    fn wrong_instance_kind_is_rejected() {
        let f = CnfFormula::new(1, alloc::vec![Clause::positive([0]).unwrap()]).unwrap();
        let err =
            climb(ProblemKind::IndependentSet, &Instance::Formula(f), 2, None, false).unwrap_err();
        assert!(matches!(err, ClimbError::KindMismatch { .. }));
    }
}
