//! Instance translations between the problem families, each returning
//! the built instance plus a gadget map that records the introduced
//! vertices/variables and realizes the solution correspondences
//! (lift: source solution → target solution, project: target → source).
//!
//! All builders are deterministic: gadget ids are laid out in fixed
//! blocks after the original ids, and clause/edge emission follows the
//! canonical orders of the source instance.

mod blowup;
mod domfvs;
mod h;
mod maxcut;
mod naesat;
mod positivize;
mod twosat;

pub use blowup::{blowup, BlowupMap};
pub use domfvs::{build_dom_fvs_graph, SubdivisionMap};
pub use h::{build_h, HGadgetMap, HProjection};
pub use maxcut::{build_maxcut, VarVertexMap};
pub use naesat::{build_naesat, NaesatGadgetMap};
pub use positivize::{positivize, PolarityMap};
pub use twosat::{build_2sat, CutSatMap};

use core::fmt;

use crate::cnf::CnfError;
use crate::graph::{Graph, GraphError, VertexSet};
use crate::local::LocalError;

/// Errors from the builders and the lift/project maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReduceError {
    /// The forbidden set of an extension instance must be independent.
    ForbiddenNotIndependent,
    /// The construction requires a graph without isolated vertices.
    IsolatedVertex { vertex: usize },
    /// The construction requires at least one edge.
    NoEdges,
    /// The construction requires a larger swap level.
    KTooSmall { k: usize, min: usize },
    /// A clause shape the target construction cannot encode.
    UnsupportedClause { len: usize },
    /// A clause with a negative literal where only positive ones are
    /// allowed.
    NegativeLiteral { var: usize },
    /// A solution argument is not in the domain of the map.
    InvalidSolution { expected: &'static str },
    Graph(GraphError),
    Cnf(CnfError),
    Local(LocalError),
}

impl fmt::Display for ReduceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReduceError::ForbiddenNotIndependent => {
                write!(f, "forbidden vertex set must be independent")
            }
            ReduceError::IsolatedVertex { vertex } => {
                write!(f, "graph must have no isolated vertices, but {vertex} is isolated")
            }
            ReduceError::NoEdges => write!(f, "graph must have at least one edge"),
            ReduceError::KTooSmall { k, min } => {
                write!(f, "swap level k={k} must be at least {min}")
            }
            ReduceError::UnsupportedClause { len } => {
                write!(f, "clauses must have 2 or 3 literals, found {len}")
            }
            ReduceError::NegativeLiteral { var } => {
                write!(f, "clauses must be positive, found negated variable {var}")
            }
            ReduceError::InvalidSolution { expected } => {
                write!(f, "solution is not {expected}")
            }
            ReduceError::Graph(e) => write!(f, "{e}"),
            ReduceError::Cnf(e) => write!(f, "{e}"),
            ReduceError::Local(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ReduceError {}

impl From<GraphError> for ReduceError {
    fn from(e: GraphError) -> Self {
        ReduceError::Graph(e)
    }
}

impl From<CnfError> for ReduceError {
    fn from(e: CnfError) -> Self {
        ReduceError::Cnf(e)
    }
}

impl From<LocalError> for ReduceError {
    fn from(e: LocalError) -> Self {
        ReduceError::Local(e)
    }
}

/// An extension instance: a graph together with an independent set of
/// forbidden vertices; the question is whether some maximal independent
/// set avoids all of them. This is the common source instance of the
/// gadget constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiseInstance {
    graph: Graph,
    forbidden: VertexSet,
}

impl MiseInstance {
    pub fn new(graph: Graph, forbidden: VertexSet) -> Result<Self, ReduceError> {
        if !graph.is_independent_set(&forbidden)? {
            return Err(ReduceError::ForbiddenNotIndependent);
        }
        Ok(MiseInstance { graph, forbidden })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn forbidden(&self) -> &VertexSet {
        &self.forbidden
    }
}
