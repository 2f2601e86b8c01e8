//! Core algorithms for local search on unweighted combinatorial problems.
//!
//! This crate implements, for seven problems (maximum independent set,
//! maximum clique, minimum vertex cover, minimum dominating set, minimum
//! feedback vertex set, maximum matching under edge swaps, and max cut /
//! max (NAE)SAT under single flips):
//!
//! * definition-level local-optimality checkers that either certify a
//!   solution locally optimal or return an improving move ([`local`]),
//! * deterministic hill-climbing drivers with per-problem step bounds
//!   ([`climb`]),
//! * exhaustive enumeration oracles for all local optima ([`oracle`]),
//! * a polynomial-time decision-and-witness algorithm for two k-maximal
//!   matchings built on general-graph maximum matching ([`matching`]),
//! * gadget builders that translate instances between the problems while
//!   preserving the number of local optima, together with solution
//!   lift/project maps ([`reduce`]).
//!
//! The crate is `no_std` (with `alloc`): all values are immutable after
//! construction and every operation is a pure function, so shared
//! instances can be used concurrently without restriction. File formats,
//! serialization, and random instance generation live in the companion
//! CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod bitset;
mod combo;

pub mod climb;
pub mod cnf;
pub mod graph;
pub mod local;
pub mod matching;
pub mod oracle;
pub mod reduce;

pub use climb::{climb, ClimbError, ClimbReport, Instance, Move, ProblemKind, Solution};
pub use cnf::{Assignment, Clause, CnfError, CnfFormula, Literal};
pub use graph::{Cut, Graph, GraphError, Matching, MultiGraph, VertexSet};
pub use local::{EdgeSwapMove, FlipMove, LocalError, SwapMove};
