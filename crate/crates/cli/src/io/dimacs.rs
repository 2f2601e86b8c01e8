//! DIMACS edge and CNF readers/writers.
//!
//! Graphs: `p edge <n> <m>` followed by `m` lines `e <u> <v>`
//! (1-indexed). Repeated `e` lines accumulate multiplicity; contexts
//! expecting a simple graph reject any multiplicity above one.
//!
//! CNF: `p cnf <vars> <clauses>` followed by zero-terminated clause
//! token streams. Repeated clause lines encode the clause multiset; the
//! comment extension `c rep <count>` applies the count to the next
//! clause, which keeps the big repetition blocks of the gadget
//! formulas readable.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use locopt_core::cnf::{Clause, CnfFormula, Literal};
use locopt_core::graph::{Graph, MultiGraph};

use super::ParseError;

struct EdgeList {
    n: usize,
    multiplicity: BTreeMap<(usize, usize), (u64, usize)>,
}

fn parse_edge_list(text: &str) -> Result<EdgeList, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut multiplicity: BTreeMap<(usize, usize), (u64, usize)> = BTreeMap::new();
    let mut edge_lines = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(ParseError::new(line_no, "duplicate problem line"));
                }
                if tokens.next() != Some("edge") {
                    return Err(ParseError::new(line_no, "expected 'p edge <n> <m>'"));
                }
                let n = parse_count(tokens.next(), line_no, "vertex count")?;
                let m = parse_count(tokens.next(), line_no, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header
                    .ok_or_else(|| ParseError::new(line_no, "edge before problem line"))?;
                let u = parse_count(tokens.next(), line_no, "endpoint")?;
                let v = parse_count(tokens.next(), line_no, "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(ParseError::new(
                        line_no,
                        format!("endpoint out of range 1..={n}"),
                    ));
                }
                if u == v {
                    return Err(ParseError::new(line_no, format!("self-loop at vertex {u}")));
                }
                let key = (u.min(v) - 1, u.max(v) - 1);
                let entry = multiplicity.entry(key).or_insert((0, line_no));
                entry.0 += 1;
                edge_lines += 1;
            }
            Some(other) => {
                return Err(ParseError::new(line_no, format!("unknown line kind '{other}'")));
            }
            None => unreachable!("nonempty line has a token"),
        }
    }
    let (n, m) = header.ok_or_else(|| ParseError::new(1, "missing 'p edge' line"))?;
    if edge_lines != m {
        return Err(ParseError::new(
            1,
            format!("problem line declares {m} edges, found {edge_lines}"),
        ));
    }
    Ok(EdgeList { n, multiplicity })
}

fn parse_count(token: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    token
        .ok_or_else(|| ParseError::new(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| ParseError::new(line, format!("invalid {what}")))
}

/// Parses a simple graph; repeated edge lines are rejected.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let list = parse_edge_list(text)?;
    let mut edges = Vec::with_capacity(list.multiplicity.len());
    for (&(u, v), &(mult, line)) in &list.multiplicity {
        if mult > 1 {
            return Err(ParseError::new(
                line,
                format!("edge {}-{} repeated; this context needs a simple graph", u + 1, v + 1),
            ));
        }
        edges.push((u, v));
    }
    Graph::new(list.n, &edges).map_err(|e| ParseError::new(1, e.to_string()))
}

/// Parses a multigraph; repeated edge lines accumulate multiplicity.
pub fn parse_multigraph(text: &str) -> Result<MultiGraph, ParseError> {
    let list = parse_edge_list(text)?;
    let entries: Vec<(usize, usize, u64)> =
        list.multiplicity.iter().map(|(&(u, v), &(mult, _))| (u, v, mult)).collect();
    MultiGraph::new(list.n, &entries).map_err(|e| ParseError::new(1, e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn write_multigraph(mg: &MultiGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", mg.vertex_count(), mg.total_multiplicity());
    for (u, v, mult) in mg.pairs() {
        for _ in 0..mult {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
    }
    out
}

/// Parses DIMACS CNF with the `c rep <count>` extension.
pub fn parse_cnf(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut pending_rep: Option<usize> = None;
    let mut current: Vec<Literal> = Vec::new();
    let mut current_start_line = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('c') {
            let mut tokens = rest.split_whitespace();
            if tokens.next() == Some("rep") {
                let count = parse_count(tokens.next(), line_no, "repetition count")?;
                if count == 0 {
                    return Err(ParseError::new(line_no, "repetition count must be positive"));
                }
                if pending_rep.is_some() {
                    return Err(ParseError::new(line_no, "stacked 'c rep' lines"));
                }
                pending_rep = Some(count);
            }
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(ParseError::new(line_no, "duplicate problem line"));
            }
            let mut tokens = line.split_whitespace();
            tokens.next();
            if tokens.next() != Some("cnf") {
                return Err(ParseError::new(line_no, "expected 'p cnf <vars> <clauses>'"));
            }
            let vars = parse_count(tokens.next(), line_no, "variable count")?;
            let count = parse_count(tokens.next(), line_no, "clause count")?;
            header = Some((vars, count));
            continue;
        }
        let (vars, _) =
            header.ok_or_else(|| ParseError::new(line_no, "clause before problem line"))?;
        if current.is_empty() {
            current_start_line = line_no;
        }
        for token in line.split_whitespace() {
            let value: i64 = token
                .parse()
                .map_err(|_| ParseError::new(line_no, format!("invalid literal '{token}'")))?;
            if value == 0 {
                let clause = Clause::new(current.drain(..))
                    .map_err(|e| ParseError::new(current_start_line, e.to_string()))?;
                let reps = pending_rep.take().unwrap_or(1);
                for _ in 0..reps {
                    clauses.push(clause.clone());
                }
                current_start_line = line_no;
                continue;
            }
            let var = value.unsigned_abs() as usize;
            if var > vars {
                return Err(ParseError::new(
                    line_no,
                    format!("variable {var} out of range 1..={vars}"),
                ));
            }
            current.push(if value < 0 {
                Literal::negative(var - 1)
            } else {
                Literal::positive(var - 1)
            });
        }
    }
    let (vars, declared) = header.ok_or_else(|| ParseError::new(1, "missing 'p cnf' line"))?;
    if !current.is_empty() {
        return Err(ParseError::new(current_start_line, "unterminated clause (missing 0)"));
    }
    if pending_rep.is_some() {
        return Err(ParseError::new(current_start_line, "'c rep' without a following clause"));
    }
    if clauses.len() != declared {
        return Err(ParseError::new(
            1,
            format!("problem line declares {declared} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(vars, clauses).map_err(|e| ParseError::new(1, e.to_string()))
}

/// Writes DIMACS CNF, run-length compressing consecutive identical
/// clauses with `c rep`.
pub fn write_cnf(f: &CnfFormula) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p cnf {} {}", f.num_vars(), f.clause_count());
    let clauses = f.clauses();
    let mut i = 0;
    while i < clauses.len() {
        let mut j = i + 1;
        while j < clauses.len() && clauses[j] == clauses[i] {
            j += 1;
        }
        if j - i > 1 {
            let _ = writeln!(out, "c rep {}", j - i);
        }
        for lit in clauses[i].literals() {
            let value = if lit.negated { -((lit.var + 1) as i64) } else { (lit.var + 1) as i64 };
            let _ = write!(out, "{value} ");
        }
        let _ = writeln!(out, "0");
        i = j;
    }
    out
}
