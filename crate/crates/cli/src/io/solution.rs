//! Solution files: whitespace-separated 1-indexed tokens.
//!
//! * vertex sets: vertex ids;
//! * matchings: vertex ids consumed in pairs;
//! * assignments: a DIMACS-style model line of signed literals (an
//!   optional leading `v` and trailing `0` are accepted), every
//!   variable exactly once;
//! * cuts: the vertex list of side X.

use std::fmt::Write as _;

use locopt_core::cnf::Assignment;
use locopt_core::graph::{Cut, Matching, VertexSet};

use super::ParseError;

fn tokens_with_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim_start().starts_with('c'))
        .flat_map(|(idx, line)| line.split_whitespace().map(move |tok| (idx + 1, tok)))
}

fn parse_ids(text: &str, n: usize) -> Result<Vec<usize>, ParseError> {
    let mut ids = Vec::new();
    for (line, token) in tokens_with_lines(text) {
        let id: usize = token
            .parse()
            .map_err(|_| ParseError::new(line, format!("invalid vertex id '{token}'")))?;
        if id == 0 || id > n {
            return Err(ParseError::new(line, format!("vertex id {id} out of range 1..={n}")));
        }
        ids.push(id - 1);
    }
    Ok(ids)
}

/// Parses a vertex set over `[0, n)` from 1-indexed ids.
pub fn parse_vertex_set(text: &str, n: usize) -> Result<VertexSet, ParseError> {
    Ok(VertexSet::new(parse_ids(text, n)?))
}

pub fn write_vertex_set(s: &VertexSet) -> String {
    let mut out = String::new();
    for (i, v) in s.iter().enumerate() {
        let _ = write!(out, "{}{}", if i > 0 { " " } else { "" }, v + 1);
    }
    out.push('\n');
    out
}

/// Parses a matching as a flat list of 1-indexed endpoint pairs.
pub fn parse_matching(text: &str, n: usize) -> Result<Matching, ParseError> {
    let ids = parse_ids(text, n)?;
    if ids.len() % 2 != 0 {
        return Err(ParseError::new(1, "odd number of endpoints in matching file"));
    }
    Matching::new(ids.chunks(2).map(|pair| (pair[0], pair[1])))
        .map_err(|e| ParseError::new(1, e.to_string()))
}

pub fn write_matching(m: &Matching) -> String {
    let mut out = String::new();
    for (i, (u, v)) in m.iter().enumerate() {
        let _ = write!(out, "{}{} {}", if i > 0 { " " } else { "" }, u + 1, v + 1);
    }
    out.push('\n');
    out
}

/// Parses a total assignment from signed 1-indexed literals.
pub fn parse_assignment(text: &str, num_vars: usize) -> Result<Assignment, ParseError> {
    let mut values: Vec<Option<bool>> = vec![None; num_vars];
    for (line, token) in tokens_with_lines(text) {
        if token == "v" {
            continue;
        }
        let value: i64 = token
            .parse()
            .map_err(|_| ParseError::new(line, format!("invalid literal '{token}'")))?;
        if value == 0 {
            continue;
        }
        let var = value.unsigned_abs() as usize;
        if var > num_vars {
            return Err(ParseError::new(
                line,
                format!("variable {var} out of range 1..={num_vars}"),
            ));
        }
        if values[var - 1].is_some() {
            return Err(ParseError::new(line, format!("variable {var} assigned twice")));
        }
        values[var - 1] = Some(value > 0);
    }
    let values: Option<Vec<bool>> = values.into_iter().collect();
    match values {
        Some(values) => Ok(Assignment::new(values)),
        None => Err(ParseError::new(1, "assignment does not cover every variable")),
    }
}

pub fn write_assignment(a: &Assignment) -> String {
    let mut out = String::from("v");
    for (i, &value) in a.values().iter().enumerate() {
        let literal = if value { (i + 1) as i64 } else { -((i + 1) as i64) };
        let _ = write!(out, " {literal}");
    }
    out.push_str(" 0\n");
    out
}

/// Parses a cut from the 1-indexed vertex list of side X.
pub fn parse_cut(text: &str, n: usize, ordered: bool) -> Result<Cut, ParseError> {
    let x = parse_vertex_set(text, n)?;
    let sides: Vec<bool> = (0..n).map(|v| x.contains(v)).collect();
    Ok(if ordered { Cut::ordered(sides) } else { Cut::unordered(sides) })
}

pub fn write_cut(c: &Cut) -> String {
    write_vertex_set(&c.x_side())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_round_trip() {
        let s = VertexSet::new([0, 2, 5]);
        assert_eq!(parse_vertex_set(&write_vertex_set(&s), 6).unwrap(), s);
        assert_eq!(parse_vertex_set("", 3).unwrap(), VertexSet::empty());
        let err = parse_vertex_set("4", 3).unwrap_err();
        assert!(err.message.contains("out of range"));
    }

    #[test]
    fn matching_round_trip() {
        let m = Matching::new([(0, 1), (2, 3)]).unwrap();
        assert_eq!(parse_matching(&write_matching(&m), 4).unwrap(), m);
        assert!(parse_matching("1 2 3", 4).is_err());
    }

    #[test]
    fn assignment_round_trip() {
        let a = Assignment::new(vec![true, false, true]);
        assert_eq!(parse_assignment(&write_assignment(&a), 3).unwrap(), a);
        assert!(parse_assignment("1 -2", 3).is_err());
        assert!(parse_assignment("1 -1 2 -3", 3).is_err());
    }

    #[test]
    fn cut_round_trip() {
        let c = Cut::unordered(vec![true, false, true, false]);
        assert_eq!(parse_cut(&write_cut(&c), 4, false).unwrap(), c);
        let o = Cut::ordered(vec![false, true]);
        assert_eq!(parse_cut(&write_cut(&o), 2, true).unwrap(), o);
    }
}
