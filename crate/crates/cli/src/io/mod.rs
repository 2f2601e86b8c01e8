//! File formats: DIMACS edge lists for graphs and multigraphs, DIMACS
//! CNF with a run-length comment extension, plain 1-indexed solution
//! files, and JSON gadget maps.

mod dimacs;
mod solution;

pub use dimacs::{
    parse_cnf, parse_graph, parse_multigraph, write_cnf, write_graph, write_multigraph,
};
pub use solution::{
    parse_assignment, parse_cut, parse_matching, parse_vertex_set, write_assignment, write_cut,
    write_matching, write_vertex_set,
};

use locopt_core::reduce::{
    BlowupMap, CutSatMap, HGadgetMap, NaesatGadgetMap, PolarityMap, SubdivisionMap, VarVertexMap,
};
use serde::{Deserialize, Serialize};

/// Parse errors carry the 1-based line (or token position) at fault.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

/// A gadget map file: the map of one reduction, tagged by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reduction")]
pub enum GadgetMapFile {
    #[serde(rename = "h")]
    H(HGadgetMap),
    #[serde(rename = "blowup")]
    Blowup(BlowupMap),
    #[serde(rename = "dom-fvs")]
    DomFvs(SubdivisionMap),
    #[serde(rename = "naesat")]
    Naesat(NaesatGadgetMap),
    #[serde(rename = "positivize")]
    Positivize(PolarityMap),
    #[serde(rename = "maxcut")]
    Maxcut(VarVertexMap),
    #[serde(rename = "max2sat")]
    Max2Sat(CutSatMap),
}

impl GadgetMapFile {
    pub fn reduction_name(&self) -> &'static str {
        match self {
            GadgetMapFile::H(_) => "h",
            GadgetMapFile::Blowup(_) => "blowup",
            GadgetMapFile::DomFvs(_) => "dom-fvs",
            GadgetMapFile::Naesat(_) => "naesat",
            GadgetMapFile::Positivize(_) => "positivize",
            GadgetMapFile::Maxcut(_) => "maxcut",
            GadgetMapFile::Max2Sat(_) => "max2sat",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use locopt_core::graph::{Graph, VertexSet};
    use locopt_core::reduce::{build_h, MiseInstance};

    #[test]
    fn gadget_map_json_round_trip_and_field_names() {
        let inst =
            MiseInstance::new(Graph::new(2, &[(0, 1)]).unwrap(), VertexSet::new([0])).unwrap();
        let (_, map) = build_h(&inst).unwrap();
        let file = GadgetMapFile::H(map);
        let text = serde_json::to_string_pretty(&file).unwrap();
        for field in
            ["\"reduction\"", "\"a\"", "\"b\"", "\"b_prime\"", "\"c\"", "\"c_prime\"", "\"y\"",
             "\"z\"", "\"z_prime\"", "\"c_i\"", "\"c_i_prime\"", "\"y_prime\"", "\"x\""]
        {
            assert!(text.contains(field), "missing {field} in {text}");
        }
        let back: GadgetMapFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
    }
}
