//! Edge-gadget graph shared by the dominating-set and
//! feedback-vertex-set translations: every edge `{u, v}` gains `k`
//! fresh vertices adjacent to exactly `u` and `v`, each forming a
//! length-2 path (and hence a triangle with the retained edge).
//!
//! A vertex set over the original ids is then a vertex cover of the
//! source graph iff it is a dominating set of the built graph iff it is
//! a feedback vertex set of the built graph, and for swap level `k` no
//! k-minimal solution of either kind touches the gadget vertices.

use alloc::vec::Vec;

use crate::graph::Graph;

use super::ReduceError;

/// Per-edge gadget ids of one built graph.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SubdivisionMap {
    pub original_n: usize,
    pub k: usize,
    /// Source edges in ascending order, parallel to `gadgets`.
    pub edges: Vec<(usize, usize)>,
    /// The `k` gadget vertex ids attached to each edge.
    pub gadgets: Vec<Vec<usize>>,
}

/// Builds the edge-gadget graph for `k >= 2`; the result has
/// `n + k * m` vertices and `m * (1 + 2k)` edges.
pub fn build_dom_fvs_graph(g: &Graph, k: usize) -> Result<(Graph, SubdivisionMap), ReduceError> {
    if k < 2 {
        return Err(ReduceError::KTooSmall { k, min: 2 });
    }
    let n = g.vertex_count();
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(ReduceError::IsolatedVertex { vertex: v });
    }
    let source_edges: Vec<(usize, usize)> = g.edges().collect();
    let mut edges: Vec<(usize, usize)> = source_edges.clone();
    let mut gadgets = Vec::with_capacity(source_edges.len());
    for (j, &(u, v)) in source_edges.iter().enumerate() {
        let ids: Vec<usize> = (0..k).map(|i| n + j * k + i).collect();
        for &x in &ids {
            edges.push((u, x));
            edges.push((x, v));
        }
        gadgets.push(ids);
    }
    let built = Graph::new(n + k * source_edges.len(), &edges)?;
    Ok((built, SubdivisionMap { original_n: n, k, edges: source_edges, gadgets }))
}

impl SubdivisionMap {
    /// True iff `v` is one of the added gadget vertices.
    pub fn is_gadget_vertex(&self, v: usize) -> bool {
        v >= self.original_n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn single_edge_sizes() {
        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        let (h, map) = build_dom_fvs_graph(&edge, 2).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.edge_count(), 5);
        assert_eq!(map.gadgets, alloc::vec![alloc::vec![2, 3]]);
    }

    #[test]
    fn path_sizes() {
        let p3 = Graph::path(3);
        let (h, _) = build_dom_fvs_graph(&p3, 2).unwrap();
        assert_eq!(h.vertex_count(), 3 + 4);
        assert_eq!(h.edge_count(), 2 * (1 + 4));
    }

    #[test]
    fn cover_iff_dominating_iff_feedback() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        for k in [2, 3] {
            let (h, _) = build_dom_fvs_graph(&g, k).unwrap();
            for code in 0..16u32 {
                let s = VertexSet::new((0..4).filter(|&v| code >> v & 1 == 1));
                let cover = g.is_vertex_cover(&s).unwrap();
                assert_eq!(cover, h.is_dominating_set(&s).unwrap());
                assert_eq!(cover, h.is_feedback_vertex_set(&s).unwrap());
            }
        }
    }

    #[test]
    fn rejects_isolated_and_small_k() {
        let lonely = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(
            build_dom_fvs_graph(&lonely, 2),
            Err(ReduceError::IsolatedVertex { vertex: 2 })
        );
        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(build_dom_fvs_graph(&edge, 1), Err(ReduceError::KTooSmall { k: 1, min: 2 }));
    }
}
