//! Level blow-up: each vertex becomes an independent group of `k - 1`
//! copies, with groups completely joined iff the originals are
//! adjacent. Maximal independent sets then use groups as blocks, and
//! the blow-up turns the 2-maximal independent sets of the base graph
//! into exactly the k-maximal independent sets of the result.

use core::ops::Range;

use crate::graph::{Graph, VertexSet};

use super::ReduceError;

/// Group layout of a blow-up: vertex `v` becomes the id range
/// `v*(k-1) .. (v+1)*(k-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BlowupMap {
    pub original_n: usize,
    pub k: usize,
}

/// Builds the blow-up for level `k >= 2`. At `k = 2` the groups are
/// singletons and the result equals the input.
pub fn blowup(h: &Graph, k: usize) -> Result<(Graph, BlowupMap), ReduceError> {
    if k < 2 {
        return Err(ReduceError::KTooSmall { k, min: 2 });
    }
    let width = k - 1;
    let n = h.vertex_count();
    let mut edges = alloc::vec::Vec::new();
    for (u, v) in h.edges() {
        for i in 0..width {
            for j in 0..width {
                edges.push((u * width + i, v * width + j));
            }
        }
    }
    let g = Graph::new(n * width, &edges)?;
    Ok((g, BlowupMap { original_n: n, k }))
}

impl BlowupMap {
    /// Id range of the group of original vertex `v`.
    pub fn group(&self, v: usize) -> Range<usize> {
        let width = self.k - 1;
        v * width..(v + 1) * width
    }

    /// Union of the groups of the members of `s`.
    pub fn lift(&self, s: &VertexSet) -> Result<VertexSet, ReduceError> {
        if s.max().is_some_and(|v| v >= self.original_n) {
            return Err(ReduceError::InvalidSolution {
                expected: "a set of original vertices",
            });
        }
        Ok(VertexSet::new(s.iter().flat_map(|v| self.group(v))))
    }

    /// Original vertices whose group intersects `s_k`.
    pub fn project(&self, s_k: &VertexSet) -> Result<VertexSet, ReduceError> {
        if s_k.max().is_some_and(|v| v >= self.original_n * (self.k - 1)) {
            return Err(ReduceError::InvalidSolution {
                expected: "a set of blow-up vertices",
            });
        }
        Ok(VertexSet::new(s_k.iter().map(|v| v / (self.k - 1))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_blowup_is_complete_tripartite() {
        let (g, map) = blowup(&Graph::complete(3), 3).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
        // Groups stay independent.
        for v in 0..3 {
            let group = VertexSet::new(map.group(v));
            assert!(g.is_independent_set(&group).unwrap());
        }
    }

    #[test]
    fn level_two_is_identity() {
        let h = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let (g, map) = blowup(&h, 2).unwrap();
        assert_eq!(g, h);
        assert_eq!(map.group(2), 2..3);
    }

    #[test]
    fn single_edge_blowup_is_complete_bipartite() {
        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        let (g, _) = blowup(&edge, 4).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 9);
    }

    #[test]
    fn project_inverts_lift() {
        let h = Graph::cycle(5);
        let (_, map) = blowup(&h, 3).unwrap();
        for code in 0..32u32 {
            let s = VertexSet::new((0..5).filter(|&v| code >> v & 1 == 1));
            assert_eq!(map.project(&map.lift(&s).unwrap()).unwrap(), s);
        }
    }

    #[test]
    fn rejects_small_k() {
        assert_eq!(
            blowup(&Graph::complete(3), 1),
            Err(ReduceError::KTooSmall { k: 1, min: 2 })
        );
    }
}
