//! The extension-to-independence gadget graph.
//!
//! Given an extension instance on a graph `G` without isolated
//! vertices, the built graph `H` has a unique 2-maximal independent set
//! containing the apex vertex `a` (the canonical solution), and its
//! other 2-maximal independent sets correspond exactly to the maximal
//! independent sets of `G` avoiding the forbidden set.
//!
//! Construction, with `Y = V(G) \ X = {y_0, ..., y_{t-1}}` ascending:
//! five vertices `a, b, b', c, c'` with edges `{a,b}`, `{b,x}` for
//! every forbidden `x`, and the 4-cycle `b-c-b'-c'`; per `y_i` two
//! vertices `z_i, z'_i` each adjacent to `y_i`, `b`, and `b'`; per
//! `y_i` three vertices `c_i, c'_i, y'_i` completing the 4-cycle
//! `y_i-c_i-y'_i-c'_i`, so `{y_i, y'_i}` and `{c_i, c'_i}` are its
//! independent diagonals.

use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::local;

use super::{MiseInstance, ReduceError};

/// Ids of the gadget vertices of one built graph `H`. Original
/// vertices keep their ids; gadget blocks follow them.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HGadgetMap {
    /// Vertex count of the original graph; originals keep ids `0..n`.
    pub original_n: usize,
    pub a: usize,
    pub b: usize,
    pub b_prime: usize,
    pub c: usize,
    pub c_prime: usize,
    /// The non-forbidden original vertices `y_i`, ascending.
    pub y: Vec<usize>,
    /// Per-`y_i` gadget ids, parallel to `y`.
    pub z: Vec<usize>,
    pub z_prime: Vec<usize>,
    pub c_i: Vec<usize>,
    pub c_i_prime: Vec<usize>,
    pub y_prime: Vec<usize>,
    /// The forbidden original vertices, ascending.
    pub x: Vec<usize>,
}

/// Result of projecting a 2-maximal independent set of `H` back to the
/// source graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HProjection {
    /// The projected maximal independent set of the source graph.
    pub solution: VertexSet,
    /// The input after the repair swaps, still a 2-maximal independent
    /// set of `H`.
    pub repaired: VertexSet,
    /// Gadget indices `i` whose diagonal was swapped from
    /// `{c_i, c'_i}` to `{y_i, y'_i}`, in application order.
    pub swaps: Vec<usize>,
}

/// Builds `H` for an extension instance whose graph has no isolated
/// vertices. `|V(H)| = n + 5 + 5t` where `t = |Y|`.
pub fn build_h(inst: &MiseInstance) -> Result<(Graph, HGadgetMap), ReduceError> {
    let g = inst.graph();
    let n = g.vertex_count();
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(ReduceError::IsolatedVertex { vertex: v });
    }
    let x: Vec<usize> = inst.forbidden().iter().collect();
    let y: Vec<usize> = (0..n).filter(|&v| !inst.forbidden().contains(v)).collect();
    let t = y.len();

    let a = n;
    let b = n + 1;
    let b_prime = n + 2;
    let c = n + 3;
    let c_prime = n + 4;
    let block = |i: usize| n + 5 + 5 * i;
    let map = HGadgetMap {
        original_n: n,
        a,
        b,
        b_prime,
        c,
        c_prime,
        z: (0..t).map(|i| block(i)).collect(),
        z_prime: (0..t).map(|i| block(i) + 1).collect(),
        c_i: (0..t).map(|i| block(i) + 2).collect(),
        c_i_prime: (0..t).map(|i| block(i) + 3).collect(),
        y_prime: (0..t).map(|i| block(i) + 4).collect(),
        y,
        x,
    };

    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.push((a, b));
    for &xv in &map.x {
        edges.push((b, xv));
    }
    edges.extend([(b, c), (b, c_prime), (b_prime, c), (b_prime, c_prime)]);
    for i in 0..t {
        let yi = map.y[i];
        for z in [map.z[i], map.z_prime[i]] {
            edges.extend([(z, yi), (z, b), (z, b_prime)]);
        }
        edges.extend([
            (yi, map.c_i[i]),
            (map.c_i[i], map.y_prime[i]),
            (map.y_prime[i], map.c_i_prime[i]),
            (map.c_i_prime[i], yi),
        ]);
    }
    let h = Graph::new(n + 5 + 5 * t, &edges)?;
    Ok((h, map))
}

impl HGadgetMap {
    fn gadget_count(&self) -> usize {
        self.y.len()
    }

    /// The unique 2-maximal independent set of `H` containing `a`:
    /// `{a, c, c'} ∪ X ∪ Z ∪ {c_i, c'_i}`, of size `3 + |X| + 4t`.
    pub fn canonical_solution(&self) -> VertexSet {
        VertexSet::new(
            [self.a, self.c, self.c_prime]
                .into_iter()
                .chain(self.x.iter().copied())
                .chain(self.z.iter().copied())
                .chain(self.z_prime.iter().copied())
                .chain(self.c_i.iter().copied())
                .chain(self.c_i_prime.iter().copied()),
        )
    }

    /// Lifts a maximal independent set of the source graph avoiding the
    /// forbidden vertices to a 2-maximal independent set of `H`:
    /// `{b, b'} ∪ {y_i, y'_i : y_i ∈ d} ∪ {c_i, c'_i : y_i ∉ d}`.
    pub fn lift(&self, d: &VertexSet) -> Result<VertexSet, ReduceError> {
        if !d.iter().all(|v| self.y.binary_search(&v).is_ok()) {
            return Err(ReduceError::InvalidSolution {
                expected: "a set of non-forbidden original vertices",
            });
        }
        let mut members = alloc::vec![self.b, self.b_prime];
        for i in 0..self.gadget_count() {
            if d.contains(self.y[i]) {
                members.push(self.y[i]);
                members.push(self.y_prime[i]);
            } else {
                members.push(self.c_i[i]);
                members.push(self.c_i_prime[i]);
            }
        }
        Ok(VertexSet::new(members))
    }

    /// Projects a 2-maximal independent set `s ≠` canonical of `H` to a
    /// maximal independent set of the source graph avoiding the
    /// forbidden vertices.
    ///
    /// While some `y_i ∉ s` has no neighbor in `s ∩ Y`, the gadget
    /// diagonal `{c_i, c'_i}` is swapped for `{y_i, y'_i}`; each swap
    /// keeps the set a 2-maximal independent set and strictly grows
    /// `|s ∩ Y|`, so at most `t` swaps happen. The result is the final
    /// `s ∩ Y`.
    pub fn project(&self, h: &Graph, s: &VertexSet) -> Result<HProjection, ReduceError> {
        if s.contains(self.a) {
            return Err(ReduceError::InvalidSolution {
                expected: "a solution distinct from the canonical one (it contains the apex)",
            });
        }
        if local::find_is_improvement(h, s, 2)?.is_some() {
            return Err(ReduceError::InvalidSolution {
                expected: "a 2-maximal independent set",
            });
        }
        let n = self.original_n;
        let mut current = s.clone();
        let mut swaps = Vec::new();
        loop {
            let mut swapped = false;
            for i in 0..self.gadget_count() {
                let yi = self.y[i];
                if current.contains(yi) {
                    continue;
                }
                // Original neighbors of y_i are exactly its H-neighbors
                // with ids below n; s ∩ originals never meets the
                // forbidden set here, so this tests domination in Y.
                let dominated =
                    h.neighbors(yi).iter().any(|&w| w < n && current.contains(w));
                if dominated {
                    continue;
                }
                current.remove(self.c_i[i]);
                current.remove(self.c_i_prime[i]);
                current.insert(yi);
                current.insert(self.y_prime[i]);
                swaps.push(i);
                swapped = true;
            }
            if !swapped {
                break;
            }
        }
        let solution = VertexSet::new(current.iter().filter(|&v| v < n));
        Ok(HProjection { solution, repaired: current, swaps })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn mise(g: Graph, x: &[usize]) -> MiseInstance {
        MiseInstance::new(g, VertexSet::new(x.iter().copied())).unwrap()
    }

    #[test]
    fn sizes_match_construction_arithmetic() {
        let edge = mise(Graph::new(2, &[(0, 1)]).unwrap(), &[0]);
        let (h, map) = build_h(&edge).unwrap();
        assert_eq!(h.vertex_count(), 2 + 5 + 5);
        assert_eq!(map.y, alloc::vec![1]);

        let p4 = mise(Graph::path(4), &[0, 3]);
        let (h, map) = build_h(&p4).unwrap();
        assert_eq!(h.vertex_count(), 4 + 5 + 10);
        // Degree of b: a, X, all of Z, c, c'.
        let t = map.y.len();
        assert_eq!(h.degree(map.b), 1 + map.x.len() + 2 * t + 2);
    }

    #[test]
    fn rejects_isolated_vertices() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let inst = mise(g, &[0]);
        assert_eq!(build_h(&inst), Err(ReduceError::IsolatedVertex { vertex: 2 }));
    }

    #[test]
    fn canonical_solution_shape() {
        let edge = mise(Graph::new(2, &[(0, 1)]).unwrap(), &[0]);
        let (h, map) = build_h(&edge).unwrap();
        let sa = map.canonical_solution();
        assert_eq!(sa.len(), 3 + 1 + 4);
        assert!(sa.contains(map.a));
        assert!(!sa.contains(map.b));
        assert_eq!(local::find_is_improvement(&h, &sa, 2).unwrap(), None);

        let p4 = mise(Graph::path(4), &[0, 3]);
        let (h, map) = build_h(&p4).unwrap();
        let sa = map.canonical_solution();
        assert_eq!(sa.len(), 3 + 2 + 8);
        assert_eq!(local::find_is_improvement(&h, &sa, 2).unwrap(), None);
    }

    #[test]
    fn lift_produces_two_maximal_sets() {
        let edge = mise(Graph::new(2, &[(0, 1)]).unwrap(), &[0]);
        let (h, map) = build_h(&edge).unwrap();
        let lifted = map.lift(&VertexSet::new([1])).unwrap();
        assert_eq!(
            lifted,
            VertexSet::new([map.b, map.b_prime, map.y[0], map.y_prime[0]])
        );
        assert!(!lifted.contains(map.a));
        assert_eq!(local::find_is_improvement(&h, &lifted, 2).unwrap(), None);

        let p3 = mise(Graph::path(3), &[0, 2]);
        let (h, map) = build_h(&p3).unwrap();
        let lifted = map.lift(&VertexSet::new([1])).unwrap();
        assert_eq!(local::find_is_improvement(&h, &lifted, 2).unwrap(), None);
    }

    #[test]
    fn project_inverts_lift() {
        for (g, x) in [
            (Graph::new(2, &[(0, 1)]).unwrap(), alloc::vec![0usize]),
            (Graph::path(3), alloc::vec![0, 2]),
        ] {
            let inst = mise(g, &x);
            let (h, map) = build_h(&inst).unwrap();
            let d = crate::oracle::solve_mise(inst.graph(), inst.forbidden())
                .unwrap()
                .expect("these instances are solvable");
            let lifted = map.lift(&d).unwrap();
            let projection = map.project(&h, &lifted).unwrap();
            assert_eq!(projection.solution, d);
            // Already dominating in Y: no repair swaps needed.
            assert!(projection.swaps.is_empty());
        }
    }

    #[test]
    fn project_rejects_canonical_and_non_maximal() {
        let edge = mise(Graph::new(2, &[(0, 1)]).unwrap(), &[0]);
        let (h, map) = build_h(&edge).unwrap();
        assert!(map.project(&h, &map.canonical_solution()).is_err());
        assert!(map.project(&h, &VertexSet::new([map.b])).is_err());
    }
}
