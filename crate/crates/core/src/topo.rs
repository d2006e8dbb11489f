//! The disjointness graph on the nonempty proper subsets of `{1, ..., n}`.
//!
//! Two subsets are adjacent exactly when they share no element. Adjacency is
//! never stored: it is a single `AND` on the masks. Vertex `i` in canonical
//! order is the subset with mask `i + 1`, so indices and masks convert in O(1).

use crate::bitset::BitSet;
use crate::error::Result;
use crate::graph::SimpleGraph;
use crate::subset::{GroundSet, SubsetVertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopoGraph {
    ground: GroundSet,
}

/// Builds the disjointness graph for a ground set of size `n` (`2 <= n <= 16`).
///
/// ```
/// let g = topograph::build_topo_graph(4).unwrap();
/// assert_eq!(g.order(), 14);
/// assert_eq!(g.size(), 25);
/// ```
pub fn build_topo_graph(n: usize) -> Result<TopoGraph> {
    Ok(TopoGraph {
        ground: GroundSet::new(n)?,
    })
}

/// Adjacency in any disjointness graph: distinct and disjoint.
#[inline]
pub fn is_adjacent(u: SubsetVertex, v: SubsetVertex) -> bool {
    u != v && u.is_disjoint(v)
}

/// Nonempty submasks of `mask`, ascending.
pub(crate) fn nonempty_submasks(mask: u32) -> impl Iterator<Item = u32> {
    // (sub - mask) & mask steps through the submasks of `mask` in increasing order
    let mut sub = 0u32;
    std::iter::from_fn(move || {
        sub = sub.wrapping_sub(mask) & mask;
        (sub != 0).then_some(sub)
    })
}

impl TopoGraph {
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.n()
    }

    /// `2^n - 2`.
    pub fn order(&self) -> usize {
        self.ground.proper_subset_count()
    }

    /// Edge count `(3^n - 2^(n+1) + 1) / 2`.
    ///
    /// Ordered pairs of disjoint subsets number `3^n`; dropping those with an
    /// empty or full side and the `(∅, ∅)` pair leaves twice the edge count.
    pub fn size(&self) -> usize {
        let n = self.n() as u32;
        (3usize.pow(n) - 1) / 2 - 2usize.pow(n) + 1
    }

    /// All vertices in canonical (increasing mask) order.
    pub fn vertices(&self) -> impl Iterator<Item = SubsetVertex> + '_ {
        (1..self.ground.full_mask()).map(SubsetVertex::from_mask_unchecked)
    }

    #[inline]
    pub fn vertex(&self, index: usize) -> SubsetVertex {
        debug_assert!(index < self.order());
        SubsetVertex::from_mask_unchecked(index as u32 + 1)
    }

    #[inline]
    pub fn index_of(&self, v: SubsetVertex) -> usize {
        debug_assert!(self.ground.contains(v));
        v.mask() as usize - 1
    }

    pub fn contains(&self, v: SubsetVertex) -> bool {
        self.ground.contains(v)
    }

    #[inline]
    pub fn is_adjacent(&self, u: SubsetVertex, v: SubsetVertex) -> bool {
        is_adjacent(u, v)
    }

    /// Closed form `2^(n - |v|) - 1`: the nonempty subsets of the complement.
    #[inline]
    pub fn degree(&self, v: SubsetVertex) -> usize {
        (1usize << (self.n() - v.len())) - 1
    }

    /// Neighbors of `v`, i.e. nonempty subsets of its complement, ascending.
    pub fn neighbors(&self, v: SubsetVertex) -> Vec<SubsetVertex> {
        let complement = self.ground.full_mask() & !v.mask();
        nonempty_submasks(complement)
            .map(SubsetVertex::from_mask_unchecked)
            .collect()
    }

    /// Vertices of a given cardinality, ascending.
    pub fn vertices_of_size(&self, k: usize) -> Vec<SubsetVertex> {
        self.vertices().filter(|v| v.len() == k).collect()
    }

    pub fn singletons(&self) -> Vec<SubsetVertex> {
        self.vertices_of_size(1)
    }

    /// Edges `(u, v)` with `u < v` by mask, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (SubsetVertex, SubsetVertex)> + '_ {
        let full = self.ground.full_mask();
        self.vertices().flat_map(move |u| {
            nonempty_submasks(full & !u.mask())
                .filter(move |&w| w > u.mask())
                .map(move |w| (u, SubsetVertex::from_mask_unchecked(w)))
        })
    }

    /// Explicit copy with the same vertex order; labels are set notation.
    pub fn to_simple(&self) -> SimpleGraph {
        let order = self.order();
        let full = self.ground.full_mask();
        let rows = self
            .vertices()
            .map(|v| {
                let mut row = BitSet::new(order);
                for w in nonempty_submasks(full & !v.mask()) {
                    row.insert(w as usize - 1);
                }
                row
            })
            .collect();
        let labels = self.vertices().map(|v| v.to_string()).collect();
        SimpleGraph::from_rows(rows, Some(labels))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(g: &TopoGraph, elems: &[usize]) -> SubsetVertex {
        SubsetVertex::from_elements(g.ground(), elems).unwrap()
    }

    #[test]
    fn small_orders_and_sizes() {
        for (n, order, size) in [(2, 2, 1), (3, 6, 6), (4, 14, 25)] {
            let g = build_topo_graph(n).unwrap();
            assert_eq!(g.order(), order);
            assert_eq!(g.size(), size);
            assert_eq!(g.edges().count(), size);
        }
    }

    #[test]
    fn out_of_range_n() {
        assert!(build_topo_graph(1).is_err());
        assert!(build_topo_graph(17).is_err());
        assert!(build_topo_graph(20).is_err());
    }

    #[test]
    fn adjacency_examples() {
        let g = build_topo_graph(4).unwrap();
        assert!(is_adjacent(sv(&g, &[1]), sv(&g, &[2])));
        assert!(!is_adjacent(sv(&g, &[1]), sv(&g, &[1, 2])));
        assert!(is_adjacent(sv(&g, &[1, 2]), sv(&g, &[3, 4])));
        assert!(!is_adjacent(sv(&g, &[1]), sv(&g, &[1])));
    }

    #[test]
    fn degree_examples() {
        let g5 = build_topo_graph(5).unwrap();
        assert_eq!(g5.degree(sv(&g5, &[1])), 15);
        let g4 = build_topo_graph(4).unwrap();
        assert_eq!(g4.degree(sv(&g4, &[1, 2, 3])), 1);
        assert_eq!(g4.degree(sv(&g4, &[1, 2])), 3);
    }

    #[test]
    fn neighbor_examples() {
        let g3 = build_topo_graph(3).unwrap();
        assert_eq!(g3.neighbors(sv(&g3, &[1, 2])), vec![sv(&g3, &[3])]);
        let g4 = build_topo_graph(4).unwrap();
        assert_eq!(
            g4.neighbors(sv(&g4, &[1, 2])),
            vec![sv(&g4, &[3]), sv(&g4, &[4]), sv(&g4, &[3, 4])]
        );
        let g2 = build_topo_graph(2).unwrap();
        assert_eq!(g2.neighbors(sv(&g2, &[1])), vec![sv(&g2, &[2])]);
    }

    #[test]
    fn to_simple_matches_implicit_graph() {
        let g = build_topo_graph(4).unwrap();
        let s = g.to_simple();
        assert_eq!((s.order(), s.size()), (14, 25));
        for u in g.vertices() {
            for v in g.vertices() {
                assert_eq!(
                    s.has_edge(g.index_of(u), g.index_of(v)),
                    g.is_adjacent(u, v)
                );
            }
        }
        assert_eq!(s.label(g.index_of(sv(&g, &[1, 3]))), "{1,3}");
    }

    #[test]
    fn submask_enumeration() {
        assert_eq!(
            nonempty_submasks(0b1010).collect::<Vec<_>>(),
            vec![2, 8, 10]
        );
        assert_eq!(nonempty_submasks(0).count(), 0);
    }
}
