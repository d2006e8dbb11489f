use crate::bitset::BitSet;
use crate::graph::SimpleGraph;

/// `(δ, Δ)`; `(0, 0)` for the empty graph.
pub fn degree_extremes(g: &SimpleGraph) -> (usize, usize) {
    let degrees = g.degrees();
    let min = degrees.iter().copied().min().unwrap_or(0);
    let max = degrees.iter().copied().max().unwrap_or(0);
    (min, max)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Connectivity {
    pub is_connected: bool,
    pub component_count: usize,
}

pub fn connectivity(g: &SimpleGraph) -> Connectivity {
    let n = g.order();
    let mut unvisited = BitSet::full(n);
    let mut components = 0;
    while let Some(root) = unvisited.first() {
        components += 1;
        unvisited.remove(root);
        let mut frontier = BitSet::from_indices(n, [root]);
        while !frontier.is_empty() {
            let mut next = BitSet::new(n);
            for v in &frontier {
                next.union_with(g.neighborhood(v));
            }
            next.intersect_with(&unvisited);
            unvisited.difference_with(&next);
            frontier = next;
        }
    }
    Connectivity {
        is_connected: components <= 1,
        component_count: components,
    }
}

/// Vertices of degree exactly one, ascending.
pub fn pendant_vertices(g: &SimpleGraph) -> Vec<usize> {
    (0..g.order()).filter(|&v| g.degree(v) == 1).collect()
}
