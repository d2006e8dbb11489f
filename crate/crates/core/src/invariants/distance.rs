use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Per-vertex eccentricities with radius and diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eccentricities {
    pub per_vertex: Vec<usize>,
    pub radius: usize,
    pub diameter: usize,
}

/// Breadth-first distances from `source`; `None` for unreachable vertices.
pub fn bfs_distances(g: &SimpleGraph, source: usize) -> Vec<Option<usize>> {
    let n = g.order();
    let mut dist = vec![None; n];
    dist[source] = Some(0);
    let mut unvisited = BitSet::full(n);
    unvisited.remove(source);
    let mut frontier = BitSet::from_indices(n, [source]);
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let mut next = BitSet::new(n);
        for v in &frontier {
            next.union_with(g.neighborhood(v));
        }
        next.intersect_with(&unvisited);
        unvisited.difference_with(&next);
        for v in &next {
            dist[v] = Some(level);
        }
        frontier = next;
    }
    dist
}

fn eccentricity(g: &SimpleGraph, source: usize) -> Option<usize> {
    bfs_distances(g, source)
        .into_iter()
        .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
}

/// Eccentricities of a connected graph; sources are searched in parallel.
pub fn eccentricities(g: &SimpleGraph) -> Result<Eccentricities> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let per_vertex: Option<Vec<usize>> = (0..g.order())
        .into_par_iter()
        .map(|v| eccentricity(g, v))
        .collect();
    let Some(per_vertex) = per_vertex else {
        return Err(Error::Disconnected {
            components: super::connectivity(g).component_count,
        });
    };
    Ok(Eccentricities {
        radius: *per_vertex.iter().min().unwrap(),
        diameter: *per_vertex.iter().max().unwrap(),
        per_vertex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{build_topo_graph, SubsetVertex};

    #[test]
    fn topo_four() {
        let t = build_topo_graph(4).unwrap();
        let e = eccentricities(&t.to_simple()).unwrap();
        let idx = |els: &[usize]| t.index_of(SubsetVertex::from_elements(t.ground(), els).unwrap());
        assert_eq!(e.per_vertex[idx(&[1])], 2);
        assert_eq!(e.per_vertex[idx(&[1, 2])], 3);
        assert_eq!((e.radius, e.diameter), (2, 3));
    }

    #[test]
    fn k2() {
        let e = eccentricities(&build_topo_graph(2).unwrap().to_simple()).unwrap();
        assert_eq!(e.per_vertex, vec![1, 1]);
        assert_eq!((e.radius, e.diameter), (1, 1));
    }

    #[test]
    fn disconnected_rejected() {
        let g = SimpleGraph::null(3);
        assert_eq!(
            eccentricities(&g),
            Err(Error::Disconnected { components: 3 })
        );
        assert_eq!(bfs_distances(&g, 0), vec![Some(0), None, None]);
    }
}
