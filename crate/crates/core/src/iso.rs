//! Isomorphism testing for very small graphs by exhaustive search.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Largest order accepted by [`are_isomorphic`].
pub const MAX_ISO_ORDER: usize = 10;

/// Whether some bijection of vertices preserves adjacency in both directions.
///
/// Candidate images are restricted to vertices of equal degree, and each
/// partial assignment is checked against all previously mapped vertices.
pub fn are_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool> {
    for x in [g, h] {
        if x.order() > MAX_ISO_ORDER {
            return Err(Error::Capacity {
                routine: "are_isomorphic",
                order: x.order(),
                cap: MAX_ISO_ORDER,
            });
        }
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let (dg, dh) = (g.degrees(), h.degrees());
    let (mut sg, mut sh) = (dg.clone(), dh.clone());
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return Ok(false);
    }

    // most constrained first: high degree vertices fix more adjacency
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(dg[v]));

    let mut image = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    Ok(extend(g, h, &dg, &dh, &order, 0, &mut image, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &SimpleGraph,
    h: &SimpleGraph,
    dg: &[usize],
    dh: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..h.order() {
        if used[w] || dh[w] != dg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(g, h, dg, dh, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{build_topo_graph, corona};

    fn cycle(k: usize) -> SimpleGraph {
        SimpleGraph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
    }

    #[test]
    fn small_topo_graphs() {
        let g2 = build_topo_graph(2).unwrap().to_simple();
        assert!(are_isomorphic(&g2, &SimpleGraph::complete(2)).unwrap());
        let g3 = build_topo_graph(3).unwrap().to_simple();
        let k3k1 = corona(&SimpleGraph::complete(3), &SimpleGraph::complete(1)).unwrap();
        assert!(are_isomorphic(&g3, &k3k1).unwrap());
        assert!(!are_isomorphic(&g3, &SimpleGraph::complete(6)).unwrap());
    }

    #[test]
    fn same_degree_sequence_not_isomorphic() {
        // C6 and two disjoint triangles are both 2-regular on 6 vertices
        let triangles =
            SimpleGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&cycle(6), &triangles).unwrap());
        assert!(are_isomorphic(&cycle(6), &cycle(6)).unwrap());
    }

    #[test]
    fn capacity_cap() {
        let big = SimpleGraph::complete(11);
        assert!(matches!(
            are_isomorphic(&big, &big),
            Err(Error::Capacity { cap: 10, .. })
        ));
    }
}
