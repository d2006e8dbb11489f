//! Corona and join products of simple graphs.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Corona `G ⊙ H`: one copy of `H` per vertex of `G`, with the `i`-th vertex
/// of `G` joined to every vertex of the `i`-th copy.
///
/// Vertices `0..|G|` are `G` itself; copy `i` occupies
/// `|G| + i·|H| .. |G| + (i+1)·|H|`. Labels read `g:h`.
///
/// ```
/// use topograph::{corona, SimpleGraph};
///
/// let g = corona(&SimpleGraph::complete(3), &SimpleGraph::complete(1)).unwrap();
/// assert_eq!((g.order(), g.size()), (6, 6));
/// ```
pub fn corona(g: &SimpleGraph, h: &SimpleGraph) -> Result<SimpleGraph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (gn, hn) = (g.order(), h.order());
    let mut out = SimpleGraph::empty(gn * (1 + hn));
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for i in 0..gn {
        let base = gn + i * hn;
        for (u, v) in h.edges() {
            out.add_edge(base + u, base + v);
        }
        for j in 0..hn {
            out.add_edge(i, base + j);
        }
    }
    let mut labels: Vec<String> = (0..gn).map(|i| g.label(i)).collect();
    for i in 0..gn {
        let gl = g.label(i);
        labels.extend((0..hn).map(|j| format!("{gl}:{}", h.label(j))));
    }
    Ok(out.with_labels(labels))
}

/// Join `G + H`: disjoint union plus every edge between the two sides.
///
/// `G` keeps indices `0..|G|`, `H` is shifted by `|G|`. Labels are prefixed
/// with `L` or `R`.
pub fn join(g: &SimpleGraph, h: &SimpleGraph) -> Result<SimpleGraph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (gn, hn) = (g.order(), h.order());
    let mut out = SimpleGraph::empty(gn + hn);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(gn + u, gn + v);
    }
    for u in 0..gn {
        for v in 0..hn {
            out.add_edge(u, gn + v);
        }
    }
    let labels = (0..gn)
        .map(|i| format!("L{}", g.label(i)))
        .chain((0..hn).map(|j| format!("R{}", h.label(j))))
        .collect();
    Ok(out.with_labels(labels))
}
