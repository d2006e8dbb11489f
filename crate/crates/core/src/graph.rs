//! Explicit undirected simple graphs stored as packed adjacency bit rows.

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// An undirected graph without loops or parallel edges.
///
/// Row `v` holds the open neighborhood of `v`. Rows are kept symmetric and
/// irreflexive by every constructor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    rows: Vec<BitSet>,
    size: usize,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        SimpleGraph {
            rows: vec![BitSet::new(order); order],
            size: 0,
            labels: None,
        }
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::empty(order);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= order {
                    return Err(Error::VertexOutOfBounds { index: x, order });
                }
            }
            if u != v {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub(crate) fn from_rows(rows: Vec<BitSet>, labels: Option<Vec<String>>) -> Self {
        debug_assert!(rows.iter().enumerate().all(|(v, r)| !r.contains(v)));
        let size = rows.iter().map(BitSet::len).sum::<usize>() / 2;
        SimpleGraph { rows, size, labels }
    }

    /// The complete graph `K_k`.
    pub fn complete(k: usize) -> Self {
        let rows = (0..k)
            .map(|v| {
                let mut r = BitSet::full(k);
                r.remove(v);
                r
            })
            .collect();
        SimpleGraph::from_rows(rows, None)
    }

    /// The null graph `N_k`.
    pub fn null(k: usize) -> Self {
        SimpleGraph::empty(k)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        if !self.rows[u].contains(v) {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
            self.size += 1;
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Open neighborhood of `v` as a bitset over vertex indices.
    #[inline]
    pub fn neighborhood(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(BitSet::len).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `v`; falls back to the decimal index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, r)| r.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.order();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, r)| {
                let mut c = BitSet::full(n);
                c.difference_with(r);
                c.remove(v);
                c
            })
            .collect();
        SimpleGraph::from_rows(rows, self.labels.clone())
    }

    /// Subgraph induced by `selection`, which is deduplicated and sorted.
    /// Labels are inherited.
    pub fn induced_subgraph(&self, selection: &[usize]) -> Result<SimpleGraph> {
        let mut keep: Vec<usize> = selection.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() {
            return Err(Error::EmptySelection);
        }
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.order()) {
            return Err(Error::VertexOutOfBounds {
                index: bad,
                order: self.order(),
            });
        }
        let k = keep.len();
        let rows = keep
            .iter()
            .map(|&u| {
                BitSet::from_indices(
                    k,
                    keep.iter()
                        .enumerate()
                        .filter(|&(_, &v)| self.has_edge(u, v))
                        .map(|(j, _)| j),
                )
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| keep.iter().map(|&v| l[v].clone()).collect());
        Ok(SimpleGraph::from_rows(rows, labels))
    }

    /// The graph with vertex `v` deleted; remaining indices shift down by one.
    pub fn without_vertex(&self, v: usize) -> Result<SimpleGraph> {
        let keep: Vec<usize> = (0..self.order()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Whether `set` dominates every vertex (each vertex is in `set` or adjacent to it).
    pub fn is_dominating(&self, set: &[usize]) -> bool {
        let mut covered = BitSet::new(self.order());
        for &v in set {
            covered.insert(v);
            covered.union_with(&self.rows[v]);
        }
        covered.len() == self.order()
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_null() {
        let k4 = SimpleGraph::complete(4);
        assert_eq!(k4.size(), 6);
        assert!(k4.degrees().iter().all(|&d| d == 3));
        assert_eq!(SimpleGraph::null(4).size(), 0);
        assert_eq!(k4.complement(), SimpleGraph::null(4));
    }

    #[test]
    fn from_edges_ignores_loops_and_duplicates() {
        let g = SimpleGraph::from_edges(3, [(0, 1), (1, 0), (2, 2), (1, 2)]).unwrap();
        assert_eq!(g.size(), 2);
        assert!(!g.has_edge(2, 2));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(SimpleGraph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn induced_subgraph_rejects_empty_selection() {
        let g = SimpleGraph::complete(3);
        assert_eq!(g.induced_subgraph(&[]), Err(Error::EmptySelection));
        let single = g.induced_subgraph(&[1]).unwrap();
        assert_eq!((single.order(), single.size()), (1, 0));
    }

    #[test]
    fn witness_predicates() {
        // path 0-1-2-3
        let p = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p.is_dominating(&[1, 2]));
        assert!(!p.is_dominating(&[0, 1]));
        assert!(p.is_independent(&[0, 2]));
        assert!(!p.is_independent(&[0, 1]));
        assert!(p.is_clique(&[1, 2]));
        assert!(!p.is_clique(&[0, 2]));
    }
}
