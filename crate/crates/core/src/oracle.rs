//! Naive reference implementations.
//!
//! Nothing here touches the solvers or the bitset machinery: each oracle
//! copies the graph into a plain boolean matrix via [`SimpleGraph::has_edge`]
//! and enumerates. They are slow on purpose and refuse inputs above their
//! caps instead of degrading.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Size caps for the exhaustive routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_order_enumeration: usize,
    pub max_order_removal: usize,
    pub max_order_distances: usize,
}

pub const LIMITS: OracleLimits = OracleLimits {
    max_order_enumeration: 24,
    max_order_removal: 200,
    max_order_distances: 500,
};

fn matrix(g: &SimpleGraph, routine: &'static str, cap: usize) -> Result<Vec<Vec<bool>>> {
    let n = g.order();
    if n > cap {
        return Err(Error::Capacity {
            routine,
            order: n,
            cap,
        });
    }
    Ok((0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect())
}

/// Largest subset in which every pair satisfies `compatible`, by include /
/// exclude recursion that abandons a branch once a pair violates it.
fn largest_compatible(adj: &[Vec<bool>], compatible: impl Fn(bool) -> bool) -> usize {
    fn go(
        v: usize,
        adj: &[Vec<bool>],
        compatible: &dyn Fn(bool) -> bool,
        picked: &mut Vec<usize>,
        best: &mut usize,
    ) {
        if v == adj.len() {
            *best = (*best).max(picked.len());
            return;
        }
        // even taking every remaining vertex cannot beat best
        if picked.len() + (adj.len() - v) <= *best {
            return;
        }
        if picked.iter().all(|&u| compatible(adj[u][v])) {
            picked.push(v);
            go(v + 1, adj, compatible, picked, best);
            picked.pop();
        }
        go(v + 1, adj, compatible, picked, best);
    }
    let mut best = 0;
    go(0, adj, &compatible, &mut Vec::new(), &mut best);
    best
}

/// `β` by subset enumeration. Order at most 24.
pub fn oracle_max_independent(g: &SimpleGraph) -> Result<usize> {
    let adj = matrix(g, "oracle_max_independent", LIMITS.max_order_enumeration)?;
    Ok(largest_compatible(&adj, |edge| !edge))
}

/// `ω` by subset enumeration. Order at most 24.
pub fn oracle_max_clique(g: &SimpleGraph) -> Result<usize> {
    let adj = matrix(g, "oracle_max_clique", LIMITS.max_order_enumeration)?;
    Ok(largest_compatible(&adj, |edge| edge))
}

/// `γ` with the first dominating set met, trying sizes 1, 2, ... and
/// subsets of each size in lexicographic index order. Order at most 24.
pub fn oracle_min_dominating(g: &SimpleGraph) -> Result<(usize, Vec<usize>)> {
    let adj = matrix(g, "oracle_min_dominating", LIMITS.max_order_enumeration)?;
    let n = adj.len();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let dominates = |set: &[usize]| (0..n).all(|v| set.iter().any(|&u| u == v || adj[u][v]));
    for k in 1..=n {
        // lexicographic k-combinations of 0..n
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            if dominates(&combo) {
                return Ok((k, combo));
            }
            let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
                break;
            };
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    unreachable!("the whole vertex set dominates")
}

fn components(adj: &[Vec<bool>], removed: Option<usize>) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    if let Some(r) = removed {
        seen[r] = true;
    }
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if adj[u][v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    count
}

/// Cut vertices by deleting each vertex and recounting components.
/// Order at most 200.
pub fn oracle_articulation(g: &SimpleGraph) -> Result<Vec<usize>> {
    let adj = matrix(g, "oracle_articulation", LIMITS.max_order_removal)?;
    let base = components(&adj, None);
    Ok((0..adj.len())
        .filter(|&v| {
            // an isolated vertex disappears with its component
            let isolated = !adj[v].iter().any(|&e| e);
            let after = components(&adj, Some(v));
            after > base - usize::from(isolated)
        })
        .collect())
}

/// All-pairs distances by relaxing `d[i][j] > d[i][k] + d[k][j]` over every
/// triple until nothing changes. `None` marks unreachable pairs.
/// Order at most 500.
#[allow(clippy::needless_range_loop)]
pub fn oracle_all_pairs_distances(g: &SimpleGraph) -> Result<Vec<Vec<Option<usize>>>> {
    let adj = matrix(g, "oracle_all_pairs_distances", LIMITS.max_order_distances)?;
    let n = adj.len();
    let mut d: Vec<Vec<Option<usize>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i == j, adj[i][j]) {
                    (true, _) => Some(0),
                    (false, true) => Some(1),
                    (false, false) => None,
                })
                .collect()
        })
        .collect();
    loop {
        let mut changed = false;
        for k in 0..n {
            for i in 0..n {
                let Some(ik) = d[i][k] else { continue };
                for j in 0..n {
                    let Some(kj) = d[k][j] else { continue };
                    if d[i][j].is_none_or(|ij| ik + kj < ij) {
                        d[i][j] = Some(ik + kj);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return Ok(d);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{build_topo_graph, join, SubsetVertex};

    fn topo(n: usize) -> SimpleGraph {
        build_topo_graph(n).unwrap().to_simple()
    }

    #[test]
    fn independence() {
        assert_eq!(oracle_max_independent(&topo(4)).unwrap(), 7);
        assert_eq!(oracle_max_independent(&topo(3)).unwrap(), 3);
        assert_eq!(
            oracle_max_independent(&SimpleGraph::complete(2)).unwrap(),
            1
        );
    }

    #[test]
    fn domination() {
        assert_eq!(oracle_min_dominating(&topo(4)).unwrap().0, 4);
        let j = join(&topo(3), &topo(3)).unwrap();
        let (gamma, set) = oracle_min_dominating(&j).unwrap();
        assert_eq!(gamma, 2);
        assert!(j.is_dominating(&set));
        assert_eq!(
            oracle_min_dominating(&SimpleGraph::complete(2)).unwrap().0,
            1
        );
    }

    #[test]
    fn clique() {
        assert_eq!(oracle_max_clique(&topo(4)).unwrap(), 4);
        assert_eq!(oracle_max_clique(&topo(2)).unwrap(), 2);
        assert_eq!(oracle_max_clique(&SimpleGraph::null(4)).unwrap(), 1);
    }

    #[test]
    fn articulation() {
        assert_eq!(oracle_articulation(&topo(3)).unwrap(), vec![0, 1, 3]);
        assert_eq!(oracle_articulation(&topo(4)).unwrap(), vec![0, 1, 3, 7]);
        let c5 = SimpleGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(oracle_articulation(&c5).unwrap().is_empty());
    }

    #[test]
    fn distances() {
        let t3 = build_topo_graph(3).unwrap();
        let d3 = oracle_all_pairs_distances(&t3.to_simple()).unwrap();
        let i3 = |e: &[usize]| t3.index_of(SubsetVertex::from_elements(t3.ground(), e).unwrap());
        assert_eq!(d3[i3(&[1, 2])][i3(&[1, 3])], Some(3));

        let t4 = build_topo_graph(4).unwrap();
        let d4 = oracle_all_pairs_distances(&t4.to_simple()).unwrap();
        let i4 = |e: &[usize]| t4.index_of(SubsetVertex::from_elements(t4.ground(), e).unwrap());
        assert_eq!(d4[i4(&[1])][i4(&[2])], Some(1));
        assert_eq!(d4[i4(&[1, 2])][i4(&[1, 3, 4])], Some(3));
    }

    #[test]
    fn caps_are_enforced() {
        let big = SimpleGraph::null(25);
        assert!(matches!(
            oracle_max_independent(&big),
            Err(Error::Capacity { cap: 24, .. })
        ));
        assert!(oracle_min_dominating(&big).is_err());
        assert!(oracle_max_clique(&big).is_err());
        assert!(oracle_articulation(&SimpleGraph::null(201)).is_err());
        assert!(oracle_all_pairs_distances(&SimpleGraph::null(501)).is_err());
    }
}
