//! Minimum dominating set as an exact set cover over closed neighborhoods.
//!
//! The decision search asks whether `k` more vertices from an allowed pool
//! can cover the undominated set. It branches on the undominated vertex with
//! the fewest allowed dominators, prunes with `k · max coverage < remaining`,
//! and drops each tried candidate from the pool of its later siblings.
//!
//! `γ` is found by increasing `k` from `⌈order / (Δ + 1)⌉`. The witness is
//! then rebuilt slot by slot as the lexicographically least optimal set under
//! the priority order (degree descending, index ascending).

use super::{Budget, Deadline, Solved};
use crate::bitset::BitSet;
use crate::graph::SimpleGraph;

struct Timeout;

struct DominationSearch {
    closed: Vec<BitSet>,
    deadline: Deadline,
}

impl DominationSearch {
    fn new(g: &SimpleGraph, budget: Budget) -> Self {
        let closed = (0..g.order())
            .map(|v| {
                let mut c = g.neighborhood(v).clone();
                c.insert(v);
                c
            })
            .collect();
        DominationSearch {
            closed,
            deadline: budget.start(),
        }
    }

    fn feasible(
        &mut self,
        undominated: &BitSet,
        allowed: &BitSet,
        k: usize,
        chosen: &mut Vec<usize>,
    ) -> Result<bool, Timeout> {
        if undominated.is_empty() {
            return Ok(true);
        }
        if k == 0 {
            return Ok(false);
        }
        if self.deadline.expired() {
            return Err(Timeout);
        }
        let remaining = undominated.len();
        let max_cover = allowed
            .iter()
            .map(|v| self.closed[v].intersection_len(undominated))
            .max()
            .unwrap_or(0);
        if max_cover * k < remaining {
            return Ok(false);
        }

        let mut pivot = None;
        let mut fewest = usize::MAX;
        for u in undominated {
            let c = self.closed[u].intersection_len(allowed);
            if c < fewest {
                fewest = c;
                pivot = Some(u);
                if c <= 1 {
                    break;
                }
            }
        }
        let pivot = pivot.expect("undominated set is nonempty");
        if fewest == 0 {
            return Ok(false);
        }

        let mut candidates: Vec<usize> = self.closed[pivot].intersection(allowed).iter().collect();
        candidates
            .sort_by_key(|&c| std::cmp::Reverse(self.closed[c].intersection_len(undominated)));

        let mut pool = allowed.clone();
        for c in candidates {
            chosen.push(c);
            let mut rest = undominated.clone();
            rest.difference_with(&self.closed[c]);
            pool.remove(c);
            if self.feasible(&rest, &pool, k - 1, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
}

fn greedy_dominating(closed: &[BitSet]) -> Vec<usize> {
    let n = closed.len();
    let mut undominated = BitSet::full(n);
    let mut set = Vec::new();
    while !undominated.is_empty() {
        let v = (0..n)
            .max_by_key(|&v| {
                (
                    closed[v].intersection_len(&undominated),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        set.push(v);
        undominated.difference_with(&closed[v]);
    }
    set.sort_unstable();
    set
}

/// Domination number `γ` with a canonical minimum dominating set.
///
/// The witness is the lexicographically least minimum dominating set when
/// vertices are ranked by degree descending, then index ascending. On budget
/// exhaustion before `γ` is settled the result is a greedy upper bound,
/// flagged inexact. If only the canonical rebuild runs out, the value stays
/// exact and the witness is the one the decision search found.
pub fn domination_number(g: &SimpleGraph, budget: Budget) -> Solved {
    let n = g.order();
    if n == 0 {
        return Solved {
            value: 0,
            witness: Vec::new(),
            exact: true,
        };
    }
    let mut search = DominationSearch::new(g, budget);
    let upper = greedy_dominating(&search.closed);
    let max_closed = search.closed.iter().map(BitSet::len).max().unwrap();
    let lower = n.div_ceil(max_closed);

    let all = BitSet::full(n);
    let mut found = None;
    for k in lower..upper.len() {
        let mut chosen = Vec::new();
        match search.feasible(&all, &all, k, &mut chosen) {
            Ok(true) => {
                found = Some(chosen);
                break;
            }
            Ok(false) => {}
            Err(Timeout) => {
                return Solved {
                    value: upper.len(),
                    witness: upper,
                    exact: false,
                };
            }
        }
    }
    let mut witness = found.unwrap_or(upper);
    witness.sort_unstable();
    let gamma = witness.len();

    if let Ok(canonical) = canonical_witness(&mut search, g, gamma) {
        witness = canonical;
    }
    Solved {
        value: gamma,
        witness,
        exact: true,
    }
}

fn canonical_witness(
    search: &mut DominationSearch,
    g: &SimpleGraph,
    gamma: usize,
) -> Result<Vec<usize>, Timeout> {
    let n = g.order();
    let mut ranked: Vec<usize> = (0..n).collect();
    ranked.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut undominated = BitSet::full(n);
    let mut picked = Vec::with_capacity(gamma);
    let mut start = 0;
    for slot in 0..gamma {
        let mut chosen = None;
        for pos in start..n {
            let allowed = BitSet::from_indices(n, ranked[pos + 1..].iter().copied());
            let mut rest = undominated.clone();
            rest.difference_with(&search.closed[ranked[pos]]);
            if search.feasible(&rest, &allowed, gamma - slot - 1, &mut Vec::new())? {
                chosen = Some((pos, rest));
                break;
            }
        }
        let (pos, rest) = chosen.expect("a size-γ dominating set exists");
        picked.push(ranked[pos]);
        undominated = rest;
        start = pos + 1;
    }
    picked.sort_unstable();
    Ok(picked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{build_topo_graph, corona, join};

    #[test]
    fn topo_domination_numbers() {
        for (n, gamma) in [(2, 1), (3, 3), (4, 4), (5, 5), (6, 6)] {
            let g = build_topo_graph(n).unwrap().to_simple();
            let s = domination_number(&g, Budget::default());
            assert!(s.exact);
            assert_eq!(s.value, gamma, "n={n}");
            assert!(g.is_dominating(&s.witness));
        }
    }

    #[test]
    fn topo_five_witness_is_singletons() {
        let t = build_topo_graph(5).unwrap();
        let s = domination_number(&t.to_simple(), Budget::default());
        let singles: Vec<usize> = t.singletons().iter().map(|&v| t.index_of(v)).collect();
        assert_eq!(s.witness, singles);
    }

    #[test]
    fn products() {
        let g3 = build_topo_graph(3).unwrap().to_simple();
        let g2 = build_topo_graph(2).unwrap().to_simple();
        let c = corona(&g3, &g2).unwrap();
        assert_eq!(domination_number(&c, Budget::default()).value, 6);
        let j = join(&g3, &g3).unwrap();
        let s = domination_number(&j, Budget::default());
        assert_eq!(s.value, 2);
        // one vertex from each side
        assert!(s.witness[0] < 6 && s.witness[1] >= 6);
        assert_eq!(
            domination_number(&join(&g2, &g3).unwrap(), Budget::default()).value,
            1
        );
    }

    #[test]
    fn isolated_vertices_must_be_chosen() {
        let g = SimpleGraph::from_edges(5, [(0, 1)]).unwrap();
        let s = domination_number(&g, Budget::default());
        assert_eq!(s.value, 4);
        assert_eq!(s.witness, vec![0, 2, 3, 4]);
    }
}
