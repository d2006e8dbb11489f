//! Maximum clique by branch and bound with greedy-coloring bounds.
//!
//! Vertices are relabelled in non-increasing degree order. Each node colors
//! its candidate set greedily; a vertex whose color class index plus the
//! current clique size cannot beat the incumbent is pruned together with
//! every vertex after it.

use super::{Budget, Deadline, Solved};
use crate::bitset::BitSet;
use crate::graph::SimpleGraph;

struct CliqueSearch {
    rows: Vec<BitSet>,
    best: Vec<usize>,
    current: Vec<usize>,
    deadline: Deadline,
    timed_out: bool,
}

impl CliqueSearch {
    /// Candidates sorted by greedy color, with the color of each.
    fn color_sort(&self, cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = cand.clone();
        let mut verts = Vec::with_capacity(cand.len());
        let mut colors = Vec::with_capacity(cand.len());
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut class = uncolored.clone();
            while let Some(v) = class.first() {
                class.remove(v);
                class.difference_with(&self.rows[v]);
                uncolored.remove(v);
                verts.push(v);
                colors.push(color);
            }
        }
        (verts, colors)
    }

    fn expand(&mut self, mut cand: BitSet) {
        if self.deadline.expired() {
            self.timed_out = true;
            return;
        }
        let (verts, colors) = self.color_sort(&cand);
        for i in (0..verts.len()).rev() {
            if self.current.len() + colors[i] <= self.best.len() {
                return;
            }
            let v = verts[i];
            self.current.push(v);
            let next = cand.intersection(&self.rows[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand.remove(v);
            if self.timed_out {
                return;
            }
        }
    }
}

fn greedy_clique(rows: &[BitSet]) -> Vec<usize> {
    let mut cand = BitSet::full(rows.len());
    let mut clique = Vec::new();
    while !cand.is_empty() {
        let v = cand
            .iter()
            .max_by_key(|&v| (rows[v].intersection_len(&cand), std::cmp::Reverse(v)))
            .unwrap();
        clique.push(v);
        cand.intersect_with(&rows[v]);
    }
    clique
}

/// Clique number `ω` with a maximum clique as witness.
///
/// On budget exhaustion the result is the largest clique found so far,
/// flagged inexact.
pub fn clique_number(g: &SimpleGraph, budget: Budget) -> Solved {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut position = vec![0; n];
    for (i, &v) in perm.iter().enumerate() {
        position[v] = i;
    }
    let rows: Vec<BitSet> = perm
        .iter()
        .map(|&v| BitSet::from_indices(n, g.neighbors(v).map(|w| position[w])))
        .collect();

    let mut search = CliqueSearch {
        best: greedy_clique(&rows),
        rows,
        current: Vec::new(),
        deadline: budget.start(),
        timed_out: false,
    };
    if n > 0 {
        search.expand(BitSet::full(n));
    }
    let mut witness: Vec<usize> = search.best.iter().map(|&i| perm[i]).collect();
    witness.sort_unstable();
    Solved {
        value: witness.len(),
        witness,
        exact: !search.timed_out,
    }
}

/// Independence number `β`: a maximum clique of the complement.
pub fn independence_number(g: &SimpleGraph, budget: Budget) -> Solved {
    clique_number(&g.complement(), budget)
}
