//! Exact graph invariants.
//!
//! Polynomial invariants (degrees, components, distances, articulation
//! points, pendants) always return exact answers. The three NP-hard ones
//! (clique, independence, domination) run under a wall-clock [`Budget`] and
//! report a flagged bound when it runs out.

mod basic;
mod clique;
mod cut;
mod distance;
mod domination;

use std::time::{Duration, Instant};

use serde::Serialize;

pub use basic::{connectivity, degree_extremes, pendant_vertices, Connectivity};
pub use clique::{clique_number, independence_number};
pub use cut::cut_vertices;
pub use distance::{bfs_distances, eccentricities, Eccentricities};
pub use domination::domination_number;

use crate::graph::SimpleGraph;

/// Wall-clock allowance for one solver invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(Duration);

impl Budget {
    pub const DEFAULT_SECONDS: u64 = 30;

    pub fn new(limit: Duration) -> Self {
        Budget(limit)
    }

    pub fn from_secs_f64(secs: f64) -> Self {
        Budget(Duration::from_secs_f64(secs))
    }

    pub fn limit(&self) -> Duration {
        self.0
    }

    pub(crate) fn start(&self) -> Deadline {
        Deadline {
            at: Instant::now().checked_add(self.0),
            ticks: 0,
            expired: false,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget(Duration::from_secs(Self::DEFAULT_SECONDS))
    }
}

/// Polled by search loops; reads the clock every 1024 calls.
pub(crate) struct Deadline {
    at: Option<Instant>,
    ticks: u32,
    expired: bool,
}

impl Deadline {
    #[inline]
    pub(crate) fn expired(&mut self) -> bool {
        if self.expired {
            return true;
        }
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(1024) {
            if let Some(at) = self.at {
                self.expired = Instant::now() >= at;
            }
        }
        self.expired
    }
}

/// Result of an exact search that may have been cut short.
///
/// When `exact` is false, `value` is the best bound reached: a lower bound for
/// maximization problems, an upper bound for minimization. The witness always
/// certifies `value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solved {
    pub value: usize,
    pub witness: Vec<usize>,
    pub exact: bool,
}

/// Every invariant of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub order: usize,
    pub size: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_connected: bool,
    pub component_count: usize,
    pub clique: Solved,
    pub independence: Solved,
    pub domination: Solved,
    /// `None` for disconnected graphs.
    pub radius: Option<usize>,
    pub diameter: Option<usize>,
    pub cut_vertices: Vec<usize>,
    pub pendant_vertices: Vec<usize>,
}

pub fn compute_report(g: &SimpleGraph, budget: Budget) -> InvariantReport {
    let (min_degree, max_degree) = degree_extremes(g);
    let conn = connectivity(g);
    let ecc = eccentricities(g).ok();
    InvariantReport {
        order: g.order(),
        size: g.size(),
        min_degree,
        max_degree,
        is_connected: conn.is_connected,
        component_count: conn.component_count,
        clique: clique_number(g, budget),
        independence: independence_number(g, budget),
        domination: domination_number(g, budget),
        radius: ecc.as_ref().map(|e| e.radius),
        diameter: ecc.as_ref().map(|e| e.diameter),
        cut_vertices: cut_vertices(g),
        pendant_vertices: pendant_vertices(g),
    }
}
