//! Disjointness graphs of the nonempty proper subsets of a finite set.
//!
//! For a ground set `X = {1, ..., n}`, the graph has one vertex per nonempty
//! proper subset of `X` and an edge between two subsets exactly when they are
//! disjoint. This crate builds these graphs, computes their invariants
//! exactly, forms corona and join products, and checks a registry of
//! published claims about them against independent brute-force oracles.
//!
//! ```
//! use topograph::{build_topo_graph, invariants, Budget};
//!
//! let g = build_topo_graph(5).unwrap().to_simple();
//! let report = invariants::compute_report(&g, Budget::default());
//! assert_eq!(report.order, 30);
//! assert_eq!(report.max_degree, 15);
//! assert_eq!(report.independence.value, 15);
//! assert_eq!(report.domination.value, 5);
//! assert_eq!((report.radius, report.diameter), (Some(2), Some(3)));
//! ```
//!
//! The guide in `book/` walks through each part; its code listings are
//! compiled and run as doctests of this crate.

pub mod bitset;
pub mod claims;
mod error;
pub mod export;
mod graph;
pub mod invariants;
mod iso;
pub mod oracle;
mod product;
mod subset;
mod topo;

pub use error::{Error, Result};
pub use graph::SimpleGraph;
pub use invariants::{Budget, InvariantReport, Solved};
pub use iso::{are_isomorphic, MAX_ISO_ORDER};
pub use product::{corona, join};
pub use subset::{mask_label, GroundSet, SubsetVertex, MAX_N, MIN_N};
pub use topo::{build_topo_graph, is_adjacent, TopoGraph};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/construction.md")]
    mod construction {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/products.md")]
    mod products {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/claims.md")]
    mod claims {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
