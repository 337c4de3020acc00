//! Completing partial `k`-star designs.
//!
//! A `k`-star is the complete bipartite graph `K_{1,k}`. A partial
//! `k`-star design of order `n` is a set of edge-disjoint `k`-stars on `n`
//! vertices; it is *completable* when more stars can be added until every
//! edge of `K_n` is covered exactly once.
//!
//! Every partial design of admissible order `n ≥ 2k` with at most
//! [`threshold_u`]`(n, k)` stars is completable, and that bound is tight.
//! This crate builds the completions ([`complete`]), the tight
//! counterexamples ([`gen_uncompletable`]) with checkable certificates, and
//! an exhaustive [`oracle`] for cross-checking both.
//!
//! ```
//! use stardeck::{complete, PartialDesign, Star};
//!
//! let partial = PartialDesign::new(6, 3, vec![Star::new(0, [1, 2, 3])]);
//! let result = complete(&partial)?;
//! let full = result.completed().expect("one star is below the threshold");
//! assert_eq!(full.stars.len(), 5);
//! assert_eq!(full.leftover()?.edge_count(), 0);
//! # Ok::<(), stardeck::Error>(())
//! ```

pub mod completion;
pub mod design;
pub mod error;
pub mod extremal;
mod flow;
pub mod graph;
pub mod oracle;
pub mod precentral;
pub mod random;
pub mod realization;
pub mod selftest;

pub use completion::{complete, complete_with, CompletionResult, Impossibility, Outcome};
pub use design::{design_exists, is_admissible, threshold_u, CentralFunction, PartialDesign, Star, Violation};
pub use error::{Error, Result};
pub use extremal::{check_blocked_edge, gen_uncompletable, BlockedEdgeCertificate};
pub use graph::Graph;
pub use precentral::{Precentral, Residue};
pub use realization::{realize, Realization, StarDecomposition};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/designs.md")]
    mod designs {}
    #[doc = include_str!("../../../book/src/precentral.md")]
    mod precentral {}
    #[doc = include_str!("../../../book/src/realization.md")]
    mod realization {}
    #[doc = include_str!("../../../book/src/completion.md")]
    mod completion {}
    #[doc = include_str!("../../../book/src/extremal.md")]
    mod extremal {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
