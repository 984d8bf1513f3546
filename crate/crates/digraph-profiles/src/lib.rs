//! Chromatic profiles of digraphs: extremal constructions, pattern and
//! coloring checkers, proof-extracted witness finders, and small-scale
//! exhaustive verification.
//!
//! The chromatic profile of a forbidden digraph H at k colors is the least
//! density d such that every H-free digraph D with minimum out-degree
//! δ⁺(D) ≥ d·|D| satisfies χ(D) ≤ k (colorings live on the underlying
//! graph). This crate builds the known extremal examples, decides
//! pattern-freeness and colorability exactly at small scale, extracts the
//! structures the proofs promise, and re-verifies the theorems on every
//! enumerable instance.
//!
//! ```
//! use digraph_profiles::constructions::extremal_aes;
//! use digraph_profiles::patterns::contains_transitive_tournament;
//! use digraph_profiles::coloring::chromatic_number;
//!
//! // The extremal example for r = 3 at n = 10: T_3-free, χ = 3, δ⁺ = 4.
//! let d = extremal_aes(10, 3).unwrap();
//! assert_eq!(d.min_out_degree().unwrap(), 4);
//! assert!(contains_transitive_tournament(&d, 3).is_none());
//! assert_eq!(chromatic_number(&d).unwrap().0, 3);
//! ```

pub mod bits;
pub mod coloring;
pub mod constructions;
pub mod digraph;
pub mod io;
pub mod iso;
pub mod patterns;
pub mod search;
pub mod witnesses;

pub use digraph::{Digraph, Embedding, Graph, GraphError};
pub use patterns::PatternId;

/// The guide chapters from `book/`, included here so that every code
/// sample in them is compiled and run by `cargo test --doc`.
pub mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/digraphs.md")]
    pub mod digraphs {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    pub mod constructions {}
    #[doc = include_str!("../../../book/src/witnesses.md")]
    pub mod witnesses {}
    #[doc = include_str!("../../../book/src/search.md")]
    pub mod search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
