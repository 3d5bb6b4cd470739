//! Closed-braid HOMFLY polynomials and the coefficient structure of their
//! normalized form.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! * [`BraidWord`] parsing, permutation bookkeeping, cyclic reduction and the
//!   rewrite-orbit search used to expose a leading square `σ_j²`,
//! * diagram-level link analysis ([`link`]): split factors, nugatory crossings,
//!   connected-sum factorization and the resulting [`LinkProfile`],
//! * exact two-variable Laurent arithmetic and the memoized skein engine
//!   ([`homfly`]), with Conway, Jones and Alexander specializations,
//! * the normalized polynomial, its coefficient grid and the coefficient
//!   constraints it satisfies for positive braids ([`normalized`]).
//!
//! IO, file formats, catalogs, independent oracles and the command-line tool
//! live in the `braidpoly` companion crate.

#![no_std]

extern crate alloc;

pub mod braid;
mod error;
pub mod homfly;
pub mod link;
pub mod normalized;
pub mod poly;
pub mod rewrite;

pub use braid::{BraidWord, CanonicalKey};
pub use error::{Error, Result};
pub use homfly::{EngineLimits, HomflyEngine, LocalCache, NoCache, PolyCache, SkeinTriple};
pub use link::{DecompositionTree, LinkProfile};
pub use normalized::{HGrid, TheoremReport};
pub use poly::{Laurent1, LaurentPoly2};
pub use rewrite::RewriteOutcome;
