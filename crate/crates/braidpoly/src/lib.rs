//! Catalogs, independent oracles, JSON reports and the verification sweep
//! built on `braidpoly-core`.

pub mod cache;
pub mod catalog;
pub mod json;
pub mod oracle;
pub mod sweep;

pub use cache::SharedCache;
