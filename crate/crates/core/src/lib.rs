//! Exact-arithmetic toolkit for subtrees of small graphs and multigraphs.
//!
//! Everything here is computed over arbitrary-precision integers and
//! rationals: subtree polynomials, mean subtree orders, densities, local
//! (vertex- and edge-anchored) variants, and exhaustive edge-addition
//! searches over isomorphism-free censuses of small connected graphs.
//!
//! The crate is organized around five pieces:
//!
//! * [`graph`] — multigraph representation, canonical forms, graph6 I/O,
//!   and isomorphism-free generation of small connected graphs and trees.
//! * [`exact`] — dense integer polynomials and exact rationals.
//! * [`engine`] — subtree profiles via connected-subset enumeration with
//!   Kirchhoff spanning-tree counts, and a fast rooted DP for trees.
//! * [`families`] — named graph families, their closed-form invariants,
//!   and asymptotic trend tables.
//! * [`search`] — exhaustive verification scans and persistent reports.
//!
//! With the default `parallel` feature the scans and tables fan out over
//! rayon; without it every entry point falls back to an equivalent
//! sequential path.

pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod parallel;
pub mod search;

pub mod engine;

pub use error::{Error, Result};
pub use exact::poly::IntPolynomial;
pub use exact::rational::{to_decimal, Rational};
pub use graph::{CanonicalForm, Edge, MultiGraph};
