//! Exact toolkit for triangle-degree extremal graphs and Kruskal-Katona
//! shadow bounds.
//!
//! The crate answers desk-scale instances of one question: how few edges can
//! a graph on `n` vertices have if every vertex must lie in at least
//! `C(t,2)` triangles? Around that sit:
//!
//! - [`graph`]: bitset adjacency, triangle-degree kernels, clique and
//!   component enumeration;
//! - [`graph6`]: standard graph6 text encoding plus an edge-list format;
//! - [`shadow`]: k-uniform families, shadows, generalized binomials, and the
//!   Lovász shadow bound;
//! - [`transform`]: the clique regularization rewrite, iterative clique
//!   peeling, the greedy independent-set construction, and the two
//!   edge-saving rewrites built on top of them;
//! - [`search`]: exact minimum-edge search with witnesses, a brute-force
//!   oracle, and the standard constructions;
//! - [`diagnostics`]: machine checks of the structural inequalities on
//!   concrete graphs;
//! - [`instances`]: seeded random instance generators used by the test
//!   suites and the CLI.

pub mod bitset;
pub mod diagnostics;
pub mod graph;
pub mod graph6;
pub mod instances;
pub mod search;
pub mod shadow;
pub mod transform;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use graph::{Graph, GraphError, TriangleBreakdown};
