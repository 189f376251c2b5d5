//! (p,1)-total labellings of graphs and their list versions.
//!
//! A (p,1)-total labelling colors the vertices and edges of a graph so that
//! adjacent vertices differ, adjacent edges differ, and every vertex differs
//! from each incident edge by at least `p`. This crate provides the validity
//! predicate, exact solvers for the minimum span and for list labelability,
//! choosability search, polynomial list labellers for paths, trees, stars and
//! outerplanar graphs, and an experiment harness.

pub mod construct;
pub mod format;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod incidence;
pub mod json;
pub mod labelling;
pub mod par;
pub mod solver;

pub use graph::{Graph, GraphError, Vertex};
pub use incidence::{incidence_graph, IncidenceMap};
pub use labelling::{
    is_valid, is_valid_total, lp1_is_valid, p_ball, respects_lists, Color, Element, ListAssignment,
    TotalLabelling,
};
