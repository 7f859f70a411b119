//! Exact computation of the v-number, regularity and Cohen-Macaulay
//! properties of edge ideals of graphs and clutters.

pub mod classify;
pub mod clutter;
pub mod error;
pub mod formats;
pub mod graph;
pub mod linalg;
pub mod monomial;
pub mod simplicial;
pub mod vertex_set;

pub use clutter::{Clutter, Derived};
pub use error::{Error, Result};
pub use graph::Graph;
pub use monomial::{cover_ideal, edge_ideal, prime_power, EdgeIdeal, Monomial, MonomialIdeal, PrimeCover};
pub use simplicial::{FieldTag, HomologyProfile, SimplicialComplex};
pub use vertex_set::VertexSet;
pub use classify::{full_report, InvariantReport, ReportOptions};
