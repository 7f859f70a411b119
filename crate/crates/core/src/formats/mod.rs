//! Input parsers, embedded fixtures and output renderers.

pub mod catalog;
pub mod edge_list;
pub mod graph6;
pub mod output;

pub use edge_list::{parse_edge_list, render_edge_list, DocumentKind, InputDocument};
pub use graph6::{parse_graph6, to_graph6};
