//! Euler Sombor index toolkit.
//!
//! Computes the Euler Sombor (EUS), Sombor and elliptic Sombor indices,
//! builds the extremal graph families for EUS (tadpoles, H1 graphs,
//! pineapples, cliques with pendants), evaluates their closed forms and
//! bounds, and checks each extremal result by exhaustive enumeration of
//! small labelled graphs.

pub mod cli;
pub mod closed_forms;
pub mod constructions;
pub mod edgelist;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod index;
pub mod report;
pub mod verify;

pub use closed_forms::{eus_h1, knp_max_bound, unicyclic_min_bound, BoundCase};
pub use constructions::{H1Params, PendantVector};
pub use enumeration::{enumerate, extremal_scan, Direction, EnumFilter, ExtremalReport};
pub use error::{Error, Result};
pub use graph::{are_isomorphic, GirthValue, Graph};
pub use graph6::{emit_graph6, parse_graph6};
pub use index::{edge_weight, index_value, IndexKind, EPS};
pub use report::ReportDocument;
pub use verify::{Status, Uniqueness, Verdict};
