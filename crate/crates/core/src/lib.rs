//! Exact computation of secure domination parameters of digraphs.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod digraph;
pub mod error;
pub mod family;
pub mod io;
pub mod kinds;
pub mod orient;
pub mod rng;
pub mod solver;
pub mod verify;
pub mod vertex_set;

pub use digraph::{DegreeStats, Digraph};
pub use error::{Error, Result};
pub use kinds::{ParamKind, SetKind};
pub use vertex_set::VertexSet;
