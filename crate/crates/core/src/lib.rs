//! Graded Betti numbers of Stanley–Reisner rings of flag complexes, integral
//! homology through Smith normal form, and a pruned search for small graphs
//! whose Betti numbers depend on the field.

pub mod betti;
pub mod complexes;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod graphs;
pub mod homology;
pub mod linalg;
pub mod search;
pub mod taylor;

pub use betti::BettiDiagram;
pub use complexes::SimplicialComplex;
pub use error::{Error, Result};
pub use field::Field;
pub use graphs::{CanonicalForm, Graph, VertexSet};
pub use homology::{HomologyGroup, ReducedBetti};
pub use linalg::{IntegerMatrix, SmithForm};
pub use search::{PruneVerdict, SearchReport};
