//! Finitely generated abelian groups as integer-matrix presentations.

mod colimit;
mod group;
mod hom;
mod tensor;

pub use colimit::{seq_colimit, Colimit, SeqDiagramAb};
pub use group::{torsion_count, AbElt, AbGroup, CanonicalForm};
pub use hom::AbHom;
pub use tensor::{tensor, TensorProduct};
