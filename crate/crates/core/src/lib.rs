//! Exact computational algebraic topology on finite pointed simplicial sets.
//!
//! The crate is layered bottom-up:
//!
//! * [`intlin`]: integer matrices, Smith normal form, kernels and lattice solves.
//! * [`abgroup`]: finitely generated abelian groups as cokernel presentations,
//!   with homomorphisms, tensor products and sequential colimits.
//! * [`fpgroup`]: finitely presented groups and their abelianization.
//! * [`magma`]: finite magmas and an exhaustive Eckmann–Hilton checker.
//! * [`sset`]: truncated simplicial sets, products, smash products, suspension,
//!   mapping cones and the standard models.
//! * [`chain`]: normalized chains, homology with coefficients, induced maps,
//!   Eilenberg–Zilber cross products.
//! * [`homotopy`]: edge-path fundamental groups and the degree-one Hurewicz map.
//! * [`stable`]: suspension spectra and stable homology through colimits.
//! * [`corpus`] and [`suite`]: named spaces and groups, and the verification suite.

pub mod abgroup;
pub mod chain;
pub mod corpus;
mod error;
pub mod fpgroup;
pub mod homotopy;
pub mod intlin;
pub mod magma;
pub mod sset;
pub mod stable;
pub mod suite;

pub use abgroup::{AbElt, AbGroup, AbHom, SeqDiagramAb};
pub use error::{Error, Result};
pub use fpgroup::{FpGroup, Word};
pub use intlin::{Int, IntMatrix, SmithDecomposition};
pub use sset::{FinSSet, SMap};

