//! Distance-regular Cayley graphs over 2-groups with a cyclic subgroup of
//! index 2.
//!
//! The crate builds Cayley graphs over cyclic, dihedral, dicyclic,
//! semi-dihedral and pseudo-semi-dihedral groups, decides distance-regularity
//! two independent ways, checks the difference-set and relative-difference-set
//! conditions behind each family of examples, and searches exhaustively for
//! the "Hadamard pairs" `(R, T)` that give bipartite antipodal graphs of
//! diameter 4.
//!
//! Floating-point code (the Fourier transform over `Z_m` and the spectrum of
//! an intersection matrix) is generic over [`num_traits::Float`]; the aliases
//! below fix the scalar to `f64`. Every accept/reject decision is made with
//! exact integer arithmetic.

pub mod cayley;
pub mod classify;
pub mod design;
pub mod drg;
pub mod error;
pub mod group;
pub mod residue;
pub mod selfcheck;

pub use cayley::{CayleyGraph, ConnectionSpec, Graph};
pub use classify::{HadamardCertificate, SearchResult, TheoremCase};
pub use design::DesignReport;
pub use drg::{IntersectionArray, StructureReport};
pub use error::{Error, Result};
pub use group::{Group, GroupElement, GroupFamily, Subgroup};
pub use residue::{IntVector, ResidueSet};

/// Complex sequence over `Z_m` with `f64` parts.
pub type ComplexVector = residue::ComplexVectorOf<f64>;
/// Complex sequence over `Z_m` with `f32` parts.
pub type ComplexVector32 = residue::ComplexVectorOf<f32>;
/// Intersection-matrix spectrum with `f64` eigenvalues.
pub type SpectrumReport = drg::SpectrumReportOf<f64>;
/// Intersection-matrix spectrum with `f32` eigenvalues.
pub type SpectrumReport32 = drg::SpectrumReportOf<f32>;
