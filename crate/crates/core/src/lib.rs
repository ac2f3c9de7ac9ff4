//! Exact (co)homology of triangular Lie algebras and simplicial complexes.
//!
//! The pipeline: pick a finite poset on `[n]` (or a list of simplicial
//! facets), form the associated Lie algebra of poset-supported matrices and
//! its alternating chain complex, shrink the complex with an acyclic
//! matching on the basis, and read off homology exactly (Smith normal form
//! over the integers, rank elimination over a field).  Weight subcomplexes,
//! tensor factorizations, and cup products are provided as cross-checking
//! machinery on top.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals, or
//! reduced residues for modular coefficients.

pub mod chain;
pub mod cup;
pub mod homology;
pub mod lie;
pub mod matrix;
pub mod morse;
pub mod poset;
pub mod reference;
pub mod ring;
pub mod subcomplex;
pub mod verify;

pub use chain::{ChainComplex, Wedge};
pub use homology::{HomologyModule, HomologyTable};
pub use lie::{BasisLabel, LieAlgebra};
pub use matrix::{Scalar, SparseMatrix};
pub use morse::{CriticalSet, Matching};
pub use poset::Poset;
pub use ring::CoefficientRing;
