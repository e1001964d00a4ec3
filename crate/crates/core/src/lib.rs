//! Finite r-sets, their Hom posets, singular simplicial sets and strong
//! homotopy theory.

pub mod algebra;
pub mod complex;
pub mod corpus;
pub mod components;
pub mod error;
pub mod guard;
pub mod hom;
pub mod io;
pub mod maps;
pub mod oracles;
pub mod poset;
pub mod rset;
pub mod sing;
pub mod standard;
pub mod strong;
pub mod verify;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use guard::Guards;
pub use hom::{HomPoset, MultiMap};
pub use poset::{FinitePoset, PosetMap};
pub use rset::{RMap, RSet, VertexSubset};
pub use sing::{sing_truncated, SingularComplex, TruncatedSimplicialSet};

/// Arbitrary-precision integers, the default scalar for homology.
pub type Int = num_bigint::BigInt;
pub type IntMatrix = algebra::Matrix<Int>;
pub type Homology = algebra::HomologyResult<Int>;
pub type HomologyGroup = algebra::HomologyGroup<Int>;
