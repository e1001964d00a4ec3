//! Integer linear algebra for homology: dense Smith normal form over any
//! integer ring, a sparse elimination front end, and chain complexes.

mod chain;
mod matrix;
mod snf;
mod sparse;

pub use chain::{complex_chains, homology, homology_all, normalized_chains, ChainComplex, HomologyGroup, HomologyResult};
pub use matrix::Matrix;
pub use snf::{smith_normal_form, Snf};
pub use sparse::SparseMatrix;

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::Signed;

/// Exact integer arithmetic: `i64`/`i128` for small inputs, `BigInt` when
/// entries may grow.
pub trait IntegerRing: Integer + Signed + Clone + Debug + Display + From<i64> {}

impl<T> IntegerRing for T where T: Integer + Signed + Clone + Debug + Display + From<i64> {}
