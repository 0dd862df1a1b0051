//! Exact computations with truncated symmetric operads and graded
//! Perm-type algebras.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod field;
pub mod format;
pub mod functors;
pub mod graded;
pub mod linalg;
pub mod operad;
pub mod series;
pub mod symgroup;

pub use algebra::GradedAlgebra;
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use graded::{GradedSubset, WindowedSubset};
pub use linalg::{Matrix, Subspace, Vector};
pub use operad::TruncatedOperad;
pub use symgroup::Permutation;
