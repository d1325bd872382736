//! Exact computations with finite-dimensional algebras and their module
//! categories: recollements induced by idempotents, Auslander–Bridger
//! sequences, and higher Auslander–Reiten theory for cluster tilting
//! subcategories.
//!
//! Conventions: matrices act on row vectors, so an `r x c` matrix is the
//! map `v -> v M`. Right modules record one action matrix per algebra basis
//! element. Paths compose left to right.

pub mod abridger;
pub mod algebra;
pub mod approx;
pub mod error;
pub mod higher_ar;
pub mod linalg;
pub mod module;
pub mod recollement;

pub use algebra::{Algebra, Idempotent, QuiverPresentation};
pub use error::{Error, Result};
pub use linalg::{FieldSpec, Mat, Poly, Scalar, Subspace};
