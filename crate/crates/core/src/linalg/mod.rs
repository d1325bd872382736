//! Exact dense linear algebra over the rationals and prime fields.

mod mat;
mod poly;
mod scalar;
mod subspace;

pub use mat::Mat;
pub use poly::Poly;
pub use scalar::{is_prime, FieldSpec, Scalar};
pub use subspace::Subspace;
