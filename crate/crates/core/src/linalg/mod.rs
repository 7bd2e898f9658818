//! Exact integer linear algebra: dense big-integer matrices, Smith and
//! Hermite normal forms, determinants and lattice membership.

mod det;
mod hermite;
mod lattice;
mod matrix;
mod smith;

pub use det::determinant;
pub use hermite::LatticeBasis;
pub use lattice::{basis_difference, cokernel_class_order, lattice_solve, ClassOrder, Cokernel};
pub use matrix::IntMatrix;
pub use smith::{divisibility_chain_holds, smith_normal_form, SmithDecomposition};
