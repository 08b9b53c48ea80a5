//! Exact linear algebra over the rationals and prime fields.

mod matrix;
mod rref;
mod subspace;

pub use matrix::{Matrix, SparseVec};
pub use rref::rref;
pub use subspace::{
    equalizer, intersect, kernel, kronecker, largest_invariant_subspace, preimage, rank,
    restrict_operator, Subspace,
};
