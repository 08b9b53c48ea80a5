//! Exact-arithmetic engine for universal para-(co)cyclic modules built from
//! bialgebra symmetry data, their comonad and cyclic approximations, and the
//! resulting Hochschild and cyclic homology tables.

pub mod approx;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod homology;
pub mod hopf;
pub mod lambda;
pub mod linalg;
pub mod paracyclic;
pub mod report;
pub mod tensor;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::{Matrix, Subspace};
pub use report::{CertificationReport, ValidationReport};
