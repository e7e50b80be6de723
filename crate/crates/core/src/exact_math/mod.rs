//! Exact linear algebra over the integers, rationals and cyclotomic fields.

pub mod cyclotomic;
pub mod hermitian;
pub mod int_matrix;
pub mod interval;
pub mod snf;

pub use cyclotomic::{CycElt, CycField};
pub use hermitian::{hermitian_signature_at_root, hermitian_signature_sparse, SignConfig, SparseHermitian};
pub use int_matrix::{rational_inverse, symmetric_signature, IntMatrix, QMatrix};
pub use snf::{smith_normal_form, SnfResult};
