//! Exact linear algebra over [`Scalar`](crate::scalar::Scalar).

mod echelon;
mod graded;
mod guard;
mod matrix;
mod tensor;

pub use echelon::{subspace_membership, EchelonBasis, Membership, SparseVec};
pub use graded::{Component, QuadraticIdeal, MAX_COMPONENT_WORDS};
pub use guard::{check_entries, entry_cap, set_entry_cap, DEFAULT_ENTRY_CAP};
pub use matrix::{Echelon, Matrix};
pub use tensor::{flat_index, multi_index, TensorOp};
