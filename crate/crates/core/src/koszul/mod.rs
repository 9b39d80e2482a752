//! Braided symmetrizers on `L^{⊗2}` and `L^{⊗3}` and the first differential.

mod basis;
mod conjecture;
mod projectors;

pub use basis::{
    c_tensor, dense, hatted_product, r_at, r_inv_at, structure_coefficients, structure_element,
    transport,
};
pub use conjecture::{
    conjecture1_check, d_squared_check_r2, differential_d1, p2_action_identity, trace_vector,
    ConjectureReport, P2ActionReport, Structures, TraceVector,
};
pub use projectors::{P3Form, ProjectorSet, SAMPLED_VECTORS};
