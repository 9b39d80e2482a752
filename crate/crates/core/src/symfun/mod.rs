//! Symmetric functions in the elementary, complete and power-sum families,
//! Cayley-Hamilton coefficients and eigenvalue parametrizations.

mod ch;
mod genpoly;
mod newton;
mod param;
mod partition;

pub use ch::{ch_coefficients, ch_factorized, ch_terms, jacobi_trudi, Factorized, ShapeTerm};
pub use genpoly::{det, GenPoly, Ring};
pub use newton::{a_from_p, generators, nonzero_qnumber, p_from_a, s_from_p, wronski};
pub use param::{
    elementary_of, evaluate_elementary, power_sum_param, power_sums_param, quantum_dims,
    rect_schur_param, schur_param, specialize_q, vieta_residuals, EigenvalueProfile, QuantumDims,
    SchurEvaluator,
};
pub use partition::{shape_label, Partition};
