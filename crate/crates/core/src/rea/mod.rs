//! Reflection equation algebras and their modified versions: relations,
//! exact zero tests in graded components, power sums and the
//! Cayley-Hamilton identity.

mod central;
mod ncmatrix;
mod ncpoly;
mod pbw;
mod relations;

pub use central::{
    centrality_check, ch_matrix, ch_power_sum_coefficients, ch_verify, classical_limit,
    hatted_ch_coefficients, matrix_identity, power_sum_element, realize_power_sums,
    CentralityReport, ChReport,
};
pub use ncmatrix::NCMatrix;
pub use ncpoly::{word_space, NCPoly, Word};
pub use pbw::SuperPbw;
pub use relations::{
    complementarity, filtered_len, filtered_vector, is_zero_mod, relation_matrix, Complementarity,
    NormalForm, ReaQuotient, RelationKind, RelationSpace, ShiftedQuotient, ZeroTest,
};
