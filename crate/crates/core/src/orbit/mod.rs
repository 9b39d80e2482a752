//! Quantum orbits: regularity, Hankel determinants and cotangent idempotents.

mod cotangent;
mod hankel;
mod regularity;

pub use cotangent::{
    cotangent, cotangent_with, gradient_matrices, gradient_product_is_hankel, nc_orbit,
    Certificate, CotangentData, OrbitIdeal, ENTRYWISE_CAP,
};
pub use hankel::{
    hankel, hankel_det_check, hankel_det_formula, higher_power_reduction, HankelCheck, Strategy,
};
pub use regularity::{
    gl2_classical_line, gl2_predicate_lines, gl2_remark_lines, regularity, same_lines, Constraint,
    ConstraintKind, Line, RegularityVerdict,
};
