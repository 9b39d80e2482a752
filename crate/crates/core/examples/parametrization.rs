//! Quantum dimensions, power sums and Schur functions in terms of the
//! quantum eigenvalues, with the Vieta relations as a consistency check.

use braided_orbits::symfun::{
    power_sums_param, quantum_dims, schur_param, vieta_residuals, EigenvalueProfile, Partition,
};

fn main() -> braided_orbits::Result<()> {
    let p = EigenvalueProfile::symbolic(2, 1);
    let qd = quantum_dims(&p)?;
    for (i, d) in qd.d.iter().enumerate() {
        println!("d_{} = {d}", i + 1);
    }
    for (j, d) in qd.dd.iter().enumerate() {
        println!("d'_{} = {d}", j + 1);
    }
    for (k, pk) in power_sums_param(3, &p)?.iter().enumerate() {
        println!("p_{k} = {pk}");
    }
    println!("s_[2|1] = {}", schur_param(&Partition::rect(2, 1), &p)?);
    for (label, r) in vieta_residuals(&p)? {
        println!("Vieta {label}: residual {r}");
    }
    Ok(())
}
