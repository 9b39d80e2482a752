//! The modified REA through the shift L = Lhat - h/ξ: the hatted
//! Cayley-Hamilton identity and hatted quantum dimensions.

use braided_orbits::hecke::HeckeSymmetry;
use braided_orbits::linalg::Matrix;
use braided_orbits::rea::{hatted_ch_coefficients, is_zero_mod, matrix_identity, ShiftedQuotient};
use braided_orbits::scalar::Scalar;
use braided_orbits::symfun::{quantum_dims, EigenvalueProfile};

fn main() -> braided_orbits::Result<()> {
    let hs = HeckeSymmetry::dj_gl(2, Scalar::ratio(7, 5))?;
    let h = Scalar::h();
    let p0 = hs.rtrace(&Matrix::identity(2))?;
    let coefs = hatted_ch_coefficients(2, 0, hs.q(), &h, &p0)?;
    let ch = matrix_identity(&coefs, 2, hs.c())?;
    let nf = ShiftedQuotient::new(&hs, &h)?;
    let mut holds = true;
    for x in ch.entries() {
        holds &= is_zero_mod(x, &nf)?.is_zero;
    }
    println!("hatted CH identity for {} holds: {holds}", hs.label());

    let p = EigenvalueProfile::symbolic_hatted(2, 1).with_h(Some(h));
    let qd = quantum_dims(&p)?;
    println!("hatted d_1 = {}", qd.d[0]);
    let classical = EigenvalueProfile::symbolic_hatted(2, 1).with_q(Scalar::one());
    println!("at q = 1:  d_1 = {}", quantum_dims(&classical)?.d[0]);
    Ok(())
}
