//! Validates the built-in braidings: Yang-Baxter, the Hecke relation and
//! skew-invertibility, then prints the trace operators B and C.

use braided_orbits::hecke::{
    hecke_residual, skew_residual, solve_skew_inverse, ybe_residual, HeckeSymmetry,
};
use braided_orbits::scalar::Scalar;

fn main() -> braided_orbits::Result<()> {
    let q = Scalar::ratio(7, 5);
    let all = [
        HeckeSymmetry::flip(3)?,
        HeckeSymmetry::superflip(2, 1)?,
        HeckeSymmetry::dj_gl(2, q.clone())?,
        HeckeSymmetry::q_super(1, 1, Scalar::ratio(9, 7))?,
        HeckeSymmetry::dj_gl(2, Scalar::q())?,
    ];
    for hs in &all {
        let r = hs.r();
        let ybe = ybe_residual(r)?.matrix().is_zero();
        let hecke = hecke_residual(r, hs.q())?.matrix().is_zero();
        let skew = skew_residual(r, &solve_skew_inverse(r)?)?
            .matrix()
            .is_zero();
        println!(
            "{:<20} YBE {ybe}  Hecke {hecke}  skew-invertible {skew}",
            hs.label()
        );
    }
    let hs = HeckeSymmetry::dj_gl(2, Scalar::q())?;
    println!(
        "\nsymbolic dj_gl(2): C = diag({}, {})",
        hs.c()[(0, 0)],
        hs.c()[(1, 1)]
    );
    println!(
        "Tr_R I = {}",
        hs.rtrace(&braided_orbits::linalg::Matrix::identity(2))?
    );
    Ok(())
}
