//! Symmetrizers on L^{⊗2} and L^{⊗3}, symmetry of the traces Tr_R L^k,
//! and the first differential.

use braided_orbits::error::Error;
use braided_orbits::hecke::HeckeSymmetry;
use braided_orbits::koszul::{
    conjecture1_check, d_squared_check_r2, differential_d1, p2_action_identity, ProjectorSet,
};
use braided_orbits::scalar::Scalar;

fn main() -> braided_orbits::Result<()> {
    for hs in [
        HeckeSymmetry::flip(2)?,
        HeckeSymmetry::dj_gl(2, Scalar::ratio(7, 5))?,
    ] {
        println!("{}", hs.label());
        let ps = ProjectorSet::build(&hs)?;
        println!("  arity-3 axioms on {} vectors", ps.verify_arity3(42)?);
        for k in [2, 3] {
            match conjecture1_check(k, &hs, &ps) {
                Ok(r) => println!("  Tr_R L^{k} symmetric: {}", r.holds()),
                Err(Error::ConjectureFailed(why)) => println!("  Tr_R L^{k} not symmetric: {why}"),
                Err(e) => return Err(e),
            }
        }
        let table = p2_action_identity(&hs, &ps)?;
        println!("  {} action rows hold", table.rows.len());
        d_squared_check_r2(&ps)?;
        println!("  d^2 = 0 on degree 2");
        for ((i, j), x) in differential_d1(&hs, 2)? {
            println!("  d_1 Tr_R L^2 at l_{i}^{j}: {}", x.display());
        }
    }
    Ok(())
}
