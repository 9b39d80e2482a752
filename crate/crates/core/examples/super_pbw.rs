//! At q = 1 the modified REA of the super flip is U(gl(m|n)) with bracket
//! scaled by h; PBW straightening decides identities there.

use braided_orbits::hecke::HeckeSymmetry;
use braided_orbits::orbit::nc_orbit;
use braided_orbits::rea::{NCPoly, SuperPbw};
use braided_orbits::scalar::Scalar;
use braided_orbits::symfun::EigenvalueProfile;

fn main() -> braided_orbits::Result<()> {
    let hs = HeckeSymmetry::superflip(1, 1)?;
    let h = Scalar::h();
    let pbw = SuperPbw::new(&hs, &h)?;
    let (a, b) = (NCPoly::gen(2, 1, 2), NCPoly::gen(2, 2, 1));
    println!("l_1^2 l_2^1 -> {}", pbw.reduce(&a.mul(&b)).display());
    println!("l_2^1 l_1^2 -> {}", pbw.reduce(&b.mul(&a)).display());
    println!("(l_1^2)^2   -> {}", pbw.reduce(&a.mul(&a)).display());

    // a non-commutative orbit of gl(2) at q = 1
    let flip = HeckeSymmetry::flip(2)?;
    let p = EigenvalueProfile::numeric(
        vec![Scalar::zero(), &Scalar::from_int(3) * &h],
        vec![],
        Scalar::one(),
    )
    .with_h(Some(h));
    let data = nc_orbit(&flip, &p, braided_orbits::orbit::ENTRYWISE_CAP)?;
    for (name, ok) in &data.checks {
        println!("NC orbit {name}: {ok}");
    }
    Ok(())
}
