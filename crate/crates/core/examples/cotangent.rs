//! The idempotent e = I - A (BA)^{-1} B on a braided orbit, with the
//! certificate that it squares to itself modulo the orbit ideal.

use braided_orbits::hecke::HeckeSymmetry;
use braided_orbits::orbit::{cotangent, ENTRYWISE_CAP};
use braided_orbits::scalar::Scalar;
use braided_orbits::symfun::EigenvalueProfile;

fn main() -> braided_orbits::Result<()> {
    let q = Scalar::ratio(7, 5);
    let hs = HeckeSymmetry::dj_gl(2, q.clone())?;
    let p = EigenvalueProfile::numeric(vec![Scalar::from_int(1), Scalar::from_int(2)], vec![], q);
    let data = cotangent(&hs, &p, ENTRYWISE_CAP)?;
    println!("H = {:?}", data.h);
    for (name, ok) in &data.checks {
        println!("{name}: {ok}");
    }
    println!("certificate: {:?}", data.certificate);
    println!("ebar[0][0] = {}", data.ebar.get(0, 0).display());
    Ok(())
}
