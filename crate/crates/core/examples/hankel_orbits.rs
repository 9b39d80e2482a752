//! Regularity of eigenvalue profiles and the Hankel determinant of power
//! sums, symbolically and at sampled points.

use braided_orbits::orbit::{hankel, hankel_det_check, hankel_det_formula, regularity, Strategy};
use braided_orbits::scalar::Scalar;
use braided_orbits::symfun::EigenvalueProfile;

fn main() -> braided_orbits::Result<()> {
    let q = Scalar::ratio(7, 5);
    let ints = |v: &[i64]| v.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>();
    for mu in [[1, 2], [1, 1]] {
        let p = EigenvalueProfile::numeric(ints(&mu), vec![], q.clone());
        let v = regularity(&p);
        println!("mu = {mu:?}: regular {}", v.regular);
        if v.regular {
            println!("  det H = {}", hankel(&p)?.det()?);
            println!("  product formula = {}", hankel_det_formula(&p)?);
        }
    }
    for (m, n) in [(2, 0), (1, 1)] {
        hankel_det_check(m, n, Strategy::Symbolic)?;
        println!("({m}|{n}): factorization holds identically");
    }
    let c = hankel_det_check(
        3,
        2,
        Strategy::Sampled {
            seed: 42,
            trials: 7,
        },
    )?;
    println!(
        "(3|2): factorization holds at {} random points",
        c.points_checked
    );
    Ok(())
}
