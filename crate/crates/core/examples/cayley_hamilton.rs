//! The Cayley-Hamilton identity: coefficients as Schur symbols, the
//! factorized form, and verification modulo the REA relations.

use braided_orbits::hecke::HeckeSymmetry;
use braided_orbits::rea::{ch_verify, ReaQuotient};
use braided_orbits::scalar::Scalar;
use braided_orbits::symfun::{ch_factorized, ch_terms};

fn main() -> braided_orbits::Result<()> {
    let (m, n) = (3, 2);
    println!("CH identity of bi-rank ({m}|{n}):");
    for i in 0..=m + n {
        let terms: Vec<String> = ch_terms(m, n, i)
            .iter()
            .map(|t| format!("({}) {}", t.coef, t.label(m, n)))
            .collect();
        println!("  L^{}: {}", m + n - i, terms.join(" + "));
    }
    let f = ch_factorized(m, n)?;
    let show = |ts: &[braided_orbits::symfun::ShapeTerm]| {
        ts.iter()
            .map(|t| format!("({}) {}", t.coef, t.label(m, n)))
            .collect::<Vec<_>>()
            .join(" + ")
    };
    println!("  even factor: {}", show(&f.even));
    println!("  odd factor:  {}", show(&f.odd));

    for (hs, m, n) in [
        (HeckeSymmetry::dj_gl(2, Scalar::ratio(7, 5))?, 2, 0),
        (HeckeSymmetry::q_super(1, 1, Scalar::ratio(9, 7))?, 1, 1),
    ] {
        let rea = ReaQuotient::new(&hs)?;
        let rep = ch_verify(&hs, m, n, &rea)?;
        println!(
            "{}: holds in degree {}, {} entries",
            hs.label(),
            rep.degree,
            rep.entries_checked
        );
    }
    Ok(())
}
