//! Reads the bi-rank off the Poincare series of the R-exterior algebra.

use num_traits::Zero;

use braided_orbits::hecke::{birank, HeckeSymmetry};
use braided_orbits::scalar::{Rational, Scalar};

fn series(c: &[Rational]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| format!("{x} t^{k}"))
        .collect();
    terms.join(" + ")
}

fn main() -> braided_orbits::Result<()> {
    for hs in [
        HeckeSymmetry::flip(3)?,
        HeckeSymmetry::dj_gl(3, Scalar::ratio(7, 5))?,
        HeckeSymmetry::superflip(1, 2)?,
        HeckeSymmetry::q_super(2, 1, Scalar::ratio(9, 7))?,
    ] {
        let rep = birank(&hs, 6)?;
        println!("{}", hs.label());
        println!("  dim Lambda^k = {:?}", rep.wedge_dims);
        println!(
            "  P(t) = ({}) / ({})",
            series(&rep.fit.numerator),
            series(&rep.fit.denominator)
        );
        println!("  bi-rank ({}|{})", rep.m, rep.n);
    }
    Ok(())
}
