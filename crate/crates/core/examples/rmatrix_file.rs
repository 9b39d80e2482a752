//! Writes an R-matrix to a JSON file, reads it back and validates it as a
//! Hecke symmetry.

use braided_orbits::hecke::{birank, read_rmatrix, write_rmatrix_json, HeckeSymmetry};
use braided_orbits::scalar::Scalar;

fn main() -> braided_orbits::Result<()> {
    let q = Scalar::ratio(9, 7);
    let hs = HeckeSymmetry::q_super(1, 1, q.clone())?;
    let path = std::env::temp_dir().join("braided_q_super.json");
    std::fs::write(&path, write_rmatrix_json(hs.dim(), &q, hs.r().matrix()))?;
    let file = read_rmatrix(&path)?;
    println!(
        "read {}x{} matrix, q = {}",
        file.matrix.rows(),
        file.matrix.cols(),
        file.q
    );
    let again = HeckeSymmetry::from_file(&path)?;
    let rep = birank(&again, 4)?;
    println!("bi-rank from file: ({}|{})", rep.m, rep.n);
    println!("C = {:?}", again.c());
    Ok(())
}
