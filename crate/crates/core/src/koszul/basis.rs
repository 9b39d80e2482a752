//! The bases `L_1 L_2̄ ... L_k̄` of `L^{⊗k}` and elements of the form
//! `Tr_{R(1..k)}(L_1 L_2̄ ... L_k̄ S)`.

use crate::error::{Error, Result};
use crate::hecke::HeckeSymmetry;
use crate::linalg::Matrix;
use crate::rea::{NCMatrix, NCPoly};
use crate::scalar::Scalar;

/// `R_{i,i+1}` acting on `V^{⊗k}`, `i` 1-based.
pub fn r_at(hs: &HeckeSymmetry, i: usize, k: usize) -> Matrix {
    embed(hs.r().matrix(), hs.dim(), i, k)
}

pub fn r_inv_at(hs: &HeckeSymmetry, i: usize, k: usize) -> Matrix {
    embed(hs.r_inv().matrix(), hs.dim(), i, k)
}

fn embed(m: &Matrix, n: usize, i: usize, k: usize) -> Matrix {
    assert!(i >= 1 && i < k, "position {i} out of range for arity {k}");
    let left = Matrix::identity(n.pow((i - 1) as u32));
    let right = Matrix::identity(n.pow((k - i - 1) as u32));
    left.kron(m).kron(&right)
}

/// `L ⊗ I^{⊗(k-1)}` on `V^{⊗k}`.
fn l_first(n: usize, k: usize) -> NCMatrix {
    let rest = n.pow((k - 1) as u32);
    NCMatrix::from_fn(n, n * rest, n * rest, |r, c| {
        if r % rest == c % rest {
            NCPoly::gen(n, r / rest + 1, c / rest + 1)
        } else {
            NCPoly::zero(n)
        }
    })
}

/// `L_1 L_2̄ ... L_k̄` with `L_{m̄} = R_{m-1,m} L_{\overline{m-1}} R_{m-1,m}^{-1}`,
/// matrix entries tensorized in order.
pub fn hatted_product(hs: &HeckeSymmetry, k: usize) -> Result<NCMatrix> {
    if k == 0 {
        return Err(Error::IndexOutOfRange { index: 0, max: 0 });
    }
    let n = hs.dim();
    let mut bar = l_first(n, k);
    let mut product = bar.clone();
    for m in 2..=k {
        bar = NCMatrix::scalars_mul(&r_at(hs, m - 1, k), &bar)?.mul_scalars(&r_inv_at(
            hs,
            m - 1,
            k,
        ))?;
        product = product.mul(&bar)?;
    }
    Ok(product)
}

/// `C^{⊗k}`.
pub fn c_tensor(hs: &HeckeSymmetry, k: usize) -> Matrix {
    let mut out = Matrix::identity(1);
    for _ in 0..k {
        out = out.kron(hs.c());
    }
    out
}

/// Coefficients `x_{IJ} = (S C^{⊗k})_{JI}` of `Tr_{R(1..k)}(L_1 ... L_k̄ S)`
/// in the hatted basis, laid out as a matrix indexed by `(I, J)`.
pub fn structure_coefficients(hs: &HeckeSymmetry, k: usize, s: &Matrix) -> Result<Matrix> {
    Ok(s.mul(&c_tensor(hs, k))?.transpose())
}

/// `Tr_{R(1..k)}(L_1 L_2̄ ... L_k̄ S)` in the free algebra.
pub fn structure_element(hs: &HeckeSymmetry, k: usize, s: &Matrix) -> Result<NCPoly> {
    let p = hatted_product(hs, k)?;
    Ok(p.mul_scalars(&s.mul(&c_tensor(hs, k))?)?.trace())
}

/// Dense coefficient vector of a homogeneous degree-`k` element in the
/// word basis of `L^{⊗k}`.
pub fn dense(x: &NCPoly, k: usize) -> Result<Vec<Scalar>> {
    let len = x.alphabet().pow(k as u32);
    let mut out = vec![Scalar::zero(); len];
    for (i, c) in x.to_sparse(k)? {
        out[i] = c;
    }
    Ok(out)
}

/// Matrix taking hatted coordinates (index `I·N^k + J`) to word coordinates.
pub fn transport(hs: &HeckeSymmetry, k: usize) -> Result<Matrix> {
    let p = hatted_product(hs, k)?;
    let side = p.rows();
    let dim = side * side;
    let mut t = Matrix::try_zeros(dim, dim)?;
    for i in 0..side {
        for j in 0..side {
            for (w, c) in p.get(i, j).to_sparse(k)? {
                t[(w, i * side + j)] = c;
            }
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rea::power_sum_element;

    #[test]
    fn flip_basis_is_the_word_basis() {
        let hs = HeckeSymmetry::flip(2).unwrap();
        let p = hatted_product(&hs, 2).unwrap();
        // (L_1 L_2)_{i1 i2}^{j1 j2} = l_{i1}^{j1} l_{i2}^{j2}
        assert_eq!(
            p.get(1, 2),
            &NCPoly::gen(2, 1, 2).mul(&NCPoly::gen(2, 2, 1))
        );
        assert_eq!(transport(&hs, 2).unwrap().rank(), 16);
    }

    #[test]
    fn deformed_transport_is_invertible() {
        let hs = HeckeSymmetry::dj_gl(2, Scalar::ratio(7, 5)).unwrap();
        assert_eq!(transport(&hs, 2).unwrap().rank(), 16);
    }

    #[test]
    fn power_sums_as_structures() {
        for hs in [
            HeckeSymmetry::dj_gl(2, Scalar::ratio(7, 5)).unwrap(),
            HeckeSymmetry::q_super(1, 1, Scalar::ratio(9, 7)).unwrap(),
        ] {
            let r1 = r_at(&hs, 1, 2);
            assert_eq!(
                structure_element(&hs, 2, &r1).unwrap(),
                power_sum_element(2, 2, hs.c()).unwrap()
            );
            let s = r_at(&hs, 2, 3).mul(&r_at(&hs, 1, 3)).unwrap();
            assert_eq!(
                structure_element(&hs, 3, &s).unwrap(),
                power_sum_element(3, 2, hs.c()).unwrap()
            );
        }
    }
}
