use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

use super::ncpoly::NCPoly;

/// Matrix with [`NCPoly`] entries, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct NCMatrix {
    n: usize,
    rows: usize,
    cols: usize,
    entries: Vec<NCPoly>,
}

impl NCMatrix {
    pub fn from_fn(
        n: usize,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> NCPoly,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        NCMatrix {
            n,
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(n: usize, rows: usize, cols: usize) -> Self {
        NCMatrix::from_fn(n, rows, cols, |_, _| NCPoly::zero(n))
    }

    pub fn identity(n: usize, size: usize) -> Self {
        NCMatrix::from_fn(n, size, size, |r, c| {
            if r == c {
                NCPoly::one(n)
            } else {
                NCPoly::zero(n)
            }
        })
    }

    /// The generating matrix `L = ‖l_i^j‖`.
    pub fn generating(n: usize) -> Self {
        NCMatrix::from_fn(n, n, n, |i, j| NCPoly::gen(n, i + 1, j + 1))
    }

    /// `L_1 = L ⊗ I` on `V ⊗ V`.
    pub fn generating_first(n: usize) -> Self {
        NCMatrix::from_fn(n, n * n, n * n, |r, c| {
            let (a, b) = (r / n, r % n);
            let (x, y) = (c / n, c % n);
            if b == y {
                NCPoly::gen(n, a + 1, x + 1)
            } else {
                NCPoly::zero(n)
            }
        })
    }

    pub fn from_scalars(n: usize, m: &Matrix) -> Self {
        NCMatrix::from_fn(n, m.rows(), m.cols(), |r, c| {
            NCPoly::constant(n, m[(r, c)].clone())
        })
    }

    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[NCPoly] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &NCPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: NCPoly) {
        self.entries[r * self.cols + c] = v;
    }

    fn check_same_shape(&self, other: &NCMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &NCMatrix) -> Result<NCMatrix> {
        self.check_same_shape(other)?;
        Ok(NCMatrix::from_fn(self.n, self.rows, self.cols, |r, c| {
            self.get(r, c).add(other.get(r, c))
        }))
    }

    pub fn sub(&self, other: &NCMatrix) -> Result<NCMatrix> {
        self.check_same_shape(other)?;
        Ok(NCMatrix::from_fn(self.n, self.rows, self.cols, |r, c| {
            self.get(r, c).sub(other.get(r, c))
        }))
    }

    pub fn scale(&self, s: &Scalar) -> NCMatrix {
        NCMatrix::from_fn(self.n, self.rows, self.cols, |r, c| self.get(r, c).scale(s))
    }

    /// `x · M` entrywise with `x` on the left.
    pub fn left_mul_poly(&self, x: &NCPoly) -> NCMatrix {
        NCMatrix::from_fn(self.n, self.rows, self.cols, |r, c| x.mul(self.get(r, c)))
    }

    pub fn mul(&self, other: &NCMatrix) -> Result<NCMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = NCMatrix::zeros(self.n, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.entries[idx] = out.entries[idx].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product with a scalar matrix on the right.
    pub fn mul_scalars(&self, m: &Matrix) -> Result<NCMatrix> {
        self.mul(&NCMatrix::from_scalars(self.n, m))
    }

    /// Product with a scalar matrix on the left.
    pub fn scalars_mul(m: &Matrix, x: &NCMatrix) -> Result<NCMatrix> {
        NCMatrix::from_scalars(x.n, m).mul(x)
    }

    pub fn pow(&self, k: u32) -> Result<NCMatrix> {
        let mut acc = NCMatrix::identity(self.n, self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> NCPoly {
        let mut acc = NCPoly::zero(self.n);
        for i in 0..self.rows.min(self.cols) {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// `Tr(M·C)`.
    pub fn rtrace(&self, c: &Matrix) -> Result<NCPoly> {
        Ok(self.mul_scalars(c)?.trace())
    }

    pub fn map(&self, f: impl Fn(&NCPoly) -> Result<NCPoly>) -> Result<NCMatrix> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(NCMatrix {
            n: self.n,
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NCPoly::is_zero)
    }
}
