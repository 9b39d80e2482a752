use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::guard;

/// Dense row-major matrix over [`Scalar`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of plain Gaussian elimination: an upper echelon form, the pivot
/// positions and the sign of the row permutation used.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub form: Matrix,
    pub pivots: Vec<(usize, usize)>,
    pub sign: i32,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        guard::check_entries(rows.saturating_mul(cols)).expect("matrix allocation within cap");
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    /// Like [`Matrix::zeros`] but reports the memory cap as an error.
    pub fn try_zeros(rows: usize, cols: usize) -> Result<Self> {
        guard::check_entries(rows.saturating_mul(cols))?;
        Ok(Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn scalar_identity(n: usize, c: &Scalar) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Matrix> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        self.map(|x| x * c)
    }

    pub fn neg(&self) -> Matrix {
        self.map(|x| -x)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::try_zeros(self.rows, other.cols)?;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let t = a * b;
                    out.data[i * other.cols + j] += &t;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn pow(&self, k: u32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "power of non-square matrix".into(),
            ));
        }
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Matrix::zeros(self.rows * r2, self.cols * c2);
        let oc = out.cols;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out.data[(i * r2 + k) * oc + j * c2 + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..self.rows.min(self.cols) {
            acc += &self[(i, i)];
        }
        acc
    }

    /// Applies `f` entrywise with the entry's position.
    pub fn try_map_indexed(
        &self,
        f: impl Fn(usize, usize, &Scalar) -> Result<Scalar>,
    ) -> Result<Matrix> {
        let mut data = Vec::with_capacity(self.data.len());
        for i in 0..self.rows {
            for j in 0..self.cols {
                data.push(f(i, j, &self[(i, j)])?);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "determinant of non-square matrix".into(),
            ));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Scalar::one());
        }
        let mut m = self.clone();
        let mut sign = 1;
        let mut prev = Scalar::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !m[(r, k)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != k {
                m.swap_rows(p, k);
                sign = -sign;
            }
            if k + 1 == n {
                break;
            }
            let pivot = m[(k, k)].clone();
            for i in k + 1..n {
                let lead = m[(i, k)].clone();
                for j in k + 1..n {
                    let x = &(&m[(i, j)] * &pivot) - &(&lead * &m[(k, j)]);
                    m[(i, j)] = if prev.is_one() {
                        x
                    } else {
                        x.checked_div(&prev)?
                    };
                }
                m[(i, k)] = Scalar::zero();
            }
            prev = pivot;
        }
        let d = m[(n - 1, n - 1)].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Gaussian elimination without normalisation. Pivot: first nonzero
    /// entry of the leftmost remaining nonzero column, scanning rows top down.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut sign = 1;
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                m.swap_rows(p, r);
                sign = -sign;
            }
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for i in r + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let t = &f * &m[(r, j)];
                    m[(i, j)] -= &t;
                }
            }
            pivots.push((r, c));
            r += 1;
        }
        Echelon {
            form: m,
            pivots,
            sign,
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rowreduce(&self) -> (Matrix, Vec<usize>) {
        let Echelon {
            form: mut m,
            pivots,
            ..
        } = self.echelon();
        for &(r, c) in pivots.iter().rev() {
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    m[(r, j)] = &m[(r, j)] * &inv;
                }
            }
            for i in 0..r {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let t = &f * &m[(r, j)];
                    m[(i, j)] -= &t;
                }
            }
        }
        (m, pivots.into_iter().map(|(_, c)| c).collect())
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "inverse of non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (red, pivots) = aug.rowreduce();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        Ok(Matrix::from_fn(n, n, |i, j| red[(i, n + j)].clone()))
    }

    /// Solves `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Vec<Scalar>> {
        if !self.is_square() || b.len() != self.rows {
            return Err(Error::DimensionMismatch("solve".into()));
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, n + 1, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (red, pivots) = aug.rowreduce();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        Ok((0..n).map(|i| red[(i, n)].clone()).collect())
    }

    /// Basis of the right kernel.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (red, pivots) = self.rowreduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = -&red[(r, f)];
                }
                v
            })
            .collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse, Symbol};

    fn m(rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| parse(s).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(Matrix::identity(4).det().unwrap(), Scalar::one());
        let a = m(&[&["mu1", "mu2"], &["nu1", "nu2"]]);
        assert_eq!(a.det().unwrap(), parse("mu1*nu2 - mu2*nu1").unwrap());
    }

    /// Cofactor expansion, independent of the elimination code.
    fn cofactor_det(a: &Matrix) -> Scalar {
        let n = a.rows();
        if n == 1 {
            return a[(0, 0)].clone();
        }
        let mut acc = Scalar::zero();
        for j in 0..n {
            let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
                a[(r + 1, if c < j { c } else { c + 1 })].clone()
            });
            let t = &a[(0, j)] * &cofactor_det(&minor);
            if j % 2 == 0 {
                acc += &t;
            } else {
                acc -= &t;
            }
        }
        acc
    }

    #[test]
    fn vandermonde() {
        let mus: Vec<Scalar> = (1..=3).map(|i| Scalar::var(Symbol::mu(i))).collect();
        let v = Matrix::from_fn(3, 3, |i, j| mus[i].powu(j as u32));
        let d = v.det().unwrap();
        assert_eq!(d, cofactor_det(&v));
        let mut prod = Scalar::one();
        for i in 0..3 {
            for j in i + 1..3 {
                prod *= &(&mus[j] - &mus[i]);
            }
        }
        assert_eq!(d, prod);
    }

    #[test]
    fn det_is_signed_pivot_product() {
        let a = m(&[&["0", "q", "1"], &["2", "1", "mu1"], &["1", "0", "q^2"]]);
        let e = a.echelon();
        let mut prod = Scalar::from_int(e.sign as i64);
        for &(r, c) in &e.pivots {
            prod *= &e.form[(r, c)];
        }
        assert_eq!(prod, a.det().unwrap());
    }

    #[test]
    fn inverse_and_nullspace() {
        let a = m(&[&["q", "1"], &["1", "q"]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(2));
        let s = m(&[&["1", "2"], &["2", "4"]]);
        assert_eq!(s.inverse(), Err(Error::SingularMatrix));
        let ns = s.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(s.mul_vec(&ns[0]).unwrap().iter().all(Scalar::is_zero));
        assert_eq!(s.rank(), 1);
    }
}
