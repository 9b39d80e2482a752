use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::matrix::Matrix;

/// Operator on `V^{⊗k}` with `dim V = n`. Multi-indices `(i_1, ..., i_k)`
/// are flattened lexicographically, `i_1` most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOp {
    n: usize,
    arity: usize,
    mat: Matrix,
}

/// Flattens a 0-based multi-index.
pub fn flat_index(n: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * n + i)
}

/// Inverse of [`flat_index`].
pub fn multi_index(n: usize, arity: usize, mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = flat % n;
        flat /= n;
    }
    out
}

impl TensorOp {
    pub fn new(n: usize, arity: usize, mat: Matrix) -> Result<Self> {
        let size = n.pow(arity as u32);
        if mat.rows() != size || mat.cols() != size {
            return Err(Error::DimensionMismatch(format!(
                "operator on V^{arity} with dim V = {n} needs a {size}x{size} matrix"
            )));
        }
        Ok(TensorOp { n, arity, mat })
    }

    pub fn identity(n: usize, arity: usize) -> Self {
        TensorOp {
            n,
            arity,
            mat: Matrix::identity(n.pow(arity as u32)),
        }
    }

    /// The flip `e_i ⊗ e_j -> e_j ⊗ e_i`.
    pub fn flip(n: usize) -> Self {
        let mut m = Matrix::zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                m[(j * n + i, i * n + j)] = Scalar::one();
            }
        }
        TensorOp {
            n,
            arity: 2,
            mat: m,
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn into_matrix(self) -> Matrix {
        self.mat
    }

    /// Entry with row multi-index `out` and column multi-index `inp`.
    pub fn entry(&self, out: &[usize], inp: &[usize]) -> &Scalar {
        &self.mat[(flat_index(self.n, out), flat_index(self.n, inp))]
    }

    fn compatible(&self, other: &TensorOp) -> Result<()> {
        if self.n != other.n || self.arity != other.arity {
            return Err(Error::DimensionMismatch(
                "tensor operators of different shape".into(),
            ));
        }
        Ok(())
    }

    pub fn matmul(&self, other: &TensorOp) -> Result<TensorOp> {
        self.compatible(other)?;
        Ok(TensorOp {
            n: self.n,
            arity: self.arity,
            mat: self.mat.mul(&other.mat)?,
        })
    }

    pub fn add(&self, other: &TensorOp) -> Result<TensorOp> {
        self.compatible(other)?;
        Ok(TensorOp {
            n: self.n,
            arity: self.arity,
            mat: self.mat.add(&other.mat)?,
        })
    }

    pub fn sub(&self, other: &TensorOp) -> Result<TensorOp> {
        self.compatible(other)?;
        Ok(TensorOp {
            n: self.n,
            arity: self.arity,
            mat: self.mat.sub(&other.mat)?,
        })
    }

    pub fn scale(&self, c: &Scalar) -> TensorOp {
        TensorOp {
            n: self.n,
            arity: self.arity,
            mat: self.mat.scale(c),
        }
    }

    pub fn kron(&self, other: &TensorOp) -> Result<TensorOp> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(
                "kron of different base dimensions".into(),
            ));
        }
        Ok(TensorOp {
            n: self.n,
            arity: self.arity + other.arity,
            mat: self.mat.kron(&other.mat),
        })
    }

    pub fn inverse(&self) -> Result<TensorOp> {
        Ok(TensorOp {
            n: self.n,
            arity: self.arity,
            mat: self.mat.inverse()?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// `I^{⊗(pos-1)} ⊗ self ⊗ I^{⊗(total-pos-arity+1)}`, `pos` 1-based.
    pub fn embed_at(&self, pos: usize, total: usize) -> Result<TensorOp> {
        if pos == 0 || pos + self.arity - 1 > total {
            return Err(Error::IndexOutOfRange {
                index: pos,
                max: total + 1 - self.arity,
            });
        }
        let left = Matrix::identity(self.n.pow((pos - 1) as u32));
        let right = Matrix::identity(self.n.pow((total + 1 - pos - self.arity) as u32));
        Ok(TensorOp {
            n: self.n,
            arity: total,
            mat: left.kron(&self.mat).kron(&right),
        })
    }

    /// Contracts tensor factor `space` (1-based).
    pub fn partial_trace(&self, space: usize) -> Result<TensorOp> {
        if space == 0 || space > self.arity {
            return Err(Error::IndexOutOfRange {
                index: space,
                max: self.arity,
            });
        }
        let n = self.n;
        let k = self.arity;
        let size = n.pow((k - 1) as u32);
        let mut out = Matrix::zeros(size, size);
        let insert = |flat: usize, t: usize| {
            let mut mi = multi_index(n, k - 1, flat);
            mi.insert(space - 1, t);
            flat_index(n, &mi)
        };
        for r in 0..size {
            for c in 0..size {
                let mut acc = Scalar::zero();
                for t in 0..n {
                    let x = &self.mat[(insert(r, t), insert(c, t))];
                    if !x.is_zero() {
                        acc += x;
                    }
                }
                out[(r, c)] = acc;
            }
        }
        Ok(TensorOp {
            n,
            arity: k - 1,
            mat: out,
        })
    }

    pub fn trace(&self) -> Scalar {
        self.mat.trace()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse;

    #[test]
    fn embedding() {
        let r = TensorOp::flip(2);
        assert_eq!(r.embed_at(1, 2).unwrap(), r);
        let r23 = r.embed_at(2, 3).unwrap();
        assert_eq!(r23, TensorOp::identity(2, 1).kron(&r).unwrap());
        assert_eq!(
            Matrix::identity(2).kron(&Matrix::identity(2)),
            Matrix::identity(4)
        );
        assert!(r.embed_at(3, 3).is_err());
    }

    #[test]
    fn traces_of_flip() {
        let s = TensorOp::flip(2);
        assert_eq!(s.partial_trace(2).unwrap(), TensorOp::identity(2, 1));
        let i2 = TensorOp::identity(2, 2);
        assert_eq!(
            i2.partial_trace(1).unwrap(),
            TensorOp::identity(2, 1).scale(&Scalar::from_int(2))
        );
        assert!(matches!(
            s.partial_trace(3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn sequential_trace_is_full_trace() {
        let m = Matrix::from_fn(8, 8, |i, j| parse(&format!("{}*q + {}", i, j * j)).unwrap());
        let op = TensorOp::new(2, 3, m).unwrap();
        let t = op
            .partial_trace(2)
            .unwrap()
            .partial_trace(1)
            .unwrap()
            .partial_trace(1)
            .unwrap();
        assert_eq!(t.trace(), op.trace());
    }

    #[test]
    fn trace_locality() {
        let a = TensorOp::new(
            2,
            2,
            Matrix::from_fn(4, 4, |i, j| parse(&format!("{i}*q - {j}")).unwrap()),
        )
        .unwrap();
        let b = Matrix::from_fn(2, 2, |i, j| parse(&format!("mu1 + {}", i + 2 * j)).unwrap());
        // B in the untraced factor factors out of the trace
        let b1 = TensorOp::new(2, 2, b.kron(&Matrix::identity(2))).unwrap();
        let lhs = a.matmul(&b1).unwrap().partial_trace(2).unwrap();
        let rhs = a.partial_trace(2).unwrap().matrix().mul(&b).unwrap();
        assert_eq!(lhs.matrix(), &rhs);
        // B in the traced factor moves around cyclically
        let b2 = TensorOp::new(2, 2, Matrix::identity(2).kron(&b)).unwrap();
        assert_eq!(
            a.matmul(&b2).unwrap().partial_trace(2).unwrap(),
            b2.matmul(&a).unwrap().partial_trace(2).unwrap()
        );
    }
}
