//! Poincaré series of the R-symmetric and R-exterior algebras and the
//! bi-rank read off from the latter.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, QuadraticIdeal, SparseVec, TensorOp};
use crate::scalar::{qnumber_at, Rational, Scalar};

use super::HeckeSymmetry;

/// A rational function `num(t) / den(t)` with coprime parts and
/// `den(0) = 1`. Coefficients are listed from the constant term up.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesFit {
    pub numerator: Vec<Rational>,
    pub denominator: Vec<Rational>,
}

impl SeriesFit {
    pub fn numerator_degree(&self) -> usize {
        self.numerator.len().saturating_sub(1)
    }

    pub fn denominator_degree(&self) -> usize {
        self.denominator.len().saturating_sub(1)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BiRankReport {
    /// `dim Sym^k_R(V)` for `k = 0..=depth`.
    pub sym_dims: Vec<usize>,
    /// `dim Λ^k_R(V)` for `k = 0..=depth`.
    pub wedge_dims: Vec<usize>,
    pub fit: SeriesFit,
    pub m: usize,
    pub n: usize,
    pub depth: usize,
    /// The `k` for which `k_q ≠ 0` was required (and checked when `q` is a
    /// number).
    pub required_qnumbers: Vec<u32>,
}

fn trim(v: &mut Vec<Rational>) {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Remainder of univariate polynomials over Q (coefficients low to high).
fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let f = &r[dr] / lb;
        for (i, bc) in b.iter().enumerate() {
            let t = &f * bc;
            r[dr - db + i] -= t;
        }
        r.pop();
        trim(&mut r);
        if r.is_empty() {
            r.push(Rational::zero());
        }
    }
    r
}

fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    trim(&mut x);
    trim(&mut y);
    while !(y.len() == 1 && y[0].is_zero()) {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

fn poly_div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return vec![Rational::zero()];
    }
    let mut quot = vec![Rational::zero(); r.len() - db];
    for k in (0..quot.len()).rev() {
        let f = &r[k + db] / &b[db];
        for (i, bc) in b.iter().enumerate() {
            let t = &f * bc;
            r[k + i] -= t;
        }
        quot[k] = f;
    }
    quot
}

/// Smallest-degree rational function matching the series `c` with at least
/// one equation to spare. Ties in total degree are broken towards smaller
/// denominator degree.
pub fn reconstruct_series(c: &[Rational]) -> Option<SeriesFit> {
    let d = c.len().checked_sub(1)?;
    let coef = |k: isize| -> Rational {
        if k < 0 {
            Rational::zero()
        } else {
            c[k as usize].clone()
        }
    };
    for s in 0..=d {
        for b in 0..=s {
            let a = s - b;
            if d < a + b + 1 {
                continue;
            }
            // unknowns den_1..den_b; equations for t^k, k = a+1..=d
            let eqs = d - a;
            let sys = Matrix::from_fn(eqs, b + 1, |row, col| {
                let k = (a + 1 + row) as isize;
                if col < b {
                    Scalar::from_rational(coef(k - 1 - col as isize))
                } else {
                    Scalar::from_rational(-coef(k))
                }
            });
            let (red, pivots) = sys.rowreduce();
            if pivots.contains(&b) {
                continue;
            }
            let mut den = vec![Rational::one()];
            for j in 0..b {
                let v = pivots
                    .iter()
                    .position(|&p| p == j)
                    .map(|r| red[(r, b)].as_rational().expect("rational system").clone())
                    .unwrap_or_else(Rational::zero);
                den.push(v);
            }
            let num: Vec<Rational> = (0..=a)
                .map(|k| {
                    (0..=b.min(k)).fold(Rational::zero(), |acc, j| {
                        acc + &den[j] * coef((k - j) as isize)
                    })
                })
                .collect();
            let g = poly_gcd(&num, &den);
            let mut num = poly_div(&num, &g);
            let mut den = poly_div(&den, &g);
            let lead = den[0].clone();
            if lead.is_zero() {
                continue;
            }
            for x in num.iter_mut().chain(den.iter_mut()) {
                *x /= &lead;
            }
            trim(&mut num);
            trim(&mut den);
            return Some(SeriesFit {
                numerator: num,
                denominator: den,
            });
        }
    }
    None
}

/// Ideal in `T(V)` generated by the columns of a two-tensor operator.
fn image_ideal(op: &TensorOp) -> QuadraticIdeal {
    let n = op.dim();
    let m = op.matrix();
    let relations: Vec<SparseVec> = (0..n * n)
        .map(|col| {
            (0..n * n)
                .filter(|&row| !m[(row, col)].is_zero())
                .map(|row| (row, m[(row, col)].clone()))
                .collect::<SparseVec>()
        })
        .filter(|v| !v.is_empty())
        .collect();
    let weights = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i32).collect())
        .collect();
    QuadraticIdeal::new(n, relations, Some(weights))
}

/// Computes both Poincaré series up to `depth` and reconstructs `P_-(t)`.
pub fn birank(hs: &HeckeSymmetry, depth: usize) -> Result<BiRankReport> {
    if depth < 2 {
        return Err(Error::InconclusiveDepth(depth));
    }
    let q = hs.q();
    let required: Vec<u32> = (1..=depth as u32).collect();
    if q.is_constant() {
        for &k in &required {
            if qnumber_at(k, q).is_zero() {
                return Err(Error::BadDeformationParameter(format!(
                    "{k}_q = 0 at q = {q}"
                )));
            }
        }
    }
    let n = hs.dim();
    let id = TensorOp::identity(n, 2);
    let wedge_op = id.scale(&q.inv()?).add(hs.r())?;
    let sym_op = id.scale(q).sub(hs.r())?;
    let mut wedge = image_ideal(&wedge_op);
    let mut sym = image_ideal(&sym_op);
    let mut wedge_dims = Vec::with_capacity(depth + 1);
    let mut sym_dims = Vec::with_capacity(depth + 1);
    for k in 0..=depth {
        wedge_dims.push(wedge.quotient_dim(k)?);
        sym_dims.push(sym.quotient_dim(k)?);
    }
    let series: Vec<Rational> = wedge_dims
        .iter()
        .map(|&d| Rational::from_integer((d as i64).into()))
        .collect();
    let full = reconstruct_series(&series).ok_or(Error::InconclusiveDepth(depth))?;
    let shorter = reconstruct_series(&series[..depth]).ok_or(Error::InconclusiveDepth(depth))?;
    if full != shorter {
        return Err(Error::InconclusiveDepth(depth));
    }
    Ok(BiRankReport {
        sym_dims,
        wedge_dims,
        m: full.numerator_degree(),
        n: full.denominator_degree(),
        fit: full,
        depth,
        required_qnumbers: required,
    })
}
