use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hecke::HeckeSymmetry;
use crate::linalg::Matrix;
use crate::scalar::{qnumber_at, Scalar};

use super::basis::transport;

/// Which of the two equivalent expressions for `P_+^{(3)}` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum P3Form {
    /// Words starting and ending with `P_{+1}`.
    First,
    /// Words starting and ending with `P_{+2}`.
    Second,
}

/// `Q`, `P_±^{(2)}` in word coordinates of `L^{⊗2}`, and the constants of
/// `P_+^{(3)}`.
#[derive(Clone, Debug)]
pub struct ProjectorSet {
    n: usize,
    q: Scalar,
    pub qop: Matrix,
    pub qop_inv: Matrix,
    pub p_plus: Matrix,
    pub p_minus: Matrix,
    pub a: Scalar,
    pub b: Scalar,
    /// `2_q^6 / (4·3_q^2)`.
    pub p3_scale: Scalar,
}

/// Test vectors used for the arity-3 axioms when the space is too large to
/// run through a full basis.
pub const SAMPLED_VECTORS: usize = 4;
const FULL_BASIS_LIMIT: usize = 64;

/// Sparse rows of a square matrix.
fn sparse_rows(m: &Matrix) -> Vec<Vec<(usize, Scalar)>> {
    (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(c, x)| (c, x.clone()))
                .collect()
        })
        .collect()
}

impl ProjectorSet {
    pub fn build(hs: &HeckeSymmetry) -> Result<Self> {
        let n = hs.dim();
        let q = hs.q().clone();
        let two = qnumber_at(2, &q);
        let three = qnumber_at(3, &q);
        if two.is_zero() || three.is_zero() {
            return Err(Error::BadDeformationParameter(format!(
                "2_q = {two}, 3_q = {three}"
            )));
        }
        let side = n * n;
        let r = hs.r().matrix();
        let ri = hs.r_inv().matrix();
        // conjugation of the basis matrix: y_{KL} = Σ R_{IK} x_{IJ} R^{-1}_{LJ}
        let conj = |left: &Matrix, right: &Matrix| {
            Matrix::from_fn(side * side, side * side, |row, col| {
                let (k, l) = (row / side, row % side);
                let (i, j) = (col / side, col % side);
                &left[(i, k)] * &right[(l, j)]
            })
        };
        let t = transport(hs, 2)?;
        let t_inv = t.inverse()?;
        let qop = t.mul(&conj(r, ri))?.mul(&t_inv)?;
        let qop_inv = t.mul(&conj(ri, r))?.mul(&t_inv)?;
        let two2 = &two * &two;
        let id = Matrix::identity(side * side);
        let q2 = &q * &q;
        let qm2 = q2.inv()?;
        let sum = qop.add(&qop_inv)?;
        let p_plus = id.scale(&(&q2 + &qm2)).add(&sum)?.scale(&two2.inv()?);
        let p_minus = id
            .scale(&Scalar::from_int(2))
            .sub(&sum)?
            .scale(&two2.inv()?);
        let two4 = &two2 * &two2;
        let q4 = &q2 * &q2;
        let a =
            (&(&(&(&q4 + &q2) + &Scalar::from_int(4)) + &qm2) + &q4.inv()?).checked_div(&two4)?;
        let four = qnumber_at(4, &q);
        let b = (&four * &four).checked_div(&(&two4 * &two4))?;
        let p3_scale = two
            .pow(6)?
            .checked_div(&(&Scalar::from_int(4) * &(&three * &three)))?;
        let set = ProjectorSet {
            n,
            q,
            qop,
            qop_inv,
            p_plus,
            p_minus,
            a,
            b,
            p3_scale,
        };
        set.verify_arity2()?;
        Ok(set)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    fn verify_arity2(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::ProjectorAxiomFailed(what.to_string()));
        let id = Matrix::identity(self.p_plus.rows());
        if self.qop.mul(&self.qop_inv)? != id {
            return fail("Q Q^{-1} = Id");
        }
        if self.p_plus.add(&self.p_minus)? != id {
            return fail("P+ + P- = Id");
        }
        if self.p_plus.mul(&self.p_plus)? != self.p_plus {
            return fail("P+^2 = P+");
        }
        if self.p_minus.mul(&self.p_minus)? != self.p_minus {
            return fail("P-^2 = P-");
        }
        if !self.p_plus.mul(&self.p_minus)?.is_zero() || !self.p_minus.mul(&self.p_plus)?.is_zero()
        {
            return fail("P+ P- = 0");
        }
        Ok(())
    }

    /// Applies an operator on `L^{⊗2}` at positions `(pos, pos+1)` of a
    /// vector in `L^{⊗3}`.
    fn apply_at(&self, op: &[Vec<(usize, Scalar)>], pos: usize, v: &[Scalar]) -> Vec<Scalar> {
        let side = self.n * self.n;
        let mut out = vec![Scalar::zero(); v.len()];
        let at = |pair: usize, w: usize| match pos {
            1 => pair * side + w,
            _ => w * side * side + pair,
        };
        for w in 0..side {
            for (pair, row) in op.iter().enumerate() {
                let mut acc = Scalar::zero();
                for (c, x) in row {
                    let y = &v[at(*c, w)];
                    if !y.is_zero() {
                        acc += &(x * y);
                    }
                }
                out[at(pair, w)] = acc;
            }
        }
        out
    }

    /// `P_+^{(2)}` on a vector of `L^{⊗2}`.
    pub fn plus2(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.p_plus.mul_vec(v)
    }

    pub fn minus2(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.p_minus.mul_vec(v)
    }

    /// `P_{+pos}^{(2)}` on a vector of `L^{⊗3}`, `pos ∈ {1, 2}`.
    pub fn plus_at(&self, pos: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.apply_at(&sparse_rows(&self.p_plus), pos, v)
    }

    /// `P_+^{(3)}` on a vector of `L^{⊗3}`.
    pub fn plus3(&self, form: P3Form, v: &[Scalar]) -> Vec<Scalar> {
        let rows = sparse_rows(&self.p_plus);
        let (x, y) = match form {
            P3Form::First => (1, 2),
            P3Form::Second => (2, 1),
        };
        // c (P_x P_y P_x P_y P_x - a P_x P_y P_x + b P_x) v
        let s1 = self.apply_at(&rows, x, v);
        let s2 = self.apply_at(&rows, y, &s1);
        let s3 = self.apply_at(&rows, x, &s2);
        let s4 = self.apply_at(&rows, y, &s3);
        let s5 = self.apply_at(&rows, x, &s4);
        s5.iter()
            .zip(&s3)
            .zip(&s1)
            .map(|((u, w), z)| &self.p3_scale * &(&(u - &(&self.a * w)) + &(&self.b * z)))
            .collect()
    }

    /// Idempotency of `P_+^{(3)}`, agreement of its two forms and absorption
    /// `P_+^{(3)} P_{+i}^{(2)} = P_{+i}^{(2)} P_+^{(3)} = P_+^{(3)}`. Runs over
    /// the full word basis when `dim L^{⊗3} ≤ 64` and over seeded random
    /// vectors otherwise; returns the number of vectors tested.
    pub fn verify_arity3(&self, seed: u64) -> Result<usize> {
        let dim = (self.n * self.n).pow(3);
        let vectors: Vec<Vec<Scalar>> = if dim <= FULL_BASIS_LIMIT {
            (0..dim)
                .map(|i| {
                    let mut v = vec![Scalar::zero(); dim];
                    v[i] = Scalar::one();
                    v
                })
                .collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..SAMPLED_VECTORS)
                .map(|_| {
                    (0..dim)
                        .map(|_| Scalar::from_int(rng.gen_range(-9..=9)))
                        .collect()
                })
                .collect()
        };
        let fail = |what: &str| Err(Error::ProjectorAxiomFailed(what.to_string()));
        for v in &vectors {
            let p = self.plus3(P3Form::First, v);
            if self.plus3(P3Form::Second, v) != p {
                return fail("the two forms of P+^(3) agree");
            }
            if self.plus3(P3Form::First, &p) != p {
                return fail("P+^(3) is idempotent");
            }
            for pos in [1, 2] {
                if self.plus3(P3Form::First, &self.plus_at(pos, v)) != p {
                    return fail(&format!("P+^(3) P+{pos} = P+^(3)"));
                }
                if self.plus_at(pos, &p) != p {
                    return fail(&format!("P+{pos} P+^(3) = P+^(3)"));
                }
            }
        }
        Ok(vectors.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::SparseVec;
    use crate::rea::{RelationKind, RelationSpace};

    #[test]
    fn flip_symmetrizer() {
        let hs = HeckeSymmetry::flip(2).unwrap();
        let ps = ProjectorSet::build(&hs).unwrap();
        assert_eq!(ps.qop.mul(&ps.qop).unwrap(), Matrix::identity(16));
        let half = Scalar::ratio(1, 2);
        assert_eq!(
            ps.p_plus,
            Matrix::identity(16).add(&ps.qop).unwrap().scale(&half)
        );
        assert_eq!(ps.verify_arity3(0).unwrap(), 64);
    }

    #[test]
    fn deformed_projectors() {
        for hs in [
            HeckeSymmetry::dj_gl(2, Scalar::ratio(7, 5)).unwrap(),
            HeckeSymmetry::q_super(1, 1, Scalar::ratio(9, 7)).unwrap(),
        ] {
            let ps = ProjectorSet::build(&hs).unwrap();
            ps.verify_arity3(0).unwrap();
            // the images are exactly the two relation spaces
            for (p, kind) in [
                (&ps.p_plus, RelationKind::Plus),
                (&ps.p_minus, RelationKind::Minus),
            ] {
                let space = RelationSpace::new(&hs, kind).unwrap();
                assert_eq!(p.rank(), space.dim());
                for c in 0..16 {
                    let col: SparseVec = p
                        .column(c)
                        .into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .collect();
                    assert!(space.basis().contains(&col));
                }
            }
        }
    }

    #[test]
    fn rank_three_sampled() {
        let hs = HeckeSymmetry::dj_gl(3, Scalar::ratio(5, 3)).unwrap();
        let ps = ProjectorSet::build(&hs).unwrap();
        assert_eq!(ps.verify_arity3(42).unwrap(), SAMPLED_VECTORS);
    }
}
