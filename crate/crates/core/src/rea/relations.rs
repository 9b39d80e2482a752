use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::hecke::HeckeSymmetry;
use crate::linalg::{EchelonBasis, QuadraticIdeal, SparseVec};
use crate::scalar::Scalar;

use super::ncmatrix::NCMatrix;
use super::ncpoly::NCPoly;

/// Which quadratic relations to generate.
#[derive(Clone, Debug, PartialEq)]
pub enum RelationKind {
    /// `R L_1 R L_1 - L_1 R L_1 R`, the defining relations of the REA.
    Minus,
    /// `R L_1 R L_1 + L_1 R L_1 R^{-1}`.
    Plus,
    /// `R L_1 R L_1 - L_1 R L_1 R - ℏ (R L_1 - L_1 R)`, the modified REA.
    Modified(Scalar),
}

/// The `N²×N²` matrix whose entries are the relations of the given kind.
pub fn relation_matrix(hs: &HeckeSymmetry, kind: &RelationKind) -> Result<NCMatrix> {
    let n = hs.dim();
    let l1 = NCMatrix::generating_first(n);
    let r = NCMatrix::from_scalars(n, hs.r().matrix());
    let rl = r.mul(&l1)?;
    let lr = l1.mul(&r)?;
    let rlrl = rl.mul(&rl)?;
    match kind {
        RelationKind::Minus => rlrl.sub(&lr.mul(&lr)?),
        RelationKind::Plus => {
            let r_inv = NCMatrix::from_scalars(n, hs.r_inv().matrix());
            rlrl.add(&lr.mul(&l1)?.mul(&r_inv)?)
        }
        RelationKind::Modified(h) => rlrl.sub(&lr.mul(&lr)?)?.sub(&rl.sub(&lr)?.scale(h)),
    }
}

/// Coefficient vector over all words of length at most `max_deg`, longer
/// words first, so that echelon pivots fall on the top-degree part.
pub fn filtered_vector(x: &NCPoly, max_deg: usize) -> SparseVec {
    let a = x.alphabet();
    let mut offsets = vec![0usize; max_deg + 2];
    // offsets[d] = number of words of length in (d, max_deg]
    for d in (0..max_deg).rev() {
        offsets[d] = offsets[d + 1] + a.pow((d + 1) as u32);
    }
    let mut v: SparseVec = x
        .terms()
        .map(|(w, c)| {
            assert!(w.len() <= max_deg, "word longer than the filtration bound");
            (offsets[w.len()] + w.encode(a), c.clone())
        })
        .collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

pub fn filtered_len(alphabet: usize, max_deg: usize) -> usize {
    (0..=max_deg).map(|d| alphabet.pow(d as u32)).sum()
}

/// Span of the relations of one kind inside the words of length at most 2.
#[derive(Clone, Debug)]
pub struct RelationSpace {
    n: usize,
    kind: RelationKind,
    relations: Vec<NCPoly>,
    basis: EchelonBasis,
}

impl RelationSpace {
    pub fn new(hs: &HeckeSymmetry, kind: RelationKind) -> Result<Self> {
        let n = hs.dim();
        let m = relation_matrix(hs, &kind)?;
        let relations: Vec<NCPoly> = m
            .entries()
            .iter()
            .filter(|x| !x.is_zero())
            .cloned()
            .collect();
        let mut basis = EchelonBasis::new(filtered_len(n * n, 2));
        for r in &relations {
            basis.insert(&filtered_vector(r, 2));
        }
        Ok(RelationSpace {
            n,
            kind,
            relations,
            basis,
        })
    }

    pub fn kind(&self) -> &RelationKind {
        &self.kind
    }

    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    /// Nonzero entries of the relation matrix.
    pub fn relations(&self) -> &[NCPoly] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn basis(&self) -> &EchelonBasis {
        &self.basis
    }

    /// Homogeneous degree-2 relation vectors, or `None` for the modified kind.
    pub fn quadratic_vectors(&self) -> Option<Vec<SparseVec>> {
        if matches!(self.kind, RelationKind::Modified(_)) {
            return None;
        }
        Some(
            self.relations
                .iter()
                .map(|r| r.to_sparse(2).expect("degree-2 words fit"))
                .collect(),
        )
    }
}

/// Report of the complementarity of the two relation spaces.
#[derive(Clone, Debug, PartialEq)]
pub struct Complementarity {
    pub dim_minus: usize,
    pub dim_plus: usize,
    pub dim_sum: usize,
    pub total: usize,
}

impl Complementarity {
    pub fn holds(&self) -> bool {
        self.dim_minus + self.dim_plus == self.total && self.dim_sum == self.total
    }
}

pub fn complementarity(hs: &HeckeSymmetry) -> Result<Complementarity> {
    let minus = RelationSpace::new(hs, RelationKind::Minus)?;
    let plus = RelationSpace::new(hs, RelationKind::Plus)?;
    let mut sum = minus.basis.clone();
    for r in plus.basis.rows() {
        sum.insert(r);
    }
    let n = hs.dim();
    Ok(Complementarity {
        dim_minus: minus.dim(),
        dim_plus: plus.dim(),
        dim_sum: sum.rank(),
        total: n.pow(4),
    })
}

/// Reduction to a canonical representative in a quotient of the free
/// algebra on `l_i^j`. Two elements are equal in the quotient exactly when
/// their normal forms agree.
pub trait NormalForm: Send + Sync {
    fn algebra_dim(&self) -> usize;
    fn normal_form(&self, x: &NCPoly) -> Result<NCPoly>;
}

/// Result of a zero test in a quotient.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTest {
    pub is_zero: bool,
    pub residual: NCPoly,
}

pub fn is_zero_mod(x: &NCPoly, nf: &dyn NormalForm) -> Result<ZeroTest> {
    let residual = nf.normal_form(x)?;
    Ok(ZeroTest {
        is_zero: residual.is_zero(),
        residual,
    })
}

/// The reflection equation algebra: the free algebra modulo the two-sided
/// ideal of the `Minus` relations, reduced degree by degree.
pub struct ReaQuotient {
    n: usize,
    ideal: Mutex<QuadraticIdeal>,
}

impl ReaQuotient {
    pub fn new(hs: &HeckeSymmetry) -> Result<Self> {
        let space = RelationSpace::new(hs, RelationKind::Minus)?;
        let n = hs.dim();
        // l_i^j has weight e_i - e_j
        let weights: Vec<Vec<i32>> = (0..n * n)
            .map(|g| {
                let mut w = vec![0i32; n];
                w[g / n] += 1;
                w[g % n] -= 1;
                w
            })
            .collect();
        let ideal = QuadraticIdeal::new(
            n * n,
            space.quadratic_vectors().expect("homogeneous relations"),
            Some(weights),
        );
        Ok(ReaQuotient {
            n,
            ideal: Mutex::new(ideal),
        })
    }

    pub fn relation_count(&self) -> usize {
        self.ideal.lock().expect("ideal lock").relations().len()
    }

    pub fn quotient_dim(&self, d: usize) -> Result<usize> {
        self.ideal.lock().expect("ideal lock").quotient_dim(d)
    }

    pub fn is_graded(&self) -> bool {
        self.ideal.lock().expect("ideal lock").is_graded()
    }
}

impl NormalForm for ReaQuotient {
    fn algebra_dim(&self) -> usize {
        self.n
    }

    fn normal_form(&self, x: &NCPoly) -> Result<NCPoly> {
        let mut out = NCPoly::zero(self.n);
        for (d, part) in x.parts() {
            if d < 2 {
                out = out.add(&part);
                continue;
            }
            let v = part.to_sparse(d)?;
            let red = self.ideal.lock().expect("ideal lock").reduce(d, &v)?;
            out = out.add(&NCPoly::from_sparse(self.n, d, &red));
        }
        Ok(out)
    }
}

/// The modified REA for `q ≠ ±1`, reduced through the isomorphism
/// `l̂_i^j ↦ l_i^j + δ_i^j ℏ/ξ` onto the REA.
pub struct ShiftedQuotient {
    rea: ReaQuotient,
    shift: Scalar,
}

impl ShiftedQuotient {
    pub fn new(hs: &HeckeSymmetry, h: &Scalar) -> Result<Self> {
        let xi = hs.xi();
        if xi.is_zero() {
            return Err(Error::ShiftUnavailable);
        }
        Ok(ShiftedQuotient {
            rea: ReaQuotient::new(hs)?,
            shift: h.checked_div(&xi)?,
        })
    }

    pub fn shift(&self) -> &Scalar {
        &self.shift
    }

    /// Image of a hatted element in the REA.
    pub fn to_rea(&self, x: &NCPoly) -> NCPoly {
        x.shift_diagonal(&self.shift)
    }
}

impl NormalForm for ShiftedQuotient {
    fn algebra_dim(&self) -> usize {
        self.rea.n
    }

    fn normal_form(&self, x: &NCPoly) -> Result<NCPoly> {
        self.rea.normal_form(&self.to_rea(x))
    }
}
