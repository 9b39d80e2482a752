//! Incremental sparse echelon bases for span membership.

use std::collections::{BTreeMap, HashMap};

use crate::scalar::Scalar;

use super::guard;

/// Sparse vector: `(index, value)` pairs, strictly increasing indices, no
/// stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Span of inserted vectors, kept in echelon form with unit pivots.
///
/// The pivot of a row is its first nonzero column. With tracking enabled each
/// row also records its expression in the inserted generators, which yields
/// membership certificates.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
    combos: Option<Vec<SparseVec>>,
    generators: usize,
    stored: usize,
}

/// Outcome of a membership query.
#[derive(Clone, Debug, PartialEq)]
pub struct Membership {
    pub in_span: bool,
    /// Coefficients on the inserted generators (tracking bases only).
    pub coords: Option<SparseVec>,
    /// What is left after reducing by the basis; empty iff `in_span`.
    pub residual: SparseVec,
}

fn axpy(work: &mut BTreeMap<usize, Scalar>, coef: &Scalar, row: &SparseVec) {
    for (c, x) in row {
        let t = coef * x;
        match work.get_mut(c) {
            Some(w) => {
                *w -= &t;
                if w.is_zero() {
                    work.remove(c);
                }
            }
            None => {
                work.insert(*c, -t);
            }
        }
    }
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
            combos: None,
            generators: 0,
            stored: 0,
        }
    }

    /// A basis that records certificates.
    pub fn with_tracking(dim: usize) -> Self {
        EchelonBasis {
            combos: Some(Vec::new()),
            ..EchelonBasis::new(dim)
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    fn reduce_inner(
        &self,
        v: &SparseVec,
        mut combo: Option<BTreeMap<usize, Scalar>>,
    ) -> (BTreeMap<usize, Scalar>, Option<BTreeMap<usize, Scalar>>) {
        let mut work: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        let mut cursor = 0;
        loop {
            let Some((&col, coef)) = work.range(cursor..).next() else {
                break;
            };
            cursor = col + 1;
            let Some(&r) = self.pivot_row.get(&col) else {
                continue;
            };
            let coef = coef.clone();
            axpy(&mut work, &coef, &self.rows[r]);
            if let (Some(cm), Some(combos)) = (combo.as_mut(), self.combos.as_ref()) {
                axpy(cm, &coef, &combos[r]);
            }
        }
        (work, combo)
    }

    /// Remainder of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.reduce_inner(v, None).0.into_iter().collect()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_inner(v, None).0.is_empty()
    }

    pub fn membership(&self, v: &SparseVec) -> Membership {
        let track = self.combos.is_some();
        let (res, combo) = self.reduce_inner(v, track.then(BTreeMap::new));
        let in_span = res.is_empty();
        Membership {
            in_span,
            coords: if in_span {
                combo.map(|c| c.into_iter().map(|(i, x)| (i, -x)).collect())
            } else {
                None
            },
            residual: res.into_iter().collect(),
        }
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let g = self.generators;
        self.generators += 1;
        let combo = self.combos.as_ref().map(|_| {
            let mut m = BTreeMap::new();
            m.insert(g, Scalar::one());
            m
        });
        let (res, combo) = self.reduce_inner(v, combo);
        let Some((&lead_col, lead)) = res.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero lead");
        let row: SparseVec = res.iter().map(|(&c, x)| (c, x * &inv)).collect();
        self.stored += row.len();
        guard::check_entries(self.stored).expect("echelon basis within memory cap");
        if let (Some(combos), Some(cm)) = (self.combos.as_mut(), combo) {
            combos.push(cm.into_iter().map(|(i, x)| (i, &x * &inv)).collect());
        }
        self.pivot_row.insert(lead_col, self.rows.len());
        self.rows.push(row);
        true
    }
}

/// Decides whether `v` lies in the span of `span`.
pub fn subspace_membership(v: &[Scalar], span: &[Vec<Scalar>]) -> Membership {
    let to_sparse = |w: &[Scalar]| -> SparseVec {
        w.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect()
    };
    let mut basis = EchelonBasis::with_tracking(v.len());
    for w in span {
        basis.insert(&to_sparse(w));
    }
    basis.membership(&to_sparse(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dense(n: usize, entries: &[(usize, i64)]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        for &(i, x) in entries {
            v[i] = Scalar::from_int(x);
        }
        v
    }

    fn reconstruct(n: usize, span: &[Vec<Scalar>], coords: &SparseVec) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); n];
        for (g, c) in coords {
            for (o, x) in out.iter_mut().zip(&span[*g]) {
                *o += &(c * x);
            }
        }
        out
    }

    #[test]
    fn trivial_cases() {
        let v = dense(3, &[(0, 2), (2, -1)]);
        let m = subspace_membership(&v, &[v.clone()]);
        assert!(m.in_span);
        assert_eq!(m.coords, Some(vec![(0, Scalar::one())]));

        let e1 = dense(2, &[(0, 1)]);
        let e2 = dense(2, &[(1, 1)]);
        let m = subspace_membership(&e1, &[e2]);
        assert!(!m.in_span);
        assert_eq!(m.residual, vec![(0, Scalar::one())]);
    }

    #[test]
    fn random_combination_is_member() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let n = 9;
        let span: Vec<Vec<Scalar>> = (0..5)
            .map(|_| {
                (0..n)
                    .map(|_| Scalar::from_int(rng.gen_range(-5..=5)))
                    .collect()
            })
            .collect();
        let coefs: Vec<i64> = (0..5).map(|_| rng.gen_range(-7..=7)).collect();
        let mut v = vec![Scalar::zero(); n];
        for (w, &c) in span.iter().zip(&coefs) {
            for (o, x) in v.iter_mut().zip(w) {
                *o += &(&Scalar::from_int(c) * x);
            }
        }
        let m = subspace_membership(&v, &span);
        assert!(m.in_span);
        assert_eq!(reconstruct(n, &span, m.coords.as_ref().unwrap()), v);
    }

    #[test]
    fn dependent_generators_keep_certificates_valid() {
        let a = dense(4, &[(0, 1), (1, 2)]);
        let b = dense(4, &[(1, 1), (3, 1)]);
        let c = dense(4, &[(0, 1), (1, 4), (3, 2)]);
        let span = vec![a, b, c.clone()];
        let target = dense(4, &[(0, 3), (1, 4), (3, -2)]);
        let m = subspace_membership(&target, &span);
        assert!(m.in_span);
        assert_eq!(reconstruct(4, &span, m.coords.as_ref().unwrap()), target);
    }
}
