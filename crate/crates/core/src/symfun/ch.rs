//! Schur functions and the coefficients of the Cayley-Hamilton identity.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::genpoly::{det, GenPoly};
use super::partition::{shape_label, Partition};

/// `s_λ = det(a_{λ'_i - i + j})` in the elementary generators `a_k = x_k`.
pub fn jacobi_trudi(lambda: &Partition) -> GenPoly {
    let conj = lambda.conjugate();
    let parts = conj.parts();
    let n = parts.len();
    let a = |r: i64| -> GenPoly {
        match r {
            r if r < 0 => GenPoly::zero(),
            0 => GenPoly::one(),
            r => GenPoly::gen(r as usize),
        }
    };
    let m: Vec<Vec<GenPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| a(parts[i] as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    det(&m)
}

/// One term `coef · s_shape` of a CH coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct ShapeTerm {
    pub coef: Scalar,
    pub k: usize,
    pub r: usize,
    pub shape: Partition,
}

impl ShapeTerm {
    pub fn label(&self, m: usize, n: usize) -> String {
        shape_label(m, n, self.k, self.r)
    }
}

/// Coefficient of `L^{m+n-i}` as `Σ_k (-1)^k q^{2k-i} s_{[m|n]^k_{i-k}}`.
pub fn ch_terms(m: usize, n: usize, i: usize) -> Vec<ShapeTerm> {
    let q = Scalar::q();
    let lo = i.saturating_sub(n);
    let hi = i.min(m);
    (lo..=hi)
        .map(|k| {
            let sign = Scalar::from_int(if k % 2 == 0 { 1 } else { -1 });
            let coef = &sign * &q.pow(2 * k as i32 - i as i32).expect("q nonzero");
            ShapeTerm {
                coef,
                k,
                r: i - k,
                shape: Partition::upper_lower(m, n, k, i - k),
            }
        })
        .collect()
}

/// The `m+n+1` CH coefficients, highest power of `L` first, as polynomials
/// in the elementary generators.
pub fn ch_coefficients(m: usize, n: usize) -> Vec<GenPoly> {
    assert!(m + n >= 1, "m + n must be positive");
    (0..=m + n)
        .map(|i| {
            ch_terms(m, n, i).iter().fold(GenPoly::zero(), |acc, t| {
                acc.add(&jacobi_trudi(&t.shape).scale(&t.coef))
            })
        })
        .collect()
}

/// The two factors of the factorized CH identity.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorized {
    /// `(-q)^k s_{[m|n]^k}`, `k = 0..=m`, coefficient of `L^{m-k}`.
    pub even: Vec<ShapeTerm>,
    /// `q^{-r} s_{[m|n]_r}`, `r = 0..=n`, coefficient of `L^{n-r}`.
    pub odd: Vec<ShapeTerm>,
}

/// Formal product of shape symbols with a scalar coefficient.
type FormalPoly = BTreeMap<Vec<Partition>, Scalar>;

fn formal_add(p: &mut FormalPoly, mut key: Vec<Partition>, c: Scalar) {
    key.sort();
    let e = p.entry(key.clone()).or_insert_with(Scalar::zero);
    *e += &c;
    if e.is_zero() {
        p.remove(&key);
    }
}

/// Builds both factors and checks that `s_{[m|n]}` times the CH coefficients
/// equals the product of the factors once the bilinear relations
/// `s_{[m|n]} s_{[m|n]^k_r} = s_{[m|n]_r} s_{[m|n]^k}` are used as rewrite
/// rules on formal Schur symbols.
pub fn ch_factorized(m: usize, n: usize) -> Result<Factorized> {
    assert!(m + n >= 1, "m + n must be positive");
    let q = Scalar::q();
    let even: Vec<ShapeTerm> = (0..=m)
        .map(|k| ShapeTerm {
            coef: (-&q).powu(k as u32),
            k,
            r: 0,
            shape: Partition::upper(m, n, k),
        })
        .collect();
    let odd: Vec<ShapeTerm> = (0..=n)
        .map(|r| ShapeTerm {
            coef: q.pow(-(r as i32)).expect("q nonzero"),
            k: 0,
            r,
            shape: Partition::lower(m, n, r),
        })
        .collect();
    let rect = Partition::rect(m, n);
    for i in 0..=m + n {
        let mut lhs = FormalPoly::new();
        for t in ch_terms(m, n, i) {
            // rewrite s_rect * s_{[m|n]^k_r} -> s_{[m|n]_r} * s_{[m|n]^k}
            let key = if t.k == 0 || t.r == 0 {
                vec![rect.clone(), t.shape.clone()]
            } else {
                vec![Partition::lower(m, n, t.r), Partition::upper(m, n, t.k)]
            };
            formal_add(&mut lhs, key, t.coef.clone());
        }
        let mut rhs = FormalPoly::new();
        for e in &even {
            for o in &odd {
                if e.k + o.r == i {
                    formal_add(
                        &mut rhs,
                        vec![e.shape.clone(), o.shape.clone()],
                        &e.coef * &o.coef,
                    );
                }
            }
        }
        if lhs != rhs {
            return Err(Error::FactorizationMismatch(format!(
                "coefficient of L^{} for ({m}|{n})",
                m + n - i
            )));
        }
    }
    Ok(Factorized { even, odd })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize) -> GenPoly {
        GenPoly::gen(i)
    }

    #[test]
    fn jacobi_trudi_small() {
        assert_eq!(jacobi_trudi(&Partition::new(vec![1]).unwrap()), a(1));
        assert_eq!(jacobi_trudi(&Partition::new(vec![1, 1]).unwrap()), a(2));
        // 2x2 determinant |a1 a2; 1 a1| for λ' = (2,1)... written out:
        // λ = (2,1), λ' = (2,1): det [[a2, a3], [a0, a1]] = a1 a2 - a3
        let want = a(1).mul(&a(2)).sub(&a(3));
        assert_eq!(jacobi_trudi(&Partition::new(vec![2, 1]).unwrap()), want);
        assert_eq!(jacobi_trudi(&Partition::empty()), GenPoly::one());
    }

    #[test]
    fn ch_one_zero() {
        let c = ch_coefficients(1, 0);
        assert_eq!(c, vec![GenPoly::one(), a(1).scale(&-Scalar::q())]);
    }

    #[test]
    fn ch_two_zero() {
        let q = Scalar::q();
        let c = ch_coefficients(2, 0);
        assert_eq!(c[0], GenPoly::one());
        assert_eq!(c[1], a(1).scale(&-&q));
        assert_eq!(c[2], a(2).scale(&q.powu(2)));
    }

    #[test]
    fn ch_one_one() {
        let q = Scalar::q();
        let c = ch_coefficients(1, 1);
        assert_eq!(c[0], a(1));
        // q^{-1} s_(1,1) - q s_(2) = q^{-1} a2 - q (a1^2 - a2)
        let want1 = a(2)
            .scale(&q.inv().unwrap())
            .sub(&a(1).pow(2).sub(&a(2)).scale(&q));
        assert_eq!(c[1], want1);
        // -s_(2,1) = -(a1 a2 - a3)
        assert_eq!(c[2], a(1).mul(&a(2)).sub(&a(3)).neg());
    }

    #[test]
    fn leading_coefficient_is_rectangle() {
        for (m, n) in [(1, 0), (2, 1), (3, 2)] {
            assert_eq!(
                ch_coefficients(m, n)[0],
                jacobi_trudi(&Partition::rect(m, n))
            );
        }
    }

    #[test]
    fn factorization_rewrites() {
        for (m, n) in [(1, 0), (2, 0), (1, 1), (2, 1), (3, 2)] {
            let f = ch_factorized(m, n).unwrap();
            assert_eq!(f.even.len(), m + 1);
            assert_eq!(f.odd.len(), n + 1);
        }
        assert_eq!(ch_factorized(2, 0).unwrap().odd.len(), 1);
    }
}
