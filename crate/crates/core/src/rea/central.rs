//! Power sums, their centrality, and the Cayley-Hamilton identity.

use crate::error::{Error, Result};
use crate::hecke::HeckeSymmetry;
use crate::linalg::Matrix;
use crate::scalar::{Scalar, Symbol};
use crate::symfun::{a_from_p, ch_coefficients, generators, specialize_q, GenPoly};

use super::ncmatrix::NCMatrix;
use super::ncpoly::{word_space, NCPoly};
use super::relations::{is_zero_mod, NormalForm};

/// `Tr_R L^k = Tr(L^k C)`.
pub fn power_sum_element(k: usize, n: usize, c: &Matrix) -> Result<NCPoly> {
    NCMatrix::generating(n).pow(k as u32)?.rtrace(c)
}

/// Realizes a polynomial in the power sums `p_1, p_2, ...` as an element
/// of the free algebra, `p_k ↦ Tr_R L^k`.
pub fn realize_power_sums(expr: &GenPoly, n: usize, c: &Matrix) -> Result<NCPoly> {
    let k = expr.max_generator();
    let images: Vec<NCPoly> = (1..=k)
        .map(|j| power_sum_element(j, n, c))
        .collect::<Result<_>>()?;
    let mut out = NCPoly::zero(n);
    for (m, coef) in expr.terms() {
        let mut t = NCPoly::constant(n, coef.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                t = t.mul(&images[i]);
            }
        }
        out = out.add(&t);
    }
    Ok(out)
}

/// Outcome of a centrality test of one element.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralityReport {
    pub k: usize,
    pub degree: usize,
    /// Generators `(i, j)`, 1-based, whose commutator did not vanish.
    pub failures: Vec<(usize, usize)>,
}

impl CentralityReport {
    pub fn is_central(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Tests `[Tr_R L^k, l_i^j] = 0` for all generators.
pub fn centrality_check(
    k: usize,
    hs: &HeckeSymmetry,
    nf: &dyn NormalForm,
) -> Result<CentralityReport> {
    let n = hs.dim();
    word_space(n * n, k + 1)?;
    let t = power_sum_element(k, n, hs.c())?;
    let mut failures = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let l = NCPoly::gen(n, i, j);
            let comm = t.mul(&l).sub(&l.mul(&t));
            if !is_zero_mod(&comm, nf)?.is_zero {
                failures.push((i, j));
            }
        }
    }
    Ok(CentralityReport {
        k,
        degree: k + 1,
        failures,
    })
}

/// CH coefficients, highest power of `L` first, as polynomials in the power
/// sums with the given `q`.
pub fn ch_power_sum_coefficients(m: usize, n: usize, q: &Scalar) -> Result<Vec<GenPoly>> {
    let p = generators(m + n + 1);
    let a = a_from_p(&p, q)?;
    ch_coefficients(m, n)
        .iter()
        .map(|c| Ok(specialize_q(c, q)?.substitute(&a[1..])))
        .collect()
}

/// Entrywise result of the CH test.
#[derive(Clone, Debug, PartialEq)]
pub struct ChReport {
    pub m: usize,
    pub n: usize,
    pub degree: usize,
    pub entries_checked: usize,
}

/// `Σ_i c_i(L) L^{m+n-i}` as a matrix over the free algebra.
pub fn ch_matrix(hs: &HeckeSymmetry, m: usize, n: usize) -> Result<NCMatrix> {
    let dim = hs.dim();
    let coefs = ch_power_sum_coefficients(m, n, hs.q())?;
    let l = NCMatrix::generating(dim);
    let mut total = NCMatrix::zeros(dim, dim, dim);
    let mut power = NCMatrix::identity(dim, dim);
    for (i, c) in coefs.iter().enumerate().rev() {
        // i runs from m+n down to 0, power = L^{m+n-i}
        let ci = realize_power_sums(c, dim, hs.c())?;
        total = total.add(&power.left_mul_poly(&ci))?;
        if i > 0 {
            power = power.mul(&l)?;
        }
    }
    Ok(total)
}

/// Checks every entry of the CH matrix in the quotient given by `nf`.
pub fn ch_verify(hs: &HeckeSymmetry, m: usize, n: usize, nf: &dyn NormalForm) -> Result<ChReport> {
    let dim = hs.dim();
    let degree = m * n + m + n;
    word_space(dim * dim, degree)?;
    let total = ch_matrix(hs, m, n)?;
    for r in 0..dim {
        for c in 0..dim {
            let t = is_zero_mod(total.get(r, c), nf)?;
            if !t.is_zero {
                return Err(Error::ChFailed(format!(
                    "entry ({}, {}) leaves {}",
                    r + 1,
                    c + 1,
                    t.residual.display()
                )));
            }
        }
    }
    Ok(ChReport {
        m,
        n,
        degree,
        entries_checked: dim * dim,
    })
}

/// CH coefficients of the shifted matrix `L̂ = L + ℏ/ξ`: entry `t` is the
/// coefficient of `L̂^t` as a polynomial in `p̂_k = Tr_R L̂^k`, `k ≥ 1`, with
/// `Tr_R I = p0` substituted.
pub fn hatted_ch_coefficients(
    m: usize,
    n: usize,
    q: &Scalar,
    h: &Scalar,
    p0: &Scalar,
) -> Result<Vec<GenPoly>> {
    let xi = q - &q.inv()?;
    if xi.is_zero() {
        return Err(Error::ShiftUnavailable);
    }
    let s = h.checked_div(&xi)?;
    let minus_s = -&s;
    let top = m + n;
    let binom = |a: usize, b: usize| -> Scalar {
        let mut acc = Scalar::one();
        for t in 0..b {
            acc = &(&acc * &Scalar::from_int((a - t) as i64)) * &Scalar::ratio(1, (t + 1) as i64);
        }
        acc
    };
    // p_k = Tr_R (L̂ - s)^k = Σ_j C(k,j) (-s)^{k-j} p̂_j
    let p_images: Vec<GenPoly> = (1..=top + 1)
        .map(|k| {
            let mut acc = GenPoly::constant(&(&binom(k, 0) * &minus_s.powu(k as u32)) * p0);
            for j in 1..=k {
                acc = acc
                    .add(&GenPoly::gen(j).scale(&(&binom(k, j) * &minus_s.powu((k - j) as u32))));
            }
            acc
        })
        .collect();
    let coefs = ch_power_sum_coefficients(m, n, q)?;
    let mut out = vec![GenPoly::zero(); top + 1];
    for (i, c) in coefs.iter().enumerate() {
        let chat = c.substitute(&p_images);
        let e = top - i;
        // (L̂ - s)^e = Σ_t C(e,t) (-s)^{e-t} L̂^t
        for (t, slot) in out.iter_mut().enumerate().take(e + 1) {
            *slot = slot.add(&chat.scale(&(&binom(e, t) * &minus_s.powu((e - t) as u32))));
        }
    }
    Ok(out)
}

/// Sets `q = 1` in every coefficient; fails if some coefficient has a pole.
pub fn classical_limit(coefs: &[GenPoly]) -> Result<Vec<GenPoly>> {
    coefs
        .iter()
        .map(|c| c.map_coefficients(|x| x.compose(Symbol::q(), &Scalar::one())))
        .collect()
}

/// `Σ_t ĉ_t(L̂) L̂^t` for coefficients in the power sums of `L̂`.
pub fn matrix_identity(coefs: &[GenPoly], n: usize, c: &Matrix) -> Result<NCMatrix> {
    let l = NCMatrix::generating(n);
    let mut total = NCMatrix::zeros(n, n, n);
    let mut power = NCMatrix::identity(n, n);
    for (t, coef) in coefs.iter().enumerate() {
        if t > 0 {
            power = power.mul(&l)?;
        }
        if coef.is_zero() {
            continue;
        }
        let x = realize_power_sums(coef, n, c)?;
        total = total.add(&power.left_mul_poly(&x))?;
    }
    Ok(total)
}
