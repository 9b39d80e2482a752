//! Gradient matrices of the power sums and the idempotent cutting out the
//! cotangent module of a braided orbit.

use crate::error::{Error, Result};
use crate::hecke::HeckeSymmetry;
use crate::linalg::{EchelonBasis, Matrix};
use crate::rea::{
    filtered_len, filtered_vector, power_sum_element, NCMatrix, NCPoly, NormalForm, ReaQuotient,
    ShiftedQuotient, SuperPbw, Word,
};
use crate::scalar::Scalar;
use crate::symfun::{power_sums_param, EigenvalueProfile};

use super::hankel::{hankel, higher_power_reduction};
use super::regularity::regularity;

/// Columns `a(k)` with `a^i_j(k) = (L^{k-1}C)_j^i` at position `(j, i)` and
/// rows `b(k)` with `b_i^j(k) = (L^{k-1})_i^j` at position `(j, i)`,
/// for `k = 1..=size`.
pub fn gradient_matrices(n: usize, c: &Matrix, size: usize) -> Result<(NCMatrix, NCMatrix)> {
    let l = NCMatrix::generating(n);
    let cm = NCMatrix::from_scalars(n, c);
    let mut a = NCMatrix::zeros(n, n * n, size);
    let mut b = NCMatrix::zeros(n, size, n * n);
    let mut power = NCMatrix::identity(n, n);
    for k in 0..size {
        if k > 0 {
            power = power.mul(&l)?;
        }
        let pc = power.mul(&cm)?;
        for j in 0..n {
            for i in 0..n {
                a.set(j * n + i, k, pc.get(j, i).clone());
                b.set(k, j * n + i, power.get(i, j).clone());
            }
        }
    }
    Ok((a, b))
}

/// Whether `B·A` equals `(Tr_R L^{k+l-2})` word for word.
pub fn gradient_product_is_hankel(a: &NCMatrix, b: &NCMatrix, c: &Matrix) -> Result<bool> {
    let n = a.algebra_dim();
    let ba = b.mul(a)?;
    let size = ba.rows();
    for k in 0..size {
        for l in 0..size {
            if ba.get(k, l) != &power_sum_element(k + l, n, c)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The orbit ideal up to a degree bound: the quotient relations plus the
/// span of `w·(Tr_R L^k - p_k)` over words `w` with `|w| + k ≤ bound`.
/// Left multiples suffice because the power sums are central.
pub struct OrbitIdeal<'a> {
    nf: &'a dyn NormalForm,
    bound: usize,
    basis: EchelonBasis,
}

impl<'a> OrbitIdeal<'a> {
    pub fn new(
        nf: &'a dyn NormalForm,
        generators: &[(usize, NCPoly)],
        bound: usize,
    ) -> Result<Self> {
        let n = nf.algebra_dim();
        let a = n * n;
        let mut basis = EchelonBasis::new(filtered_len(a, bound));
        for (k, g) in generators {
            if *k > bound {
                continue;
            }
            for len in 0..=bound - k {
                let count = a.pow(len as u32);
                for idx in 0..count {
                    let w = NCPoly::monomial(n, Word::decode(idx, len, a), Scalar::one());
                    let x = nf.normal_form(&w.mul(g))?;
                    basis.insert(&filtered_vector(&x, bound));
                }
            }
        }
        Ok(OrbitIdeal { nf, bound, basis })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn contains(&self, x: &NCPoly) -> Result<bool> {
        if x.degree() > self.bound {
            return Err(Error::ResourceLimit(format!(
                "degree {} above the truncation {}",
                x.degree(),
                self.bound
            )));
        }
        let v = filtered_vector(&self.nf.normal_form(x)?, self.bound);
        Ok(self.basis.contains(&v))
    }
}

/// How idempotency of `ē` was established.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// Every entry of `ē² - ē` reduced to zero in the truncated orbit ideal.
    Entrywise { degree: usize, entries: usize },
    /// Too large for the entrywise test: only the word identity `B·A = H`
    /// and the power-sum recurrence were checked.
    Structural,
}

#[derive(Clone, Debug)]
pub struct CotangentData {
    pub a: NCMatrix,
    pub b: NCMatrix,
    pub h: Matrix,
    pub ebar: NCMatrix,
    pub e: NCMatrix,
    pub certificate: Certificate,
    /// Named sub-checks and their outcomes.
    pub checks: Vec<(String, bool)>,
}

/// Default bound on the filtered word space for the entrywise test.
pub const ENTRYWISE_CAP: usize = 20_000;

/// Builds `ē = A H^{-1} B` and `e = I - ē` and checks idempotency modulo
/// the orbit ideal in the quotient given by `nf`.
pub fn cotangent_with(
    hs: &HeckeSymmetry,
    profile: &EigenvalueProfile,
    nf: &dyn NormalForm,
    cap: usize,
) -> Result<CotangentData> {
    let verdict = regularity(profile);
    if !verdict.regular {
        let v: Vec<String> = verdict
            .violations()
            .map(|c| format!("{} ({}, {})", c.kind, c.i, c.j))
            .collect();
        return Err(Error::ExceptionalProfile(v.join(", ")));
    }
    let n = hs.dim();
    let size = profile.m() + profile.n();
    let c = hs.c();
    let p = power_sums_param(size, profile)?;
    let tr_i = hs.rtrace(&Matrix::identity(n))?;
    if tr_i != p[0] {
        return Err(Error::IdentityFailed(format!(
            "Tr_R I = {tr_i} but the profile gives p_0 = {}",
            p[0]
        )));
    }
    let h = hankel(profile)?;
    let hinv = h
        .inverse()
        .map_err(|_| Error::ExceptionalProfile("singular Hankel matrix".into()))?;
    let (a, b) = gradient_matrices(n, c, size)?;
    let mut checks = vec![(
        "B*A = Hankel of power sums".to_string(),
        gradient_product_is_hankel(&a, &b, c)?,
    )];
    if profile.h.is_none() && size >= 2 {
        let ok = higher_power_reduction(profile, 2 * size - 2).is_ok();
        checks.push(("power-sum recurrence".to_string(), ok));
    }
    let ebar = a.mul_scalars(&hinv)?.mul(&b)?;
    let e = NCMatrix::identity(n, n * n).sub(&ebar)?;
    let degree = 4 * (size - 1);
    let certificate = if filtered_len(n * n, degree) <= cap {
        let gens: Vec<(usize, NCPoly)> = (1..=size)
            .map(|k| {
                let t = power_sum_element(k, n, c)?;
                Ok((k, t.sub(&NCPoly::constant(n, p[k].clone()))))
            })
            .collect::<Result<_>>()?;
        let ideal = OrbitIdeal::new(nf, &gens, degree)?;
        for (name, x) in [("ebar^2 = ebar", &ebar), ("e^2 = e", &e)] {
            let defect = x.mul(x)?.sub(x)?;
            let mut ok = true;
            for entry in defect.entries() {
                if !ideal.contains(entry)? {
                    ok = false;
                    break;
                }
            }
            checks.push((name.to_string(), ok));
        }
        Certificate::Entrywise {
            degree,
            entries: n.pow(4),
        }
    } else {
        Certificate::Structural
    };
    if let Some((name, _)) = checks.iter().find(|(_, ok)| !ok) {
        return Err(Error::IdentityFailed(name.clone()));
    }
    Ok(CotangentData {
        a,
        b,
        h,
        ebar,
        e,
        certificate,
        checks,
    })
}

/// [`cotangent_with`] in the reflection equation algebra.
pub fn cotangent(
    hs: &HeckeSymmetry,
    profile: &EigenvalueProfile,
    cap: usize,
) -> Result<CotangentData> {
    if profile.h.is_some() {
        return nc_orbit(hs, profile, cap);
    }
    let rea = ReaQuotient::new(hs)?;
    cotangent_with(hs, profile, &rea, cap)
}

/// The same construction over the modified algebra with hatted power sums;
/// reduction goes through the shift for `q ≠ 1` and through PBW
/// straightening at `q = 1`.
pub fn nc_orbit(
    hs: &HeckeSymmetry,
    profile: &EigenvalueProfile,
    cap: usize,
) -> Result<CotangentData> {
    let h = profile
        .h
        .clone()
        .ok_or_else(|| Error::BadDeformationParameter("profile has no h".into()))?;
    if hs.q().is_one() {
        let pbw = SuperPbw::new(hs, &h)?;
        cotangent_with(hs, profile, &pbw, cap)
    } else {
        let shifted = ShiftedQuotient::new(hs, &h)?;
        cotangent_with(hs, profile, &shifted, cap)
    }
}
