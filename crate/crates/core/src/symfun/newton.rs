//! Quantum Newton and Wronski relations between the elementary (`a_k`),
//! complete (`s_k`) and power-sum (`p_k`) families.
//!
//! Sequences are indexed from 0 with `a_0 = s_0 = 1`. Entry 0 of a power-sum
//! sequence is ignored on input and set to 1 on output.

use crate::error::{Error, Result};
use crate::scalar::{qnumber_at, Scalar};

use super::genpoly::{GenPoly, Ring};

/// `k_q`, refusing a zero value.
pub fn nonzero_qnumber(k: usize, q: &Scalar) -> Result<Scalar> {
    let v = qnumber_at(k as u32, q);
    if v.is_zero() {
        return Err(Error::BadDeformationParameter(format!(
            "{k}_q vanishes at q = {q}"
        )));
    }
    Ok(v)
}

fn signed_power(base: &Scalar, r: usize) -> Scalar {
    base.powu(r as u32)
}

/// Solves `(-1)^k k_q a_k + Σ_{r<k} (-q)^r a_r p_{k-r} = 0` for `a_1..a_K`.
pub fn a_from_p<R: Ring>(p: &[R], q: &Scalar) -> Result<Vec<R>> {
    let big_k = p.len().saturating_sub(1);
    let mut a = vec![R::one()];
    let minus_q = -q;
    for k in 1..=big_k {
        let mut acc = R::zero();
        for r in 0..k {
            acc = acc.add(&a[r].mul(&p[k - r]).scale(&signed_power(&minus_q, r)));
        }
        let kq = nonzero_qnumber(k, q)?;
        let sign = if k % 2 == 0 { -1 } else { 1 };
        a.push(acc.scale(&Scalar::from_int(sign).checked_div(&kq)?));
    }
    Ok(a)
}

/// Inverse of [`a_from_p`].
pub fn p_from_a<R: Ring>(a: &[R], q: &Scalar) -> Vec<R> {
    let big_k = a.len().saturating_sub(1);
    let mut p = vec![R::one()];
    let minus_q = -q;
    for k in 1..=big_k {
        let kq = qnumber_at(k as u32, q);
        let sign = if k % 2 == 0 { -1 } else { 1 };
        // r = 0 term is p_k itself
        let mut acc = a[k].scale(&(&Scalar::from_int(sign) * &kq));
        for r in 1..k {
            acc = acc.sub(&a[r].mul(&p[k - r]).scale(&signed_power(&minus_q, r)));
        }
        p.push(acc);
    }
    p
}

/// Solves `k_q s_k - Σ_{r<k} q^{-r} s_r p_{k-r} = 0` for `s_1..s_K`.
pub fn s_from_p<R: Ring>(p: &[R], q: &Scalar) -> Result<Vec<R>> {
    let big_k = p.len().saturating_sub(1);
    let qinv = q.inv()?;
    let mut s = vec![R::one()];
    for k in 1..=big_k {
        let mut acc = R::zero();
        for r in 0..k {
            acc = acc.add(&s[r].mul(&p[k - r]).scale(&qinv.powu(r as u32)));
        }
        let kq = nonzero_qnumber(k, q)?;
        s.push(acc.scale(&kq.inv()?));
    }
    Ok(s)
}

/// Wronski relation `Σ_{r=0}^k (-1)^r a_r s_{k-r} = 0` solved for `s_k`.
/// The relation is symmetric, so the same map sends `s` to `a`.
pub fn wronski<R: Ring>(a: &[R]) -> Vec<R> {
    let mut s = vec![R::one()];
    for k in 1..a.len() {
        let mut acc = R::zero();
        for r in 1..=k {
            let t = a[r].mul(&s[k - r]);
            acc = if r % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
        }
        s.push(acc);
    }
    s
}

/// `[1, x_1, ..., x_K]` as generator polynomials.
pub fn generators(big_k: usize) -> Vec<GenPoly> {
    std::iter::once(GenPoly::one())
        .chain((1..=big_k).map(GenPoly::gen))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse;

    #[test]
    fn first_terms() {
        let p = generators(3);
        let a = a_from_p(&p, &Scalar::q()).unwrap();
        assert_eq!(a[1], GenPoly::gen(1));
        // a_2 = (q p_1^2 - p_2) / 2_q
        let two_q = parse("q + 1/q").unwrap();
        let want = GenPoly::gen(1)
            .pow(2)
            .scale(&Scalar::q())
            .sub(&GenPoly::gen(2))
            .scale(&two_q.inv().unwrap());
        assert_eq!(a[2], want);
    }

    /// Classical Newton identities at q = 1, written out by hand:
    /// e1 = p1, e2 = (p1^2 - p2)/2, e3 = (p1^3 - 3 p1 p2 + 2 p3)/6.
    #[test]
    fn classical_limit() {
        let p = generators(3);
        let a = a_from_p(&p, &Scalar::one()).unwrap();
        let (p1, p2, p3) = (GenPoly::gen(1), GenPoly::gen(2), GenPoly::gen(3));
        let half = Scalar::ratio(1, 2);
        assert_eq!(a[2], p1.pow(2).sub(&p2).scale(&half));
        let e3 = p1
            .pow(3)
            .sub(&p1.mul(&p2).scale(&Scalar::from_int(3)))
            .add(&p3.scale(&Scalar::from_int(2)))
            .scale(&Scalar::ratio(1, 6));
        assert_eq!(a[3], e3);
    }

    #[test]
    fn roundtrip_and_route_agreement() {
        let q = Scalar::ratio(7, 5);
        let p: Vec<Scalar> = [1, 3, -2, 5, 7]
            .iter()
            .map(|&x| Scalar::from_int(x))
            .collect();
        let a = a_from_p(&p, &q).unwrap();
        let back = p_from_a(&a, &q);
        assert_eq!(&back[1..], &p[1..]);
        let s_newton = s_from_p(&p, &q).unwrap();
        let s_wronski = wronski(&a);
        assert_eq!(s_newton, s_wronski);
        assert_eq!(wronski(&s_wronski), a);
    }

    #[test]
    fn wronski_degree_two() {
        let a = generators(2);
        let s = wronski(&a);
        assert_eq!(s[1], GenPoly::gen(1));
        assert_eq!(s[2], GenPoly::gen(1).pow(2).sub(&GenPoly::gen(2)));
    }
}
