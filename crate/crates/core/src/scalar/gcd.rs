//! Multivariate polynomial gcd over the rationals.
//!
//! Recursive content / primitive-part decomposition with a subresultant
//! remainder sequence in a chosen main variable. All divisions performed are
//! exact.

use std::collections::HashMap;

use num_traits::One;

use super::monomial::Monomial;
use super::poly::Poly;
use super::symbols::Symbol;
use super::Rational;

/// Monic greatest common divisor. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a.monic();
    }
    let (ma, ra) = split_monomial_content(a);
    let (mb, rb) = split_monomial_content(b);
    let mono = Poly::monomial(ma.gcd(&mb), One::one());
    if ra.is_constant() || rb.is_constant() {
        return mono;
    }
    mono.mul(&gcd_no_monomial(&ra, &rb)).monic()
}

/// Splits off the largest monomial dividing every term.
fn split_monomial_content(p: &Poly) -> (Monomial, Poly) {
    let mut g = p.terms()[0].0.clone();
    for (m, _) in &p.terms()[1..] {
        if g.is_one() {
            break;
        }
        g = g.gcd(m);
    }
    if g.is_one() {
        return (g, p.clone());
    }
    let rest = Poly::from_terms(
        p.terms()
            .iter()
            .map(|(m, c)| (m.div(&g).unwrap(), c.clone())),
    );
    (g, rest)
}

fn gcd_no_monomial(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a.total_degree() <= b.total_degree() {
        if b.div_exact(a).is_some() {
            return a.monic();
        }
    } else if a.div_exact(b).is_some() {
        return b.monic();
    }
    let va = a.symbols();
    let vb = b.symbols();
    let extra_a: Vec<Symbol> = va.iter().copied().filter(|s| !vb.contains(s)).collect();
    if !extra_a.is_empty() {
        return gcd_with_groups(b, &groups_without(a, &extra_a));
    }
    let extra_b: Vec<Symbol> = vb.iter().copied().filter(|s| !va.contains(s)).collect();
    if !extra_b.is_empty() {
        return gcd_with_groups(a, &groups_without(b, &extra_b));
    }
    // main variable: smallest combined degree keeps the remainder sequence short
    let x = *va
        .iter()
        .min_by_key(|&&s| (a.degree_in(s) as u32 + b.degree_in(s) as u32, s.index()))
        .expect("non-constant polynomial has a symbol");
    let ua = a.coefficients_in(x);
    let ub = b.coefficients_in(x);
    let ca = content_of(&ua);
    let cb = content_of(&ub);
    let c = gcd(&ca, &cb);
    let pa = divide_coeffs(&ua, &ca);
    let pb = divide_coeffs(&ub, &cb);
    let g = subresultant_pp(pa, pb);
    c.mul(&Poly::from_coefficients_in(x, &g)).monic()
}

/// Coefficients of `p` viewed as a polynomial in `vars` over the ring of
/// the remaining symbols.
fn groups_without(p: &Poly, vars: &[Symbol]) -> Vec<Poly> {
    let mut groups: HashMap<Monomial, Vec<(Monomial, Rational)>> = HashMap::new();
    for (m, c) in p.terms() {
        let mut key = Monomial::one();
        let mut rest = m.clone();
        for &x in vars {
            let (e, r) = rest.split_off(x);
            if e > 0 {
                key = key.mul(&Monomial::var(x, e));
            }
            rest = r;
        }
        groups.entry(key).or_default().push((rest, c.clone()));
    }
    let mut out: Vec<Poly> = groups.into_values().map(Poly::from_terms).collect();
    out.sort_by_key(|g| (g.len(), g.total_degree()));
    out
}

/// gcd of `p` with every polynomial in `groups`.
fn gcd_with_groups(p: &Poly, groups: &[Poly]) -> Poly {
    let mut g = p.monic();
    for c in groups {
        g = gcd(&g, c);
        if g.is_constant() {
            return Poly::one();
        }
    }
    g
}

/// Content of `p` viewed as a univariate polynomial in `x`.
pub fn content_in(p: &Poly, x: Symbol) -> Poly {
    content_of(&p.coefficients_in(x))
}

fn content_of(coeffs: &[Poly]) -> Poly {
    let mut nonzero: Vec<&Poly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    nonzero.sort_by_key(|c| (c.len(), c.total_degree()));
    let mut g = Poly::zero();
    for c in nonzero {
        g = gcd(&g, c);
        if g.is_constant() {
            return Poly::one();
        }
    }
    g
}

fn divide_coeffs(coeffs: &[Poly], d: &Poly) -> Vec<Poly> {
    if d.is_one() {
        return coeffs.to_vec();
    }
    coeffs
        .iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

type UPoly = Vec<Poly>;

fn trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn udeg(p: &UPoly) -> usize {
    p.len() - 1
}

/// Pseudo-remainder of `a` by `b`.
fn prem(a: &UPoly, b: &UPoly) -> UPoly {
    let n = udeg(b);
    let lc = b[n].clone();
    let mut r = a.clone();
    trim(&mut r);
    let mut e = (udeg(a) + 1).saturating_sub(n) as u32;
    while !r.is_empty() && udeg(&r) >= n {
        let dr = udeg(&r);
        let lead = r[dr].clone();
        let shift = dr - n;
        for c in r.iter_mut() {
            *c = c.mul(&lc);
        }
        for (i, bc) in b.iter().enumerate() {
            let t = bc.mul(&lead);
            r[i + shift] = r[i + shift].sub(&t);
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lc.pow(e);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

/// Primitive gcd of two primitive univariate polynomials.
fn subresultant_pp(a: UPoly, b: UPoly) -> UPoly {
    let (mut a, mut b) = if udeg(&a) >= udeg(&b) { (a, b) } else { (b, a) };
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let delta = (udeg(&a) - udeg(&b)) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        if udeg(&r) == 0 {
            return vec![Poly::one()];
        }
        let divisor = g.mul(&h.pow(delta));
        let next: UPoly = r
            .iter()
            .map(|c| {
                c.div_exact(&divisor)
                    .expect("subresultant division is exact")
            })
            .collect();
        a = std::mem::replace(&mut b, next);
        g = a[udeg(&a)].clone();
        h = if delta == 0 {
            h
        } else {
            let num = g.pow(delta);
            let den = h.pow(delta - 1);
            num.div_exact(&den).expect("subresultant division is exact")
        };
    }
    let c = content_of(&b);
    divide_coeffs(&b, &c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: Symbol) -> Poly {
        Poly::var(s)
    }

    #[test]
    fn univariate() {
        let q = v(Symbol::q());
        let a = q.pow(2).sub(&Poly::one());
        let b = q.sub(&Poly::one());
        assert_eq!(gcd(&a, &b), b);
        let c = q.pow(2).add(&Poly::one());
        assert!(gcd(&a, &c).is_one());
    }

    #[test]
    fn multivariate_common_factor() {
        let q = v(Symbol::q());
        let m1 = v(Symbol::mu(1));
        let m2 = v(Symbol::mu(2));
        let common = m1.sub(&q.mul(&m2)).add(&Poly::one());
        let f1 = m1.add(&m2).pow(2).sub(&q);
        let f2 = q.pow(3).sub(&m1.mul(&m2)).add(&Poly::from_int(2));
        let a = common.mul(&f1);
        let b = common.mul(&f2).mul(&m1);
        let g = gcd(&a, &b);
        assert_eq!(g, common.monic());
    }

    #[test]
    fn scaling_invariance() {
        let q = v(Symbol::q());
        let a = q
            .scale(&Rational::new(3.into(), 7.into()))
            .add(&Poly::one());
        assert_eq!(
            gcd(&a, &a.scale(&Rational::from_integer(5.into()))),
            a.monic()
        );
    }
}
