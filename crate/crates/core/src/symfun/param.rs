//! Eigenvalue parametrizations of power sums and Schur functions.

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Symbol};

use super::ch::jacobi_trudi;
use super::genpoly::GenPoly;
use super::newton::a_from_p;
use super::partition::{shape_label, Partition};

/// Even and odd eigenvalues together with the deformation parameters.
///
/// With `h = None` the eigenvalues are those of the REA generating matrix.
/// With `h = Some(ℏ)` they are the hatted eigenvalues of the modified
/// algebra and the hatted quantum dimensions are used.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenvalueProfile {
    pub mu: Vec<Scalar>,
    pub nu: Vec<Scalar>,
    pub q: Scalar,
    pub h: Option<Scalar>,
}

/// Quantum dimensions `d_1..d_m` and `d'_1..d'_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumDims {
    pub d: Vec<Scalar>,
    pub dd: Vec<Scalar>,
}

impl EigenvalueProfile {
    /// `μ_i = mu{i}`, `ν_j = nu{j}`, symbolic `q`.
    pub fn symbolic(m: usize, n: usize) -> Self {
        EigenvalueProfile {
            mu: (1..=m).map(|i| Scalar::var(Symbol::mu(i))).collect(),
            nu: (1..=n).map(|j| Scalar::var(Symbol::nu(j))).collect(),
            q: Scalar::q(),
            h: None,
        }
    }

    /// Symbolic hatted eigenvalues with symbolic `q` and `ℏ = h`.
    pub fn symbolic_hatted(m: usize, n: usize) -> Self {
        EigenvalueProfile {
            h: Some(Scalar::h()),
            ..Self::symbolic(m, n)
        }
    }

    pub fn numeric(mu: Vec<Scalar>, nu: Vec<Scalar>, q: Scalar) -> Self {
        EigenvalueProfile { mu, nu, q, h: None }
    }

    pub fn with_q(mut self, q: Scalar) -> Self {
        self.q = q;
        self
    }

    pub fn with_h(mut self, h: Option<Scalar>) -> Self {
        self.h = h;
        self
    }

    pub fn m(&self) -> usize {
        self.mu.len()
    }

    pub fn n(&self) -> usize {
        self.nu.len()
    }

    pub fn is_hatted(&self) -> bool {
        self.h.is_some()
    }

    /// Coincident eigenvalues make the quantum dimensions meaningless.
    pub fn check_nondegenerate(&self) -> Result<()> {
        let all: Vec<(&str, usize, &Scalar)> = self
            .mu
            .iter()
            .enumerate()
            .map(|(i, x)| ("mu", i + 1, x))
            .chain(self.nu.iter().enumerate().map(|(j, x)| ("nu", j + 1, x)))
            .collect();
        for (a, (na, ia, x)) in all.iter().enumerate() {
            for (nb, ib, y) in &all[a + 1..] {
                if (*x - *y).is_zero() {
                    return Err(Error::DegenerateProfile(format!("{na}{ia} = {nb}{ib}")));
                }
            }
        }
        if self.q.is_zero() {
            return Err(Error::BadDeformationParameter("q = 0".into()));
        }
        Ok(())
    }

    /// `(numerator, denominator)` of every quantum dimension, even ones first.
    fn dim_factors(&self) -> Result<Vec<(Scalar, Scalar)>> {
        self.check_nondegenerate()?;
        let q = &self.q;
        let qinv = q.inv()?;
        let q2 = q * q;
        let qm2 = &qinv * &qinv;
        let zero = Scalar::zero();
        let h = self.h.as_ref().unwrap_or(&zero);
        // shifts: -q^{-1}ℏ in the q^{-2} factors, +qℏ in the q^2 factors
        let down = &qinv * h;
        let up = q * h;
        let mut out = Vec::new();
        for (i, mi) in self.mu.iter().enumerate() {
            let mut num = qinv.clone();
            let mut den = Scalar::one();
            for (p, mp) in self.mu.iter().enumerate() {
                if p != i {
                    num *= &(&(mi - &(&qm2 * mp)) - &down);
                    den *= &(mi - mp);
                }
            }
            for nj in &self.nu {
                num *= &(&(mi - &(&q2 * nj)) + &up);
                den *= &(mi - nj);
            }
            out.push((num, den));
        }
        for (j, nj) in self.nu.iter().enumerate() {
            let mut num = -q;
            let mut den = Scalar::one();
            for mi in &self.mu {
                num *= &(&(nj - &(&qm2 * mi)) - &down);
                den *= &(nj - mi);
            }
            for (p, np) in self.nu.iter().enumerate() {
                if p != j {
                    num *= &(&(nj - &(&q2 * np)) + &up);
                    den *= &(nj - np);
                }
            }
            out.push((num, den));
        }
        Ok(out)
    }

    fn eigenvalues(&self) -> impl Iterator<Item = &Scalar> {
        self.mu.iter().chain(self.nu.iter())
    }
}

/// Divides by `d`, trying exact polynomial division of the numerator first.
fn div_exact_or_general(x: &Scalar, d: &Scalar) -> Result<Scalar> {
    if d.denominator().is_one() {
        if let Some(quot) = x.numerator().div_exact(&d.numerator()) {
            return Scalar::from_fraction(quot, x.denominator());
        }
    }
    x.checked_div(d)
}

pub fn quantum_dims(profile: &EigenvalueProfile) -> Result<QuantumDims> {
    let factors = profile.dim_factors()?;
    let m = profile.m();
    let dims: Vec<Scalar> = factors
        .iter()
        .map(|(num, den)| num.checked_div(den).map_err(|_| Error::PoleAtPoint))
        .collect::<Result<_>>()?;
    Ok(QuantumDims {
        d: dims[..m].to_vec(),
        dd: dims[m..].to_vec(),
    })
}

/// `p_k = Σ d_i μ_i^k + Σ d'_j ν_j^k` for `k = 0..=kmax`, summed over a
/// common denominator so that only one division per `k` is needed.
pub fn power_sums_param(kmax: usize, profile: &EigenvalueProfile) -> Result<Vec<Scalar>> {
    let factors = profile.dim_factors()?;
    let mut common = Scalar::one();
    for (_, den) in &factors {
        if !den.is_constant() {
            // the product of all denominators is divisible by each one
            common *= den;
        } else if den.is_zero() {
            return Err(Error::PoleAtPoint);
        }
    }
    let weights: Vec<Scalar> = factors
        .iter()
        .map(|(num, den)| {
            if den.is_constant() {
                Ok(&(num * &common) * &den.inv()?)
            } else {
                Ok(num * &div_exact_or_general(&common, den)?)
            }
        })
        .collect::<Result<_>>()?;
    let eig: Vec<&Scalar> = profile.eigenvalues().collect();
    let mut powers: Vec<Scalar> = vec![Scalar::one(); eig.len()];
    let mut out = Vec::with_capacity(kmax + 1);
    for _ in 0..=kmax {
        let mut total = Scalar::zero();
        for (w, pw) in weights.iter().zip(&powers) {
            total += &(w * pw);
        }
        out.push(div_exact_or_general(&total, &common).map_err(|_| Error::PoleAtPoint)?);
        for (pw, e) in powers.iter_mut().zip(&eig) {
            *pw = &*pw * *e;
        }
    }
    Ok(out)
}

pub fn power_sum_param(k: usize, profile: &EigenvalueProfile) -> Result<Scalar> {
    Ok(power_sums_param(k, profile)?.pop().expect("k + 1 values"))
}

/// `s_{[m|n]} = Π_i Π_j (q^{-1} μ_i - q ν_j)`.
pub fn rect_schur_param(profile: &EigenvalueProfile) -> Result<Scalar> {
    let q = &profile.q;
    let qinv = q.inv()?;
    let mut acc = Scalar::one();
    for mi in &profile.mu {
        for nj in &profile.nu {
            acc *= &(&(&qinv * mi) - &(q * nj));
        }
    }
    Ok(acc)
}

/// Substitutes the profile's `q` into every coefficient.
pub fn specialize_q(expr: &GenPoly, q: &Scalar) -> Result<GenPoly> {
    if q == &Scalar::q() {
        return Ok(expr.clone());
    }
    expr.map_coefficients(|c| c.compose(Symbol::q(), q))
}

/// Evaluates an expression in the elementary generators on the profile:
/// power sums are parametrized, converted to `a_k` by the quantum Newton
/// relations and substituted.
pub fn evaluate_elementary(expr: &GenPoly, profile: &EigenvalueProfile) -> Result<Scalar> {
    let big_k = expr.max_generator();
    let mut p = power_sums_param(big_k, profile)?;
    p[0] = Scalar::one();
    let a = a_from_p(&p, &profile.q)?;
    let expr = specialize_q(expr, &profile.q)?;
    Ok(expr.substitute(&a[1..]))
}

/// `s_λ` on the profile via Jacobi-Trudi and the power-sum route.
pub fn schur_param(lambda: &Partition, profile: &EigenvalueProfile) -> Result<Scalar> {
    evaluate_elementary(&jacobi_trudi(lambda), profile)
}

/// Evaluates many Schur functions on one profile, sharing the `a_k`.
pub struct SchurEvaluator {
    a: Vec<Scalar>,
    q: Scalar,
}

impl SchurEvaluator {
    /// Prepares `a_1..a_K` on the profile.
    pub fn new(big_k: usize, profile: &EigenvalueProfile) -> Result<Self> {
        let mut p = power_sums_param(big_k, profile)?;
        p[0] = Scalar::one();
        Ok(SchurEvaluator {
            a: a_from_p(&p, &profile.q)?,
            q: profile.q.clone(),
        })
    }

    pub fn elementary(&self) -> &[Scalar] {
        &self.a
    }

    pub fn eval(&self, expr: &GenPoly) -> Result<Scalar> {
        let need = expr.max_generator();
        if need >= self.a.len() {
            return Err(Error::IndexOutOfRange {
                index: need,
                max: self.a.len() - 1,
            });
        }
        Ok(specialize_q(expr, &self.q)?.substitute(&self.a[1..]))
    }

    pub fn schur(&self, lambda: &Partition) -> Result<Scalar> {
        self.eval(&jacobi_trudi(lambda))
    }
}

/// Elementary symmetric polynomials `e_0..e_n` of the given values.
pub fn elementary_of(values: &[Scalar]) -> Vec<Scalar> {
    let mut e = vec![Scalar::one()];
    for v in values {
        let mut next = e.clone();
        next.push(Scalar::zero());
        for k in 1..next.len() {
            next[k] = &e.get(k).cloned().unwrap_or_else(Scalar::zero) + &(v * &e[k - 1]);
        }
        e = next;
    }
    e
}

/// Vieta relations read off the factorized CH identity, as
/// `(label, lhs - rhs)` pairs; every residual vanishes on a valid profile:
/// `q^k s_{[m|n]^k} = e_k(μ) s_{[m|n]}` and
/// `(-q)^{-r} s_{[m|n]_r} = e_r(ν) s_{[m|n]}`.
pub fn vieta_residuals(profile: &EigenvalueProfile) -> Result<Vec<(String, Scalar)>> {
    let (m, n) = (profile.m(), profile.n());
    let ev = SchurEvaluator::new(m + n + 1, profile)?;
    let rect = ev.schur(&Partition::rect(m, n))?;
    let rect_direct = rect_schur_param(profile)?;
    let mut out = vec![(shape_label(m, n, 0, 0), &rect - &rect_direct)];
    let e_mu = elementary_of(&profile.mu);
    let e_nu = elementary_of(&profile.nu);
    let q = &profile.q;
    for k in 1..=m {
        let s = ev.schur(&Partition::upper(m, n, k))?;
        let lhs = &q.powu(k as u32) * &s;
        out.push((shape_label(m, n, k, 0), &lhs - &(&e_mu[k] * &rect)));
    }
    let minus_qinv = -&q.inv()?;
    for r in 1..=n {
        let s = ev.schur(&Partition::lower(m, n, r))?;
        let lhs = &minus_qinv.powu(r as u32) * &s;
        out.push((shape_label(m, n, 0, r), &lhs - &(&e_nu[r] * &rect)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse;

    fn s(t: &str) -> Scalar {
        parse(t).unwrap()
    }

    #[test]
    fn classical_dims() {
        let p = EigenvalueProfile::symbolic(2, 1).with_q(Scalar::one());
        let qd = quantum_dims(&p).unwrap();
        assert!(qd.d.iter().all(Scalar::is_one));
        assert!(qd.dd.iter().all(|x| x == &Scalar::from_int(-1)));
        let p3 = power_sum_param(3, &p).unwrap();
        assert_eq!(p3, s("mu1^3 + mu2^3 - nu1^3"));
    }

    #[test]
    fn one_zero() {
        let p = EigenvalueProfile::symbolic(1, 0);
        assert_eq!(quantum_dims(&p).unwrap().d, vec![s("1/q")]);
        assert_eq!(power_sum_param(4, &p).unwrap(), s("mu1^4/q"));
    }

    #[test]
    fn one_one_dims() {
        let p = EigenvalueProfile::symbolic(1, 1);
        let qd = quantum_dims(&p).unwrap();
        assert_eq!(qd.d[0], s("(mu1 - q^2*nu1)/(q*(mu1 - nu1))"));
        assert_eq!(qd.dd[0], s("-q*(nu1 - mu1/q^2)/(nu1 - mu1)"));
        // p_0 = 0 in the (1|1) case; s_[1|1] = a_1 = p_1 = q^{-1}mu1 - q nu1
        assert!(power_sum_param(0, &p).unwrap().is_zero());
        assert_eq!(
            power_sum_param(1, &p).unwrap(),
            rect_schur_param(&p).unwrap()
        );
    }

    #[test]
    fn degenerate_profiles() {
        let p = EigenvalueProfile::numeric(
            vec![Scalar::one(), Scalar::one()],
            vec![],
            Scalar::from_int(2),
        );
        assert!(matches!(quantum_dims(&p), Err(Error::DegenerateProfile(_))));
    }

    #[test]
    fn hatted_dims_are_shifted_dims() {
        // d̂_i(μ + ℏ/ξ) = d_i(μ)
        let plain = EigenvalueProfile::symbolic(2, 1);
        let shift = s("h*q/(q^2 - 1)");
        let hatted = EigenvalueProfile {
            mu: plain.mu.iter().map(|x| x + &shift).collect(),
            nu: plain.nu.iter().map(|x| x + &shift).collect(),
            q: Scalar::q(),
            h: Some(Scalar::h()),
        };
        assert_eq!(
            quantum_dims(&hatted).unwrap(),
            quantum_dims(&plain).unwrap()
        );
    }

    #[test]
    fn rectangle_schur_matches_power_sum_route() {
        for (m, n) in [(1, 1), (2, 1)] {
            let p = EigenvalueProfile::symbolic(m, n);
            let via_jt = schur_param(&Partition::rect(m, n), &p).unwrap();
            assert_eq!(via_jt, rect_schur_param(&p).unwrap());
        }
    }

    #[test]
    fn vieta_two_one() {
        let p = EigenvalueProfile::symbolic(2, 1);
        for (label, r) in vieta_residuals(&p).unwrap() {
            assert!(r.is_zero(), "{label}: {r}");
        }
    }

    #[test]
    fn vieta_three_two() {
        let p = EigenvalueProfile::symbolic(3, 2);
        for (label, r) in vieta_residuals(&p).unwrap() {
            assert!(r.is_zero(), "{label}: {r}");
        }
    }

    #[test]
    fn ch_recurrence_on_power_sums() {
        use crate::symfun::ch::ch_coefficients;
        for (m, n) in [(2, 0), (1, 1), (2, 1)] {
            let p = EigenvalueProfile::symbolic(m, n);
            let ev = SchurEvaluator::new(m + n + 1, &p).unwrap();
            let c: Vec<Scalar> = ch_coefficients(m, n)
                .iter()
                .map(|x| ev.eval(x).unwrap())
                .collect();
            let ps = power_sums_param(m + n + 4, &p).unwrap();
            for k in 0..=4 {
                let mut total = Scalar::zero();
                for (i, ci) in c.iter().enumerate() {
                    total += &(ci * &ps[m + n - i + k]);
                }
                assert!(total.is_zero(), "({m}|{n}) k={k}: {total}");
            }
        }
    }

    #[test]
    fn hatted_classical_limit() {
        let p = EigenvalueProfile::symbolic_hatted(2, 1).with_q(Scalar::one());
        let qd = quantum_dims(&p).unwrap();
        assert_eq!(
            qd.d[0],
            s("(mu1 - mu2 - h)*(mu1 - nu1 + h)/((mu1 - mu2)*(mu1 - nu1))")
        );
        assert_eq!(
            qd.dd[0],
            s("-(nu1 - mu1 - h)*(nu1 - mu2 - h)/((nu1 - mu1)*(nu1 - mu2))")
        );
        for pk in power_sums_param(4, &p).unwrap() {
            assert!(pk.denominator().is_one(), "{pk}");
        }
    }
}
