use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{random_point, Scalar, Symbol};
use crate::symfun::{
    ch_coefficients, power_sum_param, power_sums_param, EigenvalueProfile, SchurEvaluator,
};

use super::regularity::regularity;

/// `H_{kl} = p_{k+l-2}` for `k, l = 1..m+n`, with the parametrized `p_0`.
pub fn hankel(profile: &EigenvalueProfile) -> Result<Matrix> {
    let size = profile.m() + profile.n();
    let p = power_sums_param(2 * size.saturating_sub(1), profile)?;
    Ok(Matrix::from_fn(size, size, |k, l| p[k + l].clone()))
}

/// `Π d_i Π d'_j (Π_{i<j}(μ_i-μ_j) Π_{i,j}(μ_i-ν_j) Π_{i<j}(ν_i-ν_j))^2`.
pub fn hankel_det_formula(profile: &EigenvalueProfile) -> Result<Scalar> {
    let dims = crate::symfun::quantum_dims(profile)?;
    let mut acc = Scalar::one();
    for d in dims.d.iter().chain(dims.dd.iter()) {
        acc *= d;
    }
    let eig: Vec<&Scalar> = profile.mu.iter().chain(profile.nu.iter()).collect();
    let mut vdm = Scalar::one();
    for i in 0..eig.len() {
        for j in i + 1..eig.len() {
            vdm *= &(eig[i] - eig[j]);
        }
    }
    Ok(&acc * &(&vdm * &vdm))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Symbolic,
    Sampled { seed: u64, trials: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct HankelCheck {
    pub m: usize,
    pub n: usize,
    pub strategy: Strategy,
    pub points_checked: usize,
}

/// Verifies the factorization of `det H`, either as an identity of
/// rational functions in `q, μ, ν` or at random rational points.
pub fn hankel_det_check(m: usize, n: usize, strategy: Strategy) -> Result<HankelCheck> {
    match strategy {
        Strategy::Symbolic => {
            let p = EigenvalueProfile::symbolic(m, n);
            let det = hankel(&p)?.det()?;
            let want = hankel_det_formula(&p)?;
            if det != want {
                return Err(Error::IdentityFailed(format!(
                    "det H for ({m}|{n}): {}",
                    &det - &want
                )));
            }
            Ok(HankelCheck {
                m,
                n,
                strategy,
                points_checked: 0,
            })
        }
        Strategy::Sampled { seed, trials } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut symbols = vec![Symbol::q()];
            symbols.extend((1..=m).map(Symbol::mu));
            symbols.extend((1..=n).map(Symbol::nu));
            let mut checked = 0;
            let mut attempts = 0;
            while checked < trials {
                attempts += 1;
                if attempts > 10 * trials {
                    return Err(Error::ResourceLimit("no regular sample point found".into()));
                }
                let point: Vec<Scalar> = random_point(&symbols, &mut rng)
                    .into_iter()
                    .map(|(_, r)| Scalar::from_rational(r))
                    .collect();
                let p = EigenvalueProfile::numeric(
                    point[1..=m].to_vec(),
                    point[m + 1..].to_vec(),
                    point[0].clone(),
                );
                if !regularity(&p).regular {
                    continue;
                }
                let det = hankel(&p)?.det()?;
                let want = hankel_det_formula(&p)?;
                if det != want {
                    let at: Vec<String> = point.iter().map(|x| x.to_string()).collect();
                    return Err(Error::IdentityFailed(format!(
                        "det H for ({m}|{n}) at (q, mu, nu) = ({})",
                        at.join(", ")
                    )));
                }
                checked += 1;
            }
            Ok(HankelCheck {
                m,
                n,
                strategy,
                points_checked: checked,
            })
        }
    }
}

/// `p_{m+n+1..=K}` from the CH recurrence `Σ_i c_i p_{k-i} = 0` seeded
/// with the parametrized `p_1..p_{m+n}`, each compared with the direct
/// parametrization.
pub fn higher_power_reduction(profile: &EigenvalueProfile, big_k: usize) -> Result<Vec<Scalar>> {
    let (m, n) = (profile.m(), profile.n());
    let top = m + n;
    let ev = SchurEvaluator::new(top + 1, profile)?;
    let c: Vec<Scalar> = ch_coefficients(m, n)
        .iter()
        .map(|x| ev.eval(x))
        .collect::<Result<_>>()?;
    if c[0].is_zero() {
        return Err(Error::ExceptionalProfile(
            "leading CH coefficient vanishes".into(),
        ));
    }
    let mut p = power_sums_param(top, profile)?;
    let mut out = Vec::new();
    for k in top + 1..=big_k {
        let mut acc = Scalar::zero();
        for i in 1..=top {
            acc += &(&c[i] * &p[k - i]);
        }
        let pk = (-&acc).checked_div(&c[0])?;
        if pk != power_sum_param(k, profile)? {
            return Err(Error::RecurrenceMismatch(k));
        }
        p.push(pk.clone());
        out.push(pk);
    }
    Ok(out)
}
