//! Randomized identity testing with exact arithmetic.
//!
//! Points are drawn from a `ChaCha8Rng` seeded with the caller's seed. Each
//! symbol receives `n/d` with `n, d` uniform in `[1, 2^31]`. Symbols are
//! visited in storage order, so a seed fixes the point sequence.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Scalar;
use super::symbols::Symbol;
use super::Rational;
use crate::error::{Error, Result};

const MAX_REDRAWS: usize = 10;
const RANGE: u64 = 1 << 31;

/// Outcome of [`probably_equal`].
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityVerdict {
    pub equal: bool,
    /// Points at which both sides were evaluated.
    pub trials: usize,
    /// Upper bound on the probability that `equal` is a false positive.
    /// Zero when the verdict is certain.
    pub error_bound: f64,
}

/// Draws a random rational point for the given symbols.
pub fn random_point(symbols: &[Symbol], rng: &mut ChaCha8Rng) -> Vec<(Symbol, Rational)> {
    symbols
        .iter()
        .map(|&s| {
            let n: u64 = rng.gen_range(1..=RANGE);
            let d: u64 = rng.gen_range(1..=RANGE);
            (s, Rational::new(BigInt::from(n), BigInt::from(d)))
        })
        .collect()
}

/// Tests `x == y` by evaluation at `trials` random points.
///
/// A `false` verdict is certain. A `true` verdict is wrong with probability
/// at most `(deg / 2^31)^trials` where `deg` is the total degree of the
/// numerator of `x - y` after clearing denominators.
pub fn probably_equal(x: &Scalar, y: &Scalar, trials: usize, seed: u64) -> Result<IdentityVerdict> {
    assert!(trials >= 1, "at least one trial");
    if x == y {
        return Ok(IdentityVerdict {
            equal: true,
            trials: 1,
            error_bound: 0.0,
        });
    }
    let mut symbols = x.symbols();
    for s in y.symbols() {
        if !symbols.contains(&s) {
            symbols.push(s);
        }
    }
    symbols.sort();
    let deg = x.numerator().total_degree()
        + y.denominator().total_degree()
        + y.numerator().total_degree()
        + x.denominator().total_degree();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < trials {
        let mut redraws = 0;
        let (a, b) = loop {
            let pt = random_point(&symbols, &mut rng);
            match (x.evaluate(&pt), y.evaluate(&pt)) {
                (Ok(a), Ok(b)) => break (a, b),
                (Err(Error::PoleAtPoint), _) | (_, Err(Error::PoleAtPoint)) => {
                    redraws += 1;
                    if redraws > MAX_REDRAWS {
                        return Err(Error::ResourceLimit(
                            "too many pole redraws in identity test".into(),
                        ));
                    }
                }
                (Err(e), _) | (_, Err(e)) => return Err(e),
            }
        };
        done += 1;
        if a != b {
            return Ok(IdentityVerdict {
                equal: false,
                trials: done,
                error_bound: 0.0,
            });
        }
    }
    let per_trial = (deg as f64 / RANGE as f64).min(1.0);
    Ok(IdentityVerdict {
        equal: true,
        trials,
        error_bound: per_trial.powi(trials as i32),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse;

    #[test]
    fn identical_needs_one_trial() {
        let x = parse("q/(q+mu1)").unwrap();
        let v = probably_equal(&x, &x, 5, 1).unwrap();
        assert!(v.equal);
        assert_eq!(v.trials, 1);
    }

    #[test]
    fn inequality_found_at_first_trial() {
        let a = parse("q^2").unwrap();
        let b = parse("q^2+1").unwrap();
        let v = probably_equal(&a, &b, 3, 7).unwrap();
        assert!(!v.equal);
        assert_eq!(v.trials, 1);
    }

    #[test]
    fn deterministic_in_seed() {
        let mut r1 = ChaCha8Rng::seed_from_u64(42);
        let mut r2 = ChaCha8Rng::seed_from_u64(42);
        let s = [Symbol::q(), Symbol::mu(1)];
        assert_eq!(random_point(&s, &mut r1), random_point(&s, &mut r2));
    }
}
