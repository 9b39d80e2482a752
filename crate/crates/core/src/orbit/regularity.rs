use std::fmt;

use crate::scalar::Scalar;
use crate::symfun::EigenvalueProfile;

/// Which pair of eigenvalues a constraint relates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstraintKind {
    EvenEven,
    OddOdd,
    EvenOdd,
    /// Pairwise distinctness, needed for pole-free quantum dimensions.
    Coincident,
}

impl fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstraintKind::EvenEven => "even-even",
            ConstraintKind::OddOdd => "odd-odd",
            ConstraintKind::EvenOdd => "even-odd",
            ConstraintKind::Coincident => "coincident",
        })
    }
}

/// One expression that must not vanish; `i`, `j` are 1-based and index the
/// even or odd eigenvalues according to `kind`.
#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub kind: ConstraintKind,
    pub i: usize,
    pub j: usize,
    pub expr: Scalar,
}

impl Constraint {
    pub fn violated(&self) -> bool {
        self.expr.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegularityVerdict {
    pub regular: bool,
    pub constraints: Vec<Constraint>,
}

impl RegularityVerdict {
    pub fn violations(&self) -> impl Iterator<Item = &Constraint> {
        self.constraints.iter().filter(|c| c.violated())
    }
}

/// Constraints coming from the numerators of the quantum dimensions, plus
/// pairwise distinctness.
///
/// Without `h`: `μ_i - q^{-2}μ_j`, `ν_i - q^2ν_j`, `μ_i - q^2ν_j`.
/// With `h`: `μ̂_i - q^{-2}μ̂_j - q^{-1}ℏ`, `ν̂_i - q^2ν̂_j + qℏ`,
/// `μ̂_i - q^2ν̂_j + qℏ`.
pub fn regularity(profile: &EigenvalueProfile) -> RegularityVerdict {
    let q = &profile.q;
    let Ok(qinv) = q.inv() else {
        return RegularityVerdict {
            regular: false,
            constraints: vec![Constraint {
                kind: ConstraintKind::Coincident,
                i: 0,
                j: 0,
                expr: Scalar::zero(),
            }],
        };
    };
    let q2 = q * q;
    let qm2 = &qinv * &qinv;
    let zero = Scalar::zero();
    let h = profile.h.as_ref().unwrap_or(&zero);
    let down = &qinv * h;
    let up = q * h;
    let (mu, nu) = (&profile.mu, &profile.nu);
    let mut cs = Vec::new();
    let mut push = |kind, i: usize, j: usize, expr: Scalar| {
        cs.push(Constraint {
            kind,
            i: i + 1,
            j: j + 1,
            expr,
        })
    };
    for i in 0..mu.len() {
        for j in 0..mu.len() {
            if i != j {
                push(
                    ConstraintKind::EvenEven,
                    i,
                    j,
                    &(&mu[i] - &(&qm2 * &mu[j])) - &down,
                );
            }
        }
    }
    for i in 0..nu.len() {
        for j in 0..nu.len() {
            if i != j {
                push(
                    ConstraintKind::OddOdd,
                    i,
                    j,
                    &(&nu[i] - &(&q2 * &nu[j])) + &up,
                );
            }
        }
    }
    for i in 0..mu.len() {
        for j in 0..nu.len() {
            push(
                ConstraintKind::EvenOdd,
                i,
                j,
                &(&mu[i] - &(&q2 * &nu[j])) + &up,
            );
        }
    }
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            push(ConstraintKind::Coincident, i, j, &mu[i] - &mu[j]);
        }
    }
    for i in 0..nu.len() {
        for j in i + 1..nu.len() {
            push(
                ConstraintKind::Coincident,
                mu.len() + i,
                mu.len() + j,
                &nu[i] - &nu[j],
            );
        }
    }
    for i in 0..mu.len() {
        for j in 0..nu.len() {
            push(ConstraintKind::Coincident, i, mu.len() + j, &mu[i] - &nu[j]);
        }
    }
    let regular = cs.iter().all(|c| !c.violated());
    RegularityVerdict {
        regular,
        constraints: cs,
    }
}

/// A line `a·x + b·y + c = 0` in the plane of two even eigenvalues.
#[derive(Clone, Debug, PartialEq)]
pub struct Line {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

impl Line {
    /// Reads off the coefficients of an affine expression in `mu1`, `mu2`.
    pub fn from_affine(expr: &Scalar) -> Option<Line> {
        use crate::scalar::Symbol;
        let at = |x: i64, y: i64| -> Option<Scalar> {
            let e = expr.compose(Symbol::mu(1), &Scalar::from_int(x)).ok()?;
            e.compose(Symbol::mu(2), &Scalar::from_int(y)).ok()
        };
        let c = at(0, 0)?;
        let a = &at(1, 0)? - &c;
        let b = &at(0, 1)? - &c;
        // affine check
        let back =
            &(&(&a * &Scalar::var(Symbol::mu(1))) + &(&b * &Scalar::var(Symbol::mu(2)))) + &c;
        (&back == expr).then_some(Line { a, b, c })
    }

    /// Same zero set.
    pub fn same_as(&self, other: &Line) -> bool {
        let cross =
            |x: &Scalar, y: &Scalar, u: &Scalar, v: &Scalar| (&(x * v) - &(y * u)).is_zero();
        cross(&self.a, &self.b, &other.a, &other.b)
            && cross(&self.a, &self.c, &other.a, &other.c)
            && cross(&self.b, &self.c, &other.b, &other.c)
    }
}

/// The two even-even exceptional lines of a `gl(2)` profile as given by
/// [`regularity`] (symbolic eigenvalues, the given `q` and `ℏ`).
pub fn gl2_predicate_lines(q: &Scalar, h: &Scalar) -> Vec<Line> {
    let p = EigenvalueProfile::symbolic(2, 0)
        .with_q(q.clone())
        .with_h(Some(h.clone()));
    regularity(&p)
        .constraints
        .iter()
        .filter(|c| c.kind == ConstraintKind::EvenEven)
        .map(|c| Line::from_affine(&c.expr).expect("affine constraint"))
        .collect()
}

/// The two lines `μ̂_1 = q^2μ̂_2 + q^{-1}ℏ` and `μ̂_2 = q^2μ̂_1 + q^{-1}ℏ`,
/// the reference exceptional set for NC orbits of `gl(2)`.
pub fn gl2_remark_lines(q: &Scalar, h: &Scalar) -> Vec<Line> {
    let q2 = q * q;
    let shift = -&(h * &q.inv().expect("q nonzero"));
    vec![
        Line {
            a: Scalar::one(),
            b: -&q2,
            c: shift.clone(),
        },
        Line {
            a: -&q2,
            b: Scalar::one(),
            c: shift,
        },
    ]
}

/// The classical condition `μ_1 ≠ μ_2`.
pub fn gl2_classical_line() -> Line {
    Line {
        a: Scalar::one(),
        b: Scalar::from_int(-1),
        c: Scalar::zero(),
    }
}

/// Whether two families of lines have the same union.
pub fn same_lines(x: &[Line], y: &[Line]) -> bool {
    x.iter().all(|l| y.iter().any(|m| l.same_as(m)))
        && y.iter().all(|l| x.iter().any(|m| l.same_as(m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(mu: &[i64], nu: &[i64], q: Scalar) -> EigenvalueProfile {
        EigenvalueProfile::numeric(
            mu.iter().map(|&x| Scalar::from_int(x)).collect(),
            nu.iter().map(|&x| Scalar::from_int(x)).collect(),
            q,
        )
    }

    #[test]
    fn classical_distinct_is_regular() {
        assert!(regularity(&num(&[1, 2], &[], Scalar::one())).regular);
        assert!(!regularity(&num(&[1, 1], &[], Scalar::one())).regular);
    }

    #[test]
    fn q_squared_ratio_is_exceptional() {
        let q = Scalar::ratio(7, 5);
        let c = Scalar::from_int(3);
        let p = EigenvalueProfile::numeric(vec![&(&q * &q) * &c, c], vec![], q);
        let v = regularity(&p);
        assert!(!v.regular);
        assert!(v.violations().all(|c| c.kind == ConstraintKind::EvenEven));
    }

    #[test]
    fn nc_gl2_lines() {
        // at q = 1 the predicate reproduces the remark, as unordered pairs
        let h = Scalar::h();
        assert!(same_lines(
            &gl2_predicate_lines(&Scalar::one(), &h),
            &gl2_remark_lines(&Scalar::one(), &h)
        ));
        let q = Scalar::ratio(7, 5);
        assert!(!same_lines(
            &gl2_predicate_lines(&q, &h),
            &gl2_remark_lines(&q, &h)
        ));
        let diag = [gl2_classical_line()];
        assert!(same_lines(
            &gl2_predicate_lines(&Scalar::one(), &Scalar::zero()),
            &diag
        ));
        assert!(!same_lines(
            &gl2_predicate_lines(&Scalar::one(), &Scalar::one()),
            &diag
        ));
        assert!(!same_lines(
            &gl2_predicate_lines(&q, &Scalar::zero()),
            &diag
        ));
    }

    #[test]
    fn nc_regular_profile() {
        let h = Scalar::h();
        let p = EigenvalueProfile::numeric(
            vec![Scalar::zero(), &Scalar::from_int(3) * &h],
            vec![],
            Scalar::one(),
        )
        .with_h(Some(h));
        assert!(regularity(&p).regular);
    }
}
