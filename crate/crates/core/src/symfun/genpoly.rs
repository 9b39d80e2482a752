use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::scalar::{Monomial, Scalar};

/// Commutative polynomial with [`Scalar`] coefficients in generators
/// `x_1, x_2, ...` addressed by position. Used for symmetric-function
/// expressions in the elementary (`a_k`) or power-sum (`p_k`) basis.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GenPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

/// Operations shared by [`Scalar`] and [`GenPoly`], so that recursions can
/// run on either numbers or expressions.
pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Scalar) -> Self;
    fn is_zero(&self) -> bool;
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Scalar) -> Self {
        self * c
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl Ring for GenPoly {
    fn zero() -> Self {
        GenPoly::zero()
    }
    fn one() -> Self {
        GenPoly::one()
    }
    fn add(&self, other: &Self) -> Self {
        GenPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        GenPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        GenPoly::mul(self, other)
    }
    fn scale(&self, c: &Scalar) -> Self {
        GenPoly::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        GenPoly::is_zero(self)
    }
}

impl GenPoly {
    pub fn zero() -> Self {
        GenPoly::default()
    }

    pub fn one() -> Self {
        GenPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        GenPoly { terms }
    }

    /// The generator `x_i`, `i >= 1`.
    pub fn gen(i: usize) -> Self {
        assert!(i >= 1, "generators are numbered from 1");
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::unit(i - 1, 1), Scalar::one());
        GenPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when every generator is zero.
    pub fn constant_term(&self) -> Scalar {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Whether the polynomial has no generator dependence.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Highest generator index that occurs.
    pub fn max_generator(&self) -> usize {
        self.terms.keys().map(|m| m.width()).max().unwrap_or(0)
    }

    fn insert(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> GenPoly {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> GenPoly {
        if c.is_zero() {
            return GenPoly::zero();
        }
        GenPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &GenPoly) -> GenPoly {
        let mut out = GenPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> GenPoly {
        let mut acc = GenPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Replaces generator `x_i` by `images[i-1]`.
    pub fn substitute<R: Ring>(&self, images: &[R]) -> R {
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = R::one().scale(c);
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&images[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Applies `f` to every coefficient.
    pub fn map_coefficients(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<GenPoly> {
        let mut out = GenPoly::zero();
        for (m, c) in &self.terms {
            out.insert(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Display with generator names `{prefix}{i}`.
    pub fn display_with(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("{prefix}{}", i + 1)),
                    _ => factors.push(format!("{prefix}{}^{e}", i + 1)),
                }
            }
            let coef = c.to_string();
            let coef = if c.is_constant() {
                coef
            } else {
                format!("({coef})")
            };
            parts.push(match (factors.is_empty(), c.is_one()) {
                (true, _) => coef,
                (false, true) => factors.join("*"),
                (false, false) => format!("{coef}*{}", factors.join("*")),
            });
        }
        parts.join(" + ")
    }
}

impl fmt::Debug for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

/// Determinant by Laplace expansion along the first row. Meant for the
/// small matrices of Jacobi-Trudi formulas.
pub fn det<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    match n {
        0 => R::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = R::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let t = m[0][j].mul(&det(&minor));
                acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_substitution() {
        let x1 = GenPoly::gen(1);
        let x2 = GenPoly::gen(2);
        let p = x1.mul(&x1).sub(&x2.scale(&Scalar::q()));
        assert_eq!(p.len(), 2);
        let v = p.substitute(&[Scalar::from_int(3), Scalar::from_int(2)]);
        assert_eq!(
            v,
            &Scalar::from_int(9) - &(&Scalar::from_int(2) * &Scalar::q())
        );
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.max_generator(), 2);
    }

    #[test]
    fn small_det() {
        let m: Vec<Vec<Scalar>> = vec![
            vec![Scalar::from_int(2), Scalar::from_int(1)],
            vec![Scalar::from_int(5), Scalar::from_int(3)],
        ];
        assert_eq!(det(&m), Scalar::one());
    }
}
