use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::poly::Poly;
use super::symbols::Symbol;
use super::Rational;
use crate::error::{Error, Result};

/// Element of the rational function field Q(symbols).
///
/// Kept in canonical form: numerator and denominator coprime, denominator
/// with leading coefficient one. Constants are stored unboxed so that purely
/// numeric computations stay cheap. Because the form is canonical,
/// structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Frac { num: Poly, den: Poly },
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(Rational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar::Rat(Rational::new(n.into(), d.into()))
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::Rat(r)
    }

    pub fn var(sym: Symbol) -> Self {
        Scalar::from_poly(Poly::var(sym))
    }

    pub fn q() -> Self {
        Scalar::var(Symbol::q())
    }

    pub fn h() -> Self {
        Scalar::var(Symbol::h())
    }

    pub fn from_poly(p: Poly) -> Self {
        match p.constant_value() {
            Some(c) => Scalar::Rat(c),
            None => Scalar::Frac {
                num: p,
                den: Poly::one(),
            },
        }
    }

    /// Builds `num / den` in canonical form.
    pub fn from_fraction(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        if let Some(c) = den.constant_value() {
            return Ok(Scalar::from_poly(num.scale(&c.recip())));
        }
        if let Some(quot) = num.div_exact(&den) {
            return Ok(Scalar::from_poly(quot));
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Ok(Scalar::reduced(num, den))
    }

    /// `num / den` with the two already coprime.
    fn reduced(num: Poly, den: Poly) -> Self {
        let lc = den.leading_coefficient();
        let (num, den) = if lc.is_one() {
            (num, den)
        } else {
            let inv = lc.recip();
            (num.scale(&inv), den.scale(&inv))
        };
        if den.is_one() {
            Scalar::from_poly(num)
        } else {
            Scalar::Frac { num, den }
        }
    }

    pub fn numerator(&self) -> Poly {
        match self {
            Scalar::Rat(r) => Poly::constant(r.clone()),
            Scalar::Frac { num, .. } => num.clone(),
        }
    }

    pub fn denominator(&self) -> Poly {
        match self {
            Scalar::Rat(_) => Poly::one(),
            Scalar::Frac { den, .. } => den.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        match self {
            Scalar::Rat(_) => Vec::new(),
            Scalar::Frac { num, den } => {
                let mut s = num.symbols();
                for x in den.symbols() {
                    if !s.contains(&x) {
                        s.push(x);
                    }
                }
                s.sort();
                s
            }
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(r.recip()))
                }
            }
            Scalar::Frac { num, den } => Ok(Scalar::reduced(den.clone(), num.clone())),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Scalar> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        if k == 0 {
            return Ok(Scalar::one());
        }
        Ok(match self {
            Scalar::Rat(r) => Scalar::Rat(super::poly::pow_rational(r, k as u32)),
            Scalar::Frac { num, den } => Scalar::Frac {
                num: num.pow(k as u32),
                den: den.pow(k as u32),
            },
        })
    }

    /// Non-negative power; never fails.
    pub fn powu(&self, k: u32) -> Scalar {
        self.pow(k as i32).expect("non-negative power")
    }

    /// Full evaluation to a rational.
    pub fn evaluate(&self, bindings: &[(Symbol, Rational)]) -> Result<Rational> {
        match self {
            Scalar::Rat(r) => Ok(r.clone()),
            Scalar::Frac { num, den } => {
                let d = den.evaluate(bindings)?;
                let n = num.evaluate(bindings)?;
                if d.is_zero() {
                    return Err(Error::PoleAtPoint);
                }
                Ok(n / d)
            }
        }
    }

    /// Partial substitution of some symbols by rationals.
    pub fn substitute(&self, bindings: &[(Symbol, Rational)]) -> Result<Scalar> {
        match self {
            Scalar::Rat(_) => Ok(self.clone()),
            Scalar::Frac { num, den } => {
                let d = den.substitute(bindings);
                if d.is_zero() {
                    return Err(Error::PoleAtPoint);
                }
                Scalar::from_fraction(num.substitute(bindings), d)
            }
        }
    }

    /// Replaces a symbol by another scalar.
    pub fn compose(&self, sym: Symbol, value: &Scalar) -> Result<Scalar> {
        match self {
            Scalar::Rat(_) => Ok(self.clone()),
            Scalar::Frac { num, den } => {
                let n = compose_poly(num, sym, value);
                let d = compose_poly(den, sym, value);
                n.checked_div(&d).map_err(|_| Error::PoleAtPoint)
            }
        }
    }

    fn add_impl(&self, other: &Scalar, negate: bool) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(if negate { a - b } else { a + b }),
            _ => {
                let (a, b) = (self.numerator(), self.denominator());
                let (c, d) = (other.numerator(), other.denominator());
                let c = if negate { c.neg() } else { c };
                if b == d {
                    let num = a.add(&c);
                    if b.is_one() {
                        return Scalar::from_poly(num);
                    }
                    return Scalar::from_fraction(num, b).expect("nonzero denominator");
                }
                if b.is_one() {
                    return Scalar::reduced(a.mul(&d).add(&c), d);
                }
                if d.is_one() {
                    return Scalar::reduced(a.add(&c.mul(&b)), b);
                }
                let g = gcd(&b, &d);
                if g.is_one() {
                    return Scalar::reduced(a.mul(&d).add(&c.mul(&b)), b.mul(&d));
                }
                let b1 = b.div_exact(&g).unwrap();
                let d1 = d.div_exact(&g).unwrap();
                let num = a.mul(&d1).add(&c.mul(&b1));
                if num.is_zero() {
                    return Scalar::zero();
                }
                let g2 = gcd(&num, &g);
                let (num, g) = if g2.is_one() {
                    (num, g)
                } else {
                    (num.div_exact(&g2).unwrap(), g.div_exact(&g2).unwrap())
                };
                Scalar::reduced(num, b1.mul(&d1).mul(&g))
            }
        }
    }

    fn mul_impl(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), Scalar::Frac { num, den })
            | (Scalar::Frac { num, den }, Scalar::Rat(a)) => {
                if a.is_zero() {
                    Scalar::zero()
                } else {
                    Scalar::Frac {
                        num: num.scale(a),
                        den: den.clone(),
                    }
                }
            }
            (Scalar::Frac { num: a, den: b }, Scalar::Frac { num: c, den: d }) => {
                if b.is_one() && d.is_one() {
                    return Scalar::from_poly(a.mul(c));
                }
                let g1 = if d.is_one() { Poly::one() } else { gcd(a, d) };
                let g2 = if b.is_one() { Poly::one() } else { gcd(c, b) };
                let a1 = if g1.is_one() {
                    a.clone()
                } else {
                    a.div_exact(&g1).unwrap()
                };
                let d1 = if g1.is_one() {
                    d.clone()
                } else {
                    d.div_exact(&g1).unwrap()
                };
                let c1 = if g2.is_one() {
                    c.clone()
                } else {
                    c.div_exact(&g2).unwrap()
                };
                let b1 = if g2.is_one() {
                    b.clone()
                } else {
                    b.div_exact(&g2).unwrap()
                };
                Scalar::reduced(a1.mul(&c1), b1.mul(&d1))
            }
        }
    }
}

fn compose_poly(p: &Poly, sym: Symbol, value: &Scalar) -> Scalar {
    let coeffs = p.coefficients_in(sym);
    let mut acc = Scalar::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * value) + &Scalar::from_poly(c.clone());
    }
    acc
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_impl(rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Frac { num, den } => Scalar::Frac {
                num: num.neg(),
                den: den.clone(),
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Frac { num, den } => {
                if den.is_one() {
                    write!(f, "{num}")
                } else {
                    let wrap_num = num.len() > 1;
                    // `1/q*mu1` would read back as `mu1/q`
                    let wrap_den = den.len() > 1 || den.to_string().contains(['*', '/', '-']);
                    match (wrap_num, wrap_den) {
                        (true, true) => write!(f, "({num})/({den})"),
                        (true, false) => write!(f, "({num})/{den}"),
                        (false, true) => write!(f, "{num}/({den})"),
                        (false, false) => write!(f, "{num}/{den}"),
                    }
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `q - q^{-1}`.
pub fn xi() -> Scalar {
    let q = Scalar::q();
    &q - &q.inv().unwrap()
}

/// The symmetric q-number `(q^k - q^{-k}) / (q - q^{-1})` in the symbol `q`.
pub fn qnumber(k: u32) -> Scalar {
    qnumber_at(k, &Scalar::q())
}

/// `k_q` at an arbitrary value of `q`, computed as the Laurent sum
/// `q^{k-1} + q^{k-3} + ... + q^{1-k}`, so that `q = 1` gives `k`.
pub fn qnumber_at(k: u32, q: &Scalar) -> Scalar {
    assert!(k >= 1, "q-numbers are defined for k >= 1");
    if q.is_zero() {
        panic!("q must be nonzero");
    }
    let mut acc = Scalar::zero();
    let k = k as i32;
    let mut e = k - 1;
    while e >= 1 - k {
        acc += &q.pow(e).unwrap();
        e -= 2;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse;

    fn s(text: &str) -> Scalar {
        parse(text).unwrap()
    }

    #[test]
    fn difference_of_q_and_inverse() {
        let q = Scalar::q();
        let x = &q - &q.inv().unwrap();
        assert_eq!(x, s("(q^2-1)/q"));
        assert_eq!(x.to_string(), "(q^2 - 1)/q");
    }

    #[test]
    fn zero_absorbs() {
        let x = s("(q+mu1)/(q-mu2)");
        assert!((&x * &Scalar::zero()).is_zero());
    }

    #[test]
    fn gcd_normalisation() {
        assert_eq!(s("(q^2-1)/(q-1)"), s("q+1"));
        assert_eq!(s("(2*q^2-2)/(4*q-4)"), s("q/2+1/2"));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn qnumbers() {
        assert_eq!(qnumber(1), Scalar::one());
        assert_eq!(qnumber(2), s("(q^2+1)/q"));
        let v = qnumber(3)
            .evaluate(&[(Symbol::q(), Rational::from_integer(2.into()))])
            .unwrap();
        assert_eq!(v, Rational::new(21.into(), 4.into()));
        for k in 1..6 {
            let at_one = qnumber(k)
                .evaluate(&[(Symbol::q(), Rational::one())])
                .unwrap();
            assert_eq!(at_one, Rational::from_integer(k.into()));
        }
    }

    #[test]
    fn evaluation() {
        let x = s("(q^2-1)/q");
        assert_eq!(
            x.evaluate(&[(Symbol::q(), Rational::from_integer(3.into()))])
                .unwrap(),
            Rational::new(8.into(), 3.into())
        );
        let pole = s("1/(q-1)");
        assert_eq!(
            pole.evaluate(&[(Symbol::q(), Rational::one())]),
            Err(Error::PoleAtPoint)
        );
        assert!(matches!(x.evaluate(&[]), Err(Error::UnboundSymbol(_))));
    }

    #[test]
    fn partial_substitution_keeps_other_symbols() {
        let x = s("(q*h - h)/(q^2 - 1)");
        assert_eq!(x, s("h/(q+1)"));
        let at_one = x.substitute(&[(Symbol::q(), Rational::one())]).unwrap();
        assert_eq!(at_one, s("h/2"));
    }
}
