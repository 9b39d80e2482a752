use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::symbols::{Symbol, SymbolTable};
use super::Rational;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted by decreasing monomial (graded lex), with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Monomial::one(), c)],
            }
        }
    }

    pub fn from_int(c: i64) -> Self {
        Poly::constant(Rational::from_integer(c.into()))
    }

    pub fn var(sym: Symbol) -> Self {
        Poly::monomial(Monomial::var(sym, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, sym: Symbol) -> u16 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree(sym))
            .max()
            .unwrap_or(0)
    }

    /// Symbols that occur with positive exponent.
    pub fn symbols(&self) -> Vec<Symbol> {
        let width = self.terms.iter().map(|(m, _)| m.width()).max().unwrap_or(0);
        (0..width)
            .filter(|&i| {
                self.terms
                    .iter()
                    .any(|(m, _)| m.exponents().get(i).copied().unwrap_or(0) > 0)
            })
            .map(|i| Symbol(i as u8))
            .collect()
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        // multiplying by a monomial preserves graded lex order
        Poly {
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.constant_value() {
            return other.scale(&c);
        }
        if let Some(c) = other.constant_value() {
            return self.scale(&c);
        }
        if self.terms.len() == 1 {
            return other.mul_monomial(&self.terms[0].0, &self.terms[0].1);
        }
        if other.terms.len() == 1 {
            return self.mul_monomial(&other.terms[0].0, &other.terms[0].1);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = divisor.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (lm, lc) = divisor.terms[0].clone();
        if divisor.terms.len() == 1 {
            let inv = lc.recip();
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                out.push((m.div(&lm)?, c * &inv));
            }
            return Some(Poly { terms: out });
        }
        // quick rejection on degrees
        for sym in divisor.symbols() {
            if divisor.degree_in(sym) > self.degree_in(sym) {
                return None;
            }
        }
        let inv = lc.recip();
        let mut rem: BTreeMap<Monomial, Rational> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.div(&lm)?;
            let qc = &c * &inv;
            for (dm, dc) in &divisor.terms[1..] {
                let tm = dm.mul(&qm);
                let tc = dc * &qc;
                match rem.get_mut(&tm) {
                    Some(v) => {
                        *v -= tc;
                        if v.is_zero() {
                            rem.remove(&tm);
                        }
                    }
                    None => {
                        rem.insert(tm, -tc);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Coefficients of `self` as a univariate polynomial in `sym`, lowest degree first.
    pub fn coefficients_in(&self, sym: Symbol) -> Vec<Poly> {
        let deg = self.degree_in(sym) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(sym);
            buckets[e as usize].push((rest, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut ts| {
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                Poly { terms: ts }
            })
            .collect()
    }

    pub fn from_coefficients_in(sym: Symbol, coeffs: &[Poly]) -> Poly {
        let mut acc = HashMap::new();
        for (e, c) in coeffs.iter().enumerate() {
            let xm = Monomial::var(sym, e as u16);
            for (m, a) in &c.terms {
                acc.insert(m.mul(&xm), a.clone());
            }
        }
        Self::from_map(acc)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.leading_coefficient();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.recip())
    }

    /// Substitutes rational values for some symbols.
    pub fn substitute(&self, bindings: &[(Symbol, Rational)]) -> Poly {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = m.clone();
            for (sym, val) in bindings {
                let (e, r) = rest.split_off(*sym);
                if e > 0 {
                    coeff *= pow_rational(val, e as u32);
                    rest = r;
                }
            }
            if !coeff.is_zero() {
                *acc.entry(rest).or_insert_with(Rational::zero) += coeff;
            }
        }
        Self::from_map(acc)
    }

    /// Substitutes a polynomial for one symbol.
    pub fn compose(&self, sym: Symbol, value: &Poly) -> Poly {
        let coeffs = self.coefficients_in(sym);
        // Horner
        let mut result = Poly::zero();
        for c in coeffs.iter().rev() {
            result = result.mul(value).add(c);
        }
        result
    }

    /// Evaluates with every symbol bound.
    pub fn evaluate(&self, bindings: &[(Symbol, Rational)]) -> Result<Rational> {
        let p = self.substitute(bindings);
        match p.constant_value() {
            Some(v) => Ok(v),
            None => {
                let s = p.symbols()[0];
                Err(Error::UnboundSymbol(s.name()))
            }
        }
    }

    pub(crate) fn fmt_canonical(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut order: Vec<usize> = (0..self.terms.len()).collect();
        let width = self.terms.iter().map(|(m, _)| m.width()).max().unwrap_or(0);
        let mut lanes: Vec<usize> = (0..width).collect();
        lanes.sort_by_key(|&i| SymbolTable::canonical_key(i));
        let key = |m: &Monomial| -> Vec<u16> {
            lanes
                .iter()
                .map(|&i| m.exponents().get(i).copied().unwrap_or(0))
                .collect()
        };
        order.sort_by(|&a, &b| {
            let (ma, mb) = (&self.terms[a].0, &self.terms[b].0);
            mb.total_degree()
                .cmp(&ma.total_degree())
                .then_with(|| key(mb).cmp(&key(ma)))
        });
        for (pos, &idx) in order.iter().enumerate() {
            let (m, c) = &self.terms[idx];
            let neg = c.is_negative();
            let abs = c.abs();
            if pos == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let factors: Vec<String> = lanes
                .iter()
                .filter_map(|&i| {
                    let e = m.exponents().get(i).copied().unwrap_or(0);
                    match e {
                        0 => None,
                        1 => Some(SymbolTable::name(Symbol(i as u8))),
                        _ => Some(format!("{}^{}", SymbolTable::name(Symbol(i as u8)), e)),
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

pub(crate) fn pow_rational(base: &Rational, e: u32) -> Rational {
    num_traits::pow::pow(base.clone(), e as usize)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_canonical(f)
    }
}
