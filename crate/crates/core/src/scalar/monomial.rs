use std::cmp::Ordering;

use smallvec::SmallVec;

use super::symbols::Symbol;

/// Exponent vector indexed by symbol, with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[u16; 12]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(sym: Symbol, exp: u16) -> Self {
        let mut m = Monomial(SmallVec::new());
        if exp > 0 {
            m.0.resize(sym.index() + 1, 0);
            m.0[sym.index()] = exp;
        }
        m
    }

    /// Monomial `x_index^exp` for positional (non-symbol) generators.
    pub fn unit(index: usize, exp: u16) -> Self {
        let mut m = Monomial(SmallVec::new());
        if exp > 0 {
            m.0.resize(index + 1, 0);
            m.0[index] = exp;
        }
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let mut m = Monomial(SmallVec::from_slice(exps));
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self, sym: Symbol) -> u16 {
        self.0.get(sym.index()).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Highest symbol index with a nonzero exponent, plus one.
    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.0.clone();
        for (o, &e) in out.iter_mut().zip(short.0.iter()) {
            *o = o.checked_add(e).expect("exponent overflow");
        }
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = self.0.clone();
        for (o, &e) in out.iter_mut().zip(other.0.iter()) {
            *o -= e;
        }
        let mut m = Monomial(out);
        m.trim();
        Some(m)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out: SmallVec<[u16; 12]> = self
            .0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| *a.min(b))
            .collect();
        while out.last() == Some(&0) {
            out.pop();
        }
        Monomial(out)
    }

    /// Replaces the exponent of `sym` by zero, returning the removed exponent.
    pub fn split_off(&self, sym: Symbol) -> (u16, Monomial) {
        let e = self.degree(sym);
        if e == 0 {
            return (0, self.clone());
        }
        let mut out = self.0.clone();
        out[sym.index()] = 0;
        let mut m = Monomial(out);
        m.trim();
        (e, m)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let k16 = u16::try_from(k).expect("exponent overflow");
        Monomial(
            self.0
                .iter()
                .map(|&e| e.checked_mul(k16).expect("exponent overflow"))
                .collect(),
        )
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order on symbol storage order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let n = self.0.len().max(other.0.len());
                for i in 0..n {
                    let a = self.0.get(i).copied().unwrap_or(0);
                    let b = other.0.get(i).copied().unwrap_or(0);
                    match a.cmp(&b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let q = Monomial::var(Symbol::q(), 2);
        let m = Monomial::var(Symbol::mu(1), 1);
        let p = q.mul(&m);
        assert_eq!(p.degree(Symbol::q()), 2);
        assert_eq!(p.total_degree(), 3);
        assert_eq!(p.div(&m), Some(q.clone()));
        assert_eq!(m.div(&q), None);
        assert_eq!(p.gcd(&m), m);
        assert!(Monomial::one() < m);
        assert!(m < q);
    }
}
