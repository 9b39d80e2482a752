use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::linalg::{check_entries, SparseVec};
use crate::scalar::Scalar;

/// Word in the generators `l_i^j`; letter `g = i*N + j` with 0-based `i`, `j`.
/// Ordered by length first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[u16; 8]>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_letters(letters: &[u16]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w)
    }

    /// Position of the word among all words of its length, base `N²`.
    pub fn encode(&self, alphabet: usize) -> usize {
        self.0.iter().fold(0, |acc, &g| acc * alphabet + g as usize)
    }

    pub fn decode(mut index: usize, len: usize, alphabet: usize) -> Word {
        let mut letters: SmallVec<[u16; 8]> = SmallVec::from_elem(0, len);
        for t in (0..len).rev() {
            letters[t] = (index % alphabet) as u16;
            index /= alphabet;
        }
        Word(letters)
    }
}

/// Noncommutative polynomial in the `N²` generators `l_i^j` of a matrix
/// algebra, with [`Scalar`] coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly {
    n: usize,
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero(n: usize) -> Self {
        NCPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        let mut p = NCPoly::zero(n);
        p.insert(Word::empty(), c);
        p
    }

    pub fn one(n: usize) -> Self {
        NCPoly::constant(n, Scalar::one())
    }

    /// The generator `l_i^j`, 1-based.
    pub fn gen(n: usize, i: usize, j: usize) -> Self {
        assert!(
            (1..=n).contains(&i) && (1..=n).contains(&j),
            "generator index out of range"
        );
        NCPoly::monomial(
            n,
            Word::from_letters(&[((i - 1) * n + j - 1) as u16]),
            Scalar::one(),
        )
    }

    pub fn monomial(n: usize, w: Word, c: Scalar) -> Self {
        let mut p = NCPoly::zero(n);
        p.insert(w, c);
        p
    }

    /// Matrix size `N`; the alphabet has `N²` letters.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> usize {
        self.n * self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest word length, 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().next_back().map(Word::len).unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Word::len);
        match lens.next() {
            None => true,
            Some(d) => lens.all(|l| l == d),
        }
    }

    pub fn homogeneous_part(&self, d: usize) -> NCPoly {
        NCPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Nonzero homogeneous parts keyed by degree.
    pub fn parts(&self) -> BTreeMap<usize, NCPoly> {
        let mut out: BTreeMap<usize, NCPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.len())
                .or_insert_with(|| NCPoly::zero(self.n))
                .terms
                .insert(w.clone(), c.clone());
        }
        out
    }

    fn insert(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        self.insert(w, c);
    }

    fn same_dim(&self, other: &NCPoly) {
        assert_eq!(self.n, other.n, "polynomials over different generator sets");
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        self.same_dim(other);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        self.same_dim(other);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero(self.n);
        }
        NCPoly {
            n: self.n,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &NCPoly) -> NCPoly {
        self.same_dim(other);
        let mut out = NCPoly::zero(self.n);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.insert(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> NCPoly {
        let mut acc = NCPoly::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map_coefficients(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<NCPoly> {
        let mut out = NCPoly::zero(self.n);
        for (w, c) in &self.terms {
            out.insert(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Replaces every letter `g` by `images[g]`.
    pub fn substitute(&self, images: &[NCPoly]) -> NCPoly {
        assert_eq!(images.len(), self.alphabet(), "one image per generator");
        let n = images.first().map(|p| p.n).unwrap_or(self.n);
        let mut out = NCPoly::zero(n);
        for (w, c) in &self.terms {
            let mut t = NCPoly::constant(n, c.clone());
            for &g in w.letters() {
                t = t.mul(&images[g as usize]);
            }
            out = out.add(&t);
        }
        out
    }

    /// `l_i^j ↦ l_i^j + δ_i^j·shift`.
    pub fn shift_diagonal(&self, shift: &Scalar) -> NCPoly {
        let images: Vec<NCPoly> = (0..self.alphabet())
            .map(|g| {
                let (i, j) = (g / self.n, g % self.n);
                let l = NCPoly::gen(self.n, i + 1, j + 1);
                if i == j {
                    l.add(&NCPoly::constant(self.n, shift.clone()))
                } else {
                    l
                }
            })
            .collect();
        self.substitute(&images)
    }

    /// Coefficient vector of the degree-`d` part, indexed by [`Word::encode`].
    pub fn to_sparse(&self, d: usize) -> Result<SparseVec> {
        word_space(self.alphabet(), d)?;
        let a = self.alphabet();
        let mut v: SparseVec = self
            .terms
            .iter()
            .filter(|(w, _)| w.len() == d)
            .map(|(w, c)| (w.encode(a), c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        Ok(v)
    }

    pub fn from_sparse(n: usize, d: usize, v: &SparseVec) -> NCPoly {
        let mut p = NCPoly::zero(n);
        for (i, c) in v {
            p.insert(Word::decode(*i, d, n * n), c.clone());
        }
        p
    }

    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word: Vec<String> = w
                    .letters()
                    .iter()
                    .map(|&g| format!("l{}^{}", g as usize / self.n + 1, g as usize % self.n + 1))
                    .collect();
                match (word.is_empty(), c.is_one()) {
                    (true, _) => c.to_string(),
                    (false, true) => word.join("*"),
                    (false, false) => format!("({c})*{}", word.join("*")),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// Number of words of length `d`, refusing spaces beyond the entry cap.
pub fn word_space(alphabet: usize, d: usize) -> Result<usize> {
    let mut total: usize = 1;
    for _ in 0..d {
        total = total
            .checked_mul(alphabet)
            .ok_or_else(|| Error::ResourceLimit(format!("{alphabet}^{d} words")))?;
    }
    check_entries(total)?;
    Ok(total)
}
