//! Straightening in the `q = 1` modified algebra, i.e. the enveloping
//! algebra of `gl(m|n)` with bracket scaled by `ℏ`.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::hecke::HeckeSymmetry;
use crate::linalg::EchelonBasis;
use crate::scalar::Scalar;

use super::ncpoly::{NCPoly, Word};
use super::relations::{relation_matrix, NormalForm, RelationKind};

/// PBW straightening with letters ordered by index. Rewriting rules for
/// out-of-order pairs and squares of odd letters are solved from the
/// modified relations, not written down by hand.
#[derive(Clone, Debug)]
pub struct SuperPbw {
    n: usize,
    odd: Vec<bool>,
    /// `(a, b) ↦` normal form of the word `a b`, for every non-standard pair.
    rules: HashMap<(u16, u16), Vec<(Word, Scalar)>>,
}

impl SuperPbw {
    /// `hs` must be involutive (`q = 1`); `h = 0` gives the supersymmetric
    /// algebra.
    pub fn new(hs: &HeckeSymmetry, h: &Scalar) -> Result<Self> {
        if !hs.q().is_one() {
            return Err(Error::BadDeformationParameter(format!(
                "straightening needs q = 1, got {}",
                hs.q()
            )));
        }
        let n = hs.dim();
        let a = n * n;
        let parity: Vec<bool> = match hs.parity() {
            Some(p) => p.to_vec(),
            None => vec![false; n],
        };
        let odd: Vec<bool> = (0..a).map(|g| parity[g / n] != parity[g % n]).collect();
        let nonstandard = |x: u16, y: u16| x > y || (x == y && odd[x as usize]);

        // columns: non-standard pairs, standard pairs, letters, constant
        let mut column: HashMap<Word, usize> = HashMap::new();
        let mut words: Vec<Word> = Vec::new();
        let mut push = |w: Word, column: &mut HashMap<Word, usize>| {
            column.insert(w.clone(), words.len());
            words.push(w);
        };
        for pass in [true, false] {
            for x in 0..a as u16 {
                for y in 0..a as u16 {
                    if nonstandard(x, y) == pass {
                        push(Word::from_letters(&[x, y]), &mut column);
                    }
                }
            }
        }
        for x in 0..a as u16 {
            push(Word::from_letters(&[x]), &mut column);
        }
        push(Word::empty(), &mut column);

        let mut basis = EchelonBasis::new(words.len());
        let rels = relation_matrix(hs, &RelationKind::Modified(h.clone()))?;
        for r in rels.entries() {
            let mut v: Vec<(usize, Scalar)> =
                r.terms().map(|(w, c)| (column[w], c.clone())).collect();
            v.sort_by_key(|(i, _)| *i);
            basis.insert(&v);
        }

        let mut rules = HashMap::new();
        for x in 0..a as u16 {
            for y in 0..a as u16 {
                if !nonstandard(x, y) {
                    continue;
                }
                let w = Word::from_letters(&[x, y]);
                let col = column[&w];
                if !basis.is_pivot(col) {
                    return Err(Error::IdentityFailed(format!(
                        "relations do not straighten the pair ({x}, {y})"
                    )));
                }
                let rem = basis.reduce(&vec![(col, Scalar::one())]);
                let image: Vec<(Word, Scalar)> = rem
                    .into_iter()
                    .map(|(i, c)| (words[i].clone(), c))
                    .collect();
                rules.insert((x, y), image);
            }
        }
        Ok(SuperPbw { n, odd, rules })
    }

    pub fn is_odd(&self, letter: u16) -> bool {
        self.odd[letter as usize]
    }

    pub fn is_standard(&self, w: &Word) -> bool {
        w.letters()
            .windows(2)
            .all(|p| !self.rules.contains_key(&(p[0], p[1])))
    }

    /// Rewrites `x` as a combination of standard words.
    pub fn reduce(&self, x: &NCPoly) -> NCPoly {
        let mut work: BTreeMap<Word, Scalar> =
            x.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = NCPoly::zero(self.n);
        // the largest word is rewritten first; rewriting only produces
        // shorter words or lexicographically smaller ones of equal length
        while let Some((w, c)) = work.pop_last() {
            let letters = w.letters();
            let pos = letters
                .windows(2)
                .position(|p| self.rules.contains_key(&(p[0], p[1])));
            let Some(pos) = pos else {
                out.add_term(w, c);
                continue;
            };
            let (prefix, rest) = letters.split_at(pos);
            let suffix = &rest[2..];
            for (img, k) in &self.rules[&(letters[pos], letters[pos + 1])] {
                let mut nw = Word::from_letters(prefix);
                nw = nw.concat(img).concat(&Word::from_letters(suffix));
                let coef = &c * k;
                let e = work.entry(nw.clone()).or_insert_with(Scalar::zero);
                *e += &coef;
                if e.is_zero() {
                    work.remove(&nw);
                }
            }
        }
        out
    }
}

impl NormalForm for SuperPbw {
    fn algebra_dim(&self) -> usize {
        self.n
    }

    fn normal_form(&self, x: &NCPoly) -> Result<NCPoly> {
        Ok(self.reduce(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(n: usize, i: usize, j: usize) -> NCPoly {
        NCPoly::gen(n, i, j)
    }

    #[test]
    fn ordered_words_are_fixed() {
        let hs = HeckeSymmetry::flip(2).unwrap();
        let pbw = SuperPbw::new(&hs, &Scalar::h()).unwrap();
        let x = l(2, 1, 1).mul(&l(2, 1, 2)).mul(&l(2, 2, 2));
        assert_eq!(pbw.reduce(&x), x);
    }

    /// In U(gl(2)_ℏ) with these relations,
    /// l_2^1 l_1^2 - l_1^2 l_2^1 = ℏ (l_2^2 - l_1^1), computed by hand from
    /// the modified relation with R the flip.
    #[test]
    fn classical_commutator() {
        let hs = HeckeSymmetry::flip(2).unwrap();
        let h = Scalar::h();
        let pbw = SuperPbw::new(&hs, &h).unwrap();
        let got = pbw.reduce(&l(2, 2, 1).mul(&l(2, 1, 2)));
        let want = l(2, 1, 2)
            .mul(&l(2, 2, 1))
            .add(&l(2, 2, 2).sub(&l(2, 1, 1)).scale(&h));
        assert_eq!(got, want);
    }

    #[test]
    fn zero_h_supersymmetrizes() {
        let hs = HeckeSymmetry::superflip(1, 1).unwrap();
        let pbw = SuperPbw::new(&hs, &Scalar::zero()).unwrap();
        // l_1^2 and l_2^1 are odd, l_1^1 even
        let x = l(2, 2, 1).mul(&l(2, 1, 2));
        assert_eq!(pbw.reduce(&x), l(2, 1, 2).mul(&l(2, 2, 1)).neg());
        assert!(pbw.reduce(&l(2, 1, 2).mul(&l(2, 1, 2))).is_zero());
        let y = l(2, 2, 2).mul(&l(2, 1, 1));
        assert_eq!(pbw.reduce(&y), l(2, 1, 1).mul(&l(2, 2, 2)));
    }

    #[test]
    fn requires_involutive_braiding() {
        let hs = HeckeSymmetry::dj_gl(2, Scalar::ratio(7, 5)).unwrap();
        assert!(SuperPbw::new(&hs, &Scalar::h()).is_err());
    }
}
