//! Homogeneous components of two-sided ideals generated by quadratic
//! relations in a free algebra.
//!
//! Words of length `k` over an alphabet of size `m` are encoded base `m`,
//! first letter most significant. The degree-`k` part of the ideal is
//! spanned by `u ⊗ r ⊗ w` for relations `r` and words `u`, `w`. When the
//! letters carry weights for which every relation is homogeneous, each
//! component splits into weight blocks that are reduced independently.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::echelon::{EchelonBasis, SparseVec};

/// Largest number of words allowed in one homogeneous component.
pub const MAX_COMPONENT_WORDS: usize = 1_000_000;

#[derive(Clone, Debug)]
struct Block {
    words: Vec<usize>,
    basis: EchelonBasis,
}

/// Degree-`k` part of the ideal, split into weight blocks.
#[derive(Clone, Debug)]
pub struct Component {
    degree: usize,
    blocks: Vec<Block>,
    /// For every word: its block and its index inside the block.
    position: Vec<(u32, u32)>,
}

impl Component {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Dimension of the ideal in this degree.
    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.basis.rank()).sum()
    }

    pub fn word_count(&self) -> usize {
        self.position.len()
    }

    /// Remainder of `v` (indexed by words) modulo the ideal. The remainder
    /// only involves non-pivot words, so two vectors are congruent iff their
    /// remainders agree.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut split: HashMap<u32, SparseVec> = HashMap::new();
        for (w, x) in v {
            let (b, local) = self.position[*w];
            split
                .entry(b)
                .or_default()
                .push((local as usize, x.clone()));
        }
        let mut out: SparseVec = Vec::new();
        for (b, mut part) in split {
            part.sort_by_key(|(i, _)| *i);
            let block = &self.blocks[b as usize];
            for (local, x) in block.basis.reduce(&part) {
                out.push((block.words[local], x));
            }
        }
        out.sort_by_key(|(i, _)| *i);
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Ideal generated by quadratic relations, with cached components.
#[derive(Clone, Debug)]
pub struct QuadraticIdeal {
    alphabet: usize,
    relations: Vec<SparseVec>,
    weights: Option<Vec<Vec<i32>>>,
    components: HashMap<usize, Component>,
}

fn word_weight(weights: &[Vec<i32>], m: usize, k: usize, mut w: usize) -> Vec<i32> {
    let mut acc = vec![0; weights[0].len()];
    for _ in 0..k {
        for (a, x) in acc.iter_mut().zip(&weights[w % m]) {
            *a += x;
        }
        w /= m;
    }
    acc
}

impl QuadraticIdeal {
    /// `relations` are vectors over words of length two. `weights`, if
    /// given, assign an integer vector to each letter; they are dropped when
    /// some relation is not homogeneous.
    pub fn new(alphabet: usize, relations: Vec<SparseVec>, weights: Option<Vec<Vec<i32>>>) -> Self {
        let mut basis = EchelonBasis::new(alphabet * alphabet);
        for r in &relations {
            basis.insert(r);
        }
        let relations: Vec<SparseVec> = basis.rows().to_vec();
        let weights = weights.filter(|wt| {
            wt.len() == alphabet
                && relations.iter().all(|r| {
                    let first = word_weight(wt, alphabet, 2, r[0].0);
                    r.iter()
                        .all(|(w, _)| word_weight(wt, alphabet, 2, *w) == first)
                })
        });
        QuadraticIdeal {
            alphabet,
            relations,
            weights,
            components: HashMap::new(),
        }
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    /// Linearly independent quadratic relations.
    pub fn relations(&self) -> &[SparseVec] {
        &self.relations
    }

    pub fn is_graded(&self) -> bool {
        self.weights.is_some()
    }

    pub fn word_count(&self, k: usize) -> Result<usize> {
        let mut total: usize = 1;
        for _ in 0..k {
            total = total
                .checked_mul(self.alphabet)
                .filter(|&t| t <= MAX_COMPONENT_WORDS)
                .ok_or_else(|| {
                    Error::ResourceLimit(format!(
                        "degree {k} over {} letters exceeds {MAX_COMPONENT_WORDS} words",
                        self.alphabet
                    ))
                })?;
        }
        Ok(total)
    }

    pub fn component(&mut self, k: usize) -> Result<&Component> {
        if !self.components.contains_key(&k) {
            let c = self.build(k)?;
            self.components.insert(k, c);
        }
        Ok(&self.components[&k])
    }

    pub fn quotient_dim(&mut self, k: usize) -> Result<usize> {
        let c = self.component(k)?;
        Ok(c.word_count() - c.rank())
    }

    pub fn reduce(&mut self, k: usize, v: &SparseVec) -> Result<SparseVec> {
        Ok(self.component(k)?.reduce(v))
    }

    pub fn contains(&mut self, k: usize, v: &SparseVec) -> Result<bool> {
        Ok(self.component(k)?.contains(v))
    }

    fn build(&self, k: usize) -> Result<Component> {
        let m = self.alphabet;
        let total = self.word_count(k)?;
        let mut keys: HashMap<Vec<i32>, u32> = HashMap::new();
        let mut block_words: Vec<Vec<usize>> = Vec::new();
        let mut position = Vec::with_capacity(total);
        for w in 0..total {
            let key = match &self.weights {
                Some(wt) => word_weight(wt, m, k, w),
                None => Vec::new(),
            };
            let next = keys.len() as u32;
            let b = *keys.entry(key).or_insert(next);
            if b as usize == block_words.len() {
                block_words.push(Vec::new());
            }
            position.push((b, block_words[b as usize].len() as u32));
            block_words[b as usize].push(w);
        }
        let mut blocks: Vec<Block> = block_words
            .into_iter()
            .map(|words| Block {
                basis: EchelonBasis::new(words.len()),
                words,
            })
            .collect();
        if k >= 2 {
            for i in 0..=k - 2 {
                let prefixes = m.pow(i as u32);
                let suffixes = m.pow((k - i - 2) as u32);
                for u in 0..prefixes {
                    for w in 0..suffixes {
                        for r in &self.relations {
                            let mut v: SparseVec = r
                                .iter()
                                .map(|(pair, x)| {
                                    let word = (u * m * m + pair) * suffixes + w;
                                    (position[word].1 as usize, x.clone())
                                })
                                .collect();
                            let b = position[(u * m * m + r[0].0) * suffixes + w].0;
                            v.sort_by_key(|(i, _)| *i);
                            blocks[b as usize].basis.insert(&v);
                        }
                    }
                }
            }
        }
        Ok(Component {
            degree: k,
            blocks,
            position,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    /// Commutative polynomial ring: relations `ab - ba`.
    fn commutator_ideal(m: usize, graded: bool) -> QuadraticIdeal {
        let mut rels = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                rels.push(vec![
                    (a * m + b, Scalar::one()),
                    (b * m + a, -Scalar::one()),
                ]);
            }
        }
        let weights = graded.then(|| {
            (0..m)
                .map(|a| (0..m).map(|b| (a == b) as i32).collect())
                .collect()
        });
        QuadraticIdeal::new(m, rels, weights)
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn commutative_quotient_dims() {
        for graded in [false, true] {
            let mut ideal = commutator_ideal(3, graded);
            assert_eq!(ideal.is_graded(), graded);
            for k in 0..=4 {
                assert_eq!(ideal.quotient_dim(k).unwrap(), binomial(k + 2, 2));
            }
        }
    }

    #[test]
    fn reduction_identifies_permuted_words() {
        let mut ideal = commutator_ideal(2, true);
        // aab - baa lies in the ideal, aab - bba does not
        let v = vec![(1, Scalar::one()), (4, -Scalar::one())];
        assert!(ideal.contains(3, &v).unwrap());
        let w = vec![(1, Scalar::one()), (6, -Scalar::one())];
        assert!(!ideal.contains(3, &w).unwrap());
    }
}
