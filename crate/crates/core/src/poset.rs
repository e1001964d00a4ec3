//! Finite posets stored with their full order matrix.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Square boolean matrix, one bit per entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    /// Columns `j` with `(i, j)` set, ascending.
    pub fn row(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[i * self.words..(i + 1) * self.words];
        row.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let b = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }
}

/// A finite poset whose elements carry values of type `E`.
#[derive(Clone, Debug)]
pub struct FinitePoset<E> {
    elements: Vec<E>,
    leq: BitMatrix,
}

impl<E> FinitePoset<E> {
    /// Builds the poset with `leq(a, b)` as order, checking the partial-order
    /// axioms.
    pub fn new<F>(elements: Vec<E>, leq: F) -> Result<Self>
    where
        F: Fn(&E, &E) -> bool,
    {
        let poset = Self::from_order_unchecked(elements, leq);
        poset.validate()?;
        Ok(poset)
    }

    /// Builds the matrix without checking the axioms. Use when `leq` is
    /// known to be a partial order (pointwise inclusion, for instance).
    pub fn from_order_unchecked<F>(elements: Vec<E>, leq: F) -> Self
    where
        F: Fn(&E, &E) -> bool,
    {
        let n = elements.len();
        let mut m = BitMatrix::new(n);
        for i in 0..n {
            for j in 0..n {
                if i == j || leq(&elements[i], &elements[j]) {
                    m.set(i, j);
                }
            }
        }
        FinitePoset { elements, leq: m }
    }

    /// Builds from explicit strict pairs `(i, j)` meaning `i < j`; the
    /// reflexive closure is added, transitivity and antisymmetry are checked.
    pub fn from_pairs(elements: Vec<E>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = elements.len();
        let mut m = BitMatrix::new(n);
        for i in 0..n {
            m.set(i, i);
        }
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::NotPartialOrder(format!("pair ({i}, {j}) out of range")));
            }
            m.set(i, j);
        }
        let poset = FinitePoset { elements, leq: m };
        poset.validate()?;
        Ok(poset)
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        for i in 0..n {
            for j in self.leq.row(i) {
                if i != j && self.leq.get(j, i) {
                    return Err(Error::NotPartialOrder(format!(
                        "elements {i} and {j} are mutually below each other"
                    )));
                }
                for k in self.leq.row(j) {
                    if !self.leq.get(i, k) {
                        return Err(Error::NotPartialOrder(format!(
                            "{i} <= {j} <= {k} but not {i} <= {k}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq.get(i, j)
    }

    /// Elements strictly above `i`, ascending by index.
    pub fn above(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.leq.row(i).filter(move |&j| j != i)
    }

    /// All strict pairs `(i, j)` with `i < j` in the order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|i| self.above(i).map(move |j| (i, j)))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| !(0..self.len()).any(|i| self.lt(i, j)))
            .collect()
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.leq
    }
}

impl<E: Eq + Hash> FinitePoset<E> {
    pub fn index_map(&self) -> HashMap<&E, usize> {
        self.elements.iter().enumerate().map(|(i, e)| (e, i)).collect()
    }
}

/// A function between the element sets of two posets, by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetMap {
    images: Vec<usize>,
}

impl PosetMap {
    pub fn new(images: Vec<usize>) -> Self {
        PosetMap { images }
    }

    pub fn identity(n: usize) -> Self {
        PosetMap {
            images: (0..n).collect(),
        }
    }

    /// The map `e ↦ f(e)`, with each value located among the target elements.
    pub fn induced<A, B, F>(source: &FinitePoset<A>, target: &FinitePoset<B>, f: F) -> Result<Self>
    where
        B: Eq + Hash,
        F: Fn(&A) -> B,
    {
        let index = target.index_map();
        let images = source
            .elements()
            .iter()
            .map(|e| {
                index.get(&f(e)).copied().ok_or_else(|| {
                    Error::DomainMismatch("image is not an element of the target poset".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PosetMap { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn then(&self, next: &PosetMap) -> PosetMap {
        PosetMap {
            images: self.images.iter().map(|&i| next.images[i]).collect(),
        }
    }

    pub fn is_order_preserving<A, B>(&self, source: &FinitePoset<A>, target: &FinitePoset<B>) -> bool {
        (0..source.len()).all(|i| {
            source
                .above(i)
                .all(|j| target.leq(self.images[i], self.images[j]))
        })
    }

    /// `self(e) >= e` for every element, for an endomap of one poset.
    pub fn is_above_identity<A>(&self, poset: &FinitePoset<A>) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| poset.leq(i, j))
    }
}
