use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use super::normal::normal_terms;
use super::word::{GenIndex, Word};
use crate::error::{Error, Result};
use crate::scalar::{from_int, Scalar};

/// Element of U(gl_d) in PBW normal form.
///
/// Keys are PBW-normal words and values are nonzero coefficients, so two
/// elements are equal exactly when they are equal in the algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct UeaElement<T> {
    dim: usize,
    terms: BTreeMap<Word, T>,
}

pub(crate) fn check_dim(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

impl<T: Scalar> UeaElement<T> {
    pub fn zero(dim: usize) -> Self {
        UeaElement {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, T::one())
    }

    pub fn constant(dim: usize, c: T) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Word::empty(), c);
        }
        UeaElement { dim, terms }
    }

    /// The single generator `e^row_col`.
    pub fn generator(row: usize, col: usize, dim: usize) -> Result<Self> {
        let g = GenIndex::new(row, col, dim)?;
        let mut terms = BTreeMap::new();
        terms.insert(Word(vec![g.code(dim)]), T::one());
        Ok(UeaElement { dim, terms })
    }

    /// Sums arbitrary (not necessarily normal) words, normal ordering each.
    pub fn from_words<I>(dim: usize, words: I) -> Self
    where
        I: IntoIterator<Item = (Word, T)>,
    {
        let mut acc = Accumulator::new(dim);
        for (w, c) in words {
            acc.add_word(&w, &c);
        }
        acc.finish()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order: longest words first, then lexicographic.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> T {
        self.terms.get(word).cloned().unwrap_or_else(T::zero)
    }

    /// Constant term.
    pub fn scalar_part(&self) -> T {
        self.coeff(&Word::empty())
    }

    /// True iff the element is `c·1` for some scalar `c` (zero included).
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(Word::is_empty)
    }

    /// Filtration degree; `-1` for the zero element.
    pub fn degree(&self) -> i64 {
        self.terms.keys().next().map_or(-1, |w| w.len() as i64)
    }

    /// Sum of the terms whose words have exactly `n` letters.
    pub fn homogeneous_part(&self, n: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.len() == n)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        UeaElement {
            dim: self.dim,
            terms,
        }
    }

    pub fn top_part(&self) -> Self {
        match self.degree() {
            -1 => self.clone(),
            n => self.homogeneous_part(n as usize),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, x)| (w.clone(), x.clone() * c.clone()))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        UeaElement {
            dim: self.dim,
            terms,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_into(&mut terms, w, c.clone());
        }
        Ok(UeaElement {
            dim: self.dim,
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_into(&mut terms, w, -c.clone());
        }
        Ok(UeaElement {
            dim: self.dim,
            terms,
        })
    }

    /// Product in U(gl_d): concatenate words, then normal order.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut acc = Accumulator::new(self.dim);
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let c = cu.clone() * cv.clone();
                match (u.0.last(), v.0.first()) {
                    (Some(a), Some(b)) if a > b => acc.add_word(&u.concat(v), &c),
                    _ => acc.add_normal(u.concat(v), c),
                }
            }
        }
        Ok(acc.finish())
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)?
            .checked_sub(&other.checked_mul(self)?)
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut out = Self::one(self.dim);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Commutes with every generator `e^i_j`.
    pub fn is_central(&self) -> bool {
        let d = self.dim;
        (1..=d).all(|i| {
            (1..=d).all(|j| {
                let g = Self::generator(i, j, d).expect("index in range");
                self.commutator(&g).expect("same dimension").is_zero()
            })
        })
    }

    /// Converts coefficients into another scalar type.
    pub fn map_coeffs<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> UeaElement<U> {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        UeaElement {
            dim: self.dim,
            terms,
        }
    }

    /// Relabels generators `e^i_j -> e^{π(i)}_{π(j)}` for a permutation `π`
    /// of `1..=d` given as a 0-based image vector.
    pub fn permute_indices(&self, perm: &[usize]) -> Result<Self> {
        let d = self.dim;
        if perm.len() != d {
            return Err(Error::DimensionMismatch {
                left: d,
                right: perm.len(),
            });
        }
        let mut seen = vec![false; d];
        for &p in perm {
            if p >= d || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation of 0..{d}"
                )));
            }
        }
        let words = self.terms.iter().map(|(w, c)| {
            let codes = w
                .letters(d)
                .map(|g| {
                    GenIndex {
                        row: perm[g.row - 1] + 1,
                        col: perm[g.col - 1] + 1,
                    }
                    .code(d)
                })
                .collect();
            (Word(codes), c.clone())
        });
        Ok(Self::from_words(d, words))
    }
}

fn add_into<T: Scalar>(terms: &mut BTreeMap<Word, T>, w: &Word, c: T) {
    if let Some(x) = terms.get_mut(w) {
        *x = x.clone() + c;
        if x.is_zero() {
            terms.remove(w);
        }
    } else if !c.is_zero() {
        terms.insert(w.clone(), c);
    }
}

/// Hash-based sum of words, normalized on [`Accumulator::finish`].
pub(crate) struct Accumulator<T> {
    dim: usize,
    map: HashMap<Word, T>,
}

impl<T: Scalar> Accumulator<T> {
    pub(crate) fn new(dim: usize) -> Self {
        Accumulator {
            dim,
            map: HashMap::new(),
        }
    }

    pub(crate) fn add_normal(&mut self, w: Word, c: T) {
        match self.map.get_mut(&w) {
            Some(x) => *x = x.clone() + c,
            None => {
                self.map.insert(w, c);
            }
        }
    }

    pub(crate) fn add_word(&mut self, w: &Word, c: &T) {
        if w.is_normal() {
            self.add_normal(w.clone(), c.clone());
            return;
        }
        for (nw, k) in normal_terms(w, self.dim).iter() {
            self.add_normal(nw.clone(), c.clone() * from_int::<T>(*k));
        }
    }

    pub(crate) fn finish(self) -> UeaElement<T> {
        let terms = self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        UeaElement {
            dim: self.dim,
            terms,
        }
    }
}

// Operator sugar. These panic on dimension mismatch; use the `checked_*`
// methods when the dimensions are not known to agree.

impl<T: Scalar> Add for &UeaElement<T> {
    type Output = UeaElement<T>;
    fn add(self, rhs: Self) -> UeaElement<T> {
        self.checked_add(rhs).expect("dimension mismatch in +")
    }
}

impl<T: Scalar> Sub for &UeaElement<T> {
    type Output = UeaElement<T>;
    fn sub(self, rhs: Self) -> UeaElement<T> {
        self.checked_sub(rhs).expect("dimension mismatch in -")
    }
}

impl<T: Scalar> Mul for &UeaElement<T> {
    type Output = UeaElement<T>;
    fn mul(self, rhs: Self) -> UeaElement<T> {
        self.checked_mul(rhs).expect("dimension mismatch in *")
    }
}

impl<T: Scalar> Neg for &UeaElement<T> {
    type Output = UeaElement<T>;
    fn neg(self) -> UeaElement<T> {
        self.scale(&-T::one())
    }
}

impl<T: Scalar> Add for UeaElement<T> {
    type Output = UeaElement<T>;
    fn add(self, rhs: Self) -> UeaElement<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for UeaElement<T> {
    type Output = UeaElement<T>;
    fn sub(self, rhs: Self) -> UeaElement<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for UeaElement<T> {
    type Output = UeaElement<T>;
    fn mul(self, rhs: Self) -> UeaElement<T> {
        &self * &rhs
    }
}

impl<T: Scalar> Neg for UeaElement<T> {
    type Output = UeaElement<T>;
    fn neg(self) -> UeaElement<T> {
        -&self
    }
}

/// Normal form of a word given as generator labels.
pub fn normal_order<T: Scalar>(letters: &[GenIndex], dim: usize) -> Result<UeaElement<T>> {
    if dim == 0 {
        return Err(Error::InvalidDimension(dim));
    }
    let w = Word::from_letters(letters, dim)?;
    Ok(UeaElement::from_words(dim, [(w, T::one())]))
}
