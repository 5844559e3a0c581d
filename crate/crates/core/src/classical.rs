//! The symmetric algebra S(gl_d) with its Lie–Poisson bracket, the classical
//! directional derivative, symmetrization into U(gl_d), and the coefficients
//! of the characteristic polynomial of the generator matrix.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::pbw::{
    check_dim, parse_terms, terms_json, write_terms, Accumulator, ElementJson, GenIndex,
    UeaElement, Word,
};
use crate::scalar::{from_usize, Scalar};
use crate::shift::ShiftMatrix;
use crate::Rational;

/// Polynomial in the commuting variables `e^i_j`.
///
/// Monomials are stored as sorted code words, so `e[2,1]*e[1,2]` and
/// `e[1,2]*e[2,1]` are the same key.
#[derive(Debug, Clone, PartialEq)]
pub struct SymElement<T> {
    dim: usize,
    terms: BTreeMap<Word, T>,
}

fn merge(a: &Word, b: &Word) -> Word {
    let (x, y) = (a.codes(), b.codes());
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() && j < y.len() {
        if x[i] <= y[j] {
            out.push(x[i]);
            i += 1;
        } else {
            out.push(y[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&x[i..]);
    out.extend_from_slice(&y[j..]);
    Word::from_codes(out)
}

impl<T: Scalar> SymElement<T> {
    pub fn zero(dim: usize) -> Self {
        SymElement {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, T::one())
    }

    pub fn constant(dim: usize, c: T) -> Self {
        let mut out = Self::zero(dim);
        out.add_term(Word::empty(), c);
        out
    }

    pub fn generator(row: usize, col: usize, dim: usize) -> Result<Self> {
        let g = GenIndex::new(row, col, dim)?;
        let mut out = Self::zero(dim);
        out.add_term(Word::from_codes(vec![g.code(dim)]), T::one());
        Ok(out)
    }

    /// Sums monomials given as arbitrary letter orders.
    pub fn from_monomials<I>(dim: usize, monomials: I) -> Self
    where
        I: IntoIterator<Item = (Word, T)>,
    {
        let mut out = Self::zero(dim);
        for (w, c) in monomials {
            let mut codes = w.codes().to_vec();
            codes.sort_unstable();
            out.add_term(Word::from_codes(codes), c);
        }
        out
    }

    fn add_term(&mut self, w: Word, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `-1` for zero.
    pub fn degree(&self) -> i64 {
        self.terms.keys().next().map_or(-1, |w| w.len() as i64)
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.degree();
        self.terms.keys().all(|w| w.len() as i64 == d)
    }

    pub fn homogeneous_part(&self, n: usize) -> Self {
        SymElement {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.dim);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = Self::zero(self.dim);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(merge(u, v), a.clone() * b.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::one(self.dim), |acc, _| &acc * self)
    }

    /// Derivative with respect to the variable with the given code.
    fn diff_code(&self, code: u16) -> Self {
        let mut out = Self::zero(self.dim);
        for (w, c) in &self.terms {
            let codes = w.codes();
            let k = codes.iter().filter(|&&x| x == code).count();
            if k == 0 {
                continue;
            }
            let pos = codes.iter().position(|&x| x == code).unwrap();
            let mut rest = codes.to_vec();
            rest.remove(pos);
            out.add_term(Word::from_codes(rest), c.clone() * from_usize::<T>(k));
        }
        out
    }

    fn variables(&self) -> Vec<u16> {
        let mut v: Vec<u16> = self.terms.keys().flat_map(|w| w.codes().to_vec()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `∂^i_j`, the derivation with `∂^i_j(e^p_q) = δ^p_j δ^i_q`.
    pub fn classical_partial(&self, i: usize, j: usize) -> Result<Self> {
        let g = GenIndex::new(j, i, self.dim)?;
        Ok(self.diff_code(g.code(self.dim)))
    }

    /// `{f, g}` with `{e^a_b, e^p_q} = δ^p_b e^a_q − δ^a_q e^p_b`.
    pub fn poisson_bracket(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let d = self.dim;
        let mut out = Self::zero(d);
        let ys = other.variables();
        for x in self.variables() {
            let fx = self.diff_code(x);
            let GenIndex { row: a, col: b } = GenIndex::from_code(x, d);
            for &y in &ys {
                let GenIndex { row: p, col: q } = GenIndex::from_code(y, d);
                let mut br = Self::zero(d);
                if p == b {
                    br.add_term(
                        Word::from_codes(vec![GenIndex { row: a, col: q }.code(d)]),
                        T::one(),
                    );
                }
                if a == q {
                    br.add_term(
                        Word::from_codes(vec![GenIndex { row: p, col: b }.code(d)]),
                        -T::one(),
                    );
                }
                if br.is_zero() {
                    continue;
                }
                let gy = other.diff_code(y);
                out = &out + &(&(&fx * &gy) * &br);
            }
        }
        Ok(out)
    }

    /// Poisson-commutes with every generator.
    pub fn is_poisson_central(&self) -> bool {
        let d = self.dim;
        (1..=d).all(|i| {
            (1..=d).all(|j| {
                let g = Self::generator(i, j, d).expect("index in range");
                self.poisson_bracket(&g).expect("same dimension").is_zero()
            })
        })
    }

    pub fn map_coeffs<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> SymElement<U> {
        let mut out = SymElement::zero(self.dim);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    pub fn to_json(&self) -> ElementJson {
        terms_json(self.dim, self.terms())
    }
}

impl SymElement<Rational> {
    /// Parses the element grammar, multiplying letters commutatively.
    pub fn parse(src: &str, dim: usize) -> Result<Self> {
        let terms = parse_terms(src, dim)?;
        Ok(Self::from_monomials(
            dim,
            terms.into_iter().map(|t| {
                let w = Word::from_letters(&t.letters, dim).expect("indices checked by parser");
                (w, t.coeff)
            }),
        ))
    }
}

impl<T: Scalar> fmt::Display for SymElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.dim, self.terms())
    }
}

macro_rules! sym_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<T: Scalar> $trait for &SymElement<T> {
            type Output = SymElement<T>;
            fn $method(self, rhs: Self) -> SymElement<T> {
                self.$checked(rhs).expect("dimension mismatch")
            }
        }
        impl<T: Scalar> $trait for SymElement<T> {
            type Output = SymElement<T>;
            fn $method(self, rhs: Self) -> SymElement<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

sym_binop!(Add, add, checked_add);
sym_binop!(Sub, sub, checked_sub);
sym_binop!(Mul, mul, checked_mul);

impl<T: Scalar> Neg for &SymElement<T> {
    type Output = SymElement<T>;
    fn neg(self) -> SymElement<T> {
        self.scale(&-T::one())
    }
}

/// `∂_ξ f = Σ ξ[i][j] ∂^i_j f`, so `∂_ξ(e^p_q) = ξ[q][p]`.
pub fn classical_derive<T: Scalar>(
    xi: &ShiftMatrix<T>,
    f: &SymElement<T>,
) -> Result<SymElement<T>> {
    let d = f.dim();
    check_dim(xi.dim(), d)?;
    let mut out = SymElement::zero(d);
    for i in 1..=d {
        for j in 1..=d {
            let x = xi.get(i, j);
            if !x.is_zero() {
                out = &out + &f.classical_partial(i, j)?.scale(x);
            }
        }
    }
    Ok(out)
}

/// `∂_ξ^p f`.
pub fn classical_derive_pow<T: Scalar>(
    xi: &ShiftMatrix<T>,
    f: &SymElement<T>,
    p: usize,
) -> Result<SymElement<T>> {
    let mut out = f.clone();
    for _ in 0..p {
        out = classical_derive(xi, &out)?;
    }
    Ok(out)
}

/// Largest monomial degree [`symmetrize`] accepts.
pub const SYMMETRIZE_MAX_DEGREE: usize = 8;

/// Advances to the next lexicographic arrangement; `false` once exhausted.
fn next_arrangement(v: &mut [u16]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// `σ`: each monomial `x_1⋯x_n` goes to the average over all orderings of
/// the product in U(gl_d).
pub fn symmetrize<T: Scalar>(f: &SymElement<T>) -> Result<UeaElement<T>> {
    let d = f.dim();
    let mut acc = Accumulator::new(d);
    for (w, c) in f.terms() {
        let n = w.len();
        if n > SYMMETRIZE_MAX_DEGREE {
            return Err(Error::DegreeLimit {
                op: "symmetrize",
                degree: n,
                limit: SYMMETRIZE_MAX_DEGREE,
            });
        }
        let mut arrangement = w.codes().to_vec();
        let mut words = Vec::new();
        loop {
            words.push(Word::from_codes(arrangement.clone()));
            if !next_arrangement(&mut arrangement) {
                break;
            }
        }
        // Equal letters make orderings coincide; each distinct arrangement
        // carries the same weight in the n! average.
        let weight = c.clone() / from_usize::<T>(words.len());
        for word in &words {
            acc.add_word(word, &weight);
        }
    }
    Ok(acc.finish())
}

/// Largest dimension [`char_poly_generators`] accepts.
pub const CHAR_POLY_MAX_DIM: usize = 4;

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(Vec::new(), false)];
    }
    let mut out = Vec::new();
    for (p, odd) in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // inserting at `pos` creates n-1-pos inversions
            out.push((q, odd ^ ((n - 1 - pos) % 2 == 1)));
        }
    }
    out
}

/// `I_1..I_d` from `det(e − λ·1) = Σ_k (−1)^{d−k} λ^{d−k} I_k`, i.e. `I_k` is
/// the sum of the principal `k×k` minors of the commutative matrix `e`.
pub fn char_poly_generators<T: Scalar>(d: usize) -> Result<Vec<SymElement<T>>> {
    if d == 0 {
        return Err(Error::InvalidDimension(d));
    }
    if d > CHAR_POLY_MAX_DIM {
        return Err(Error::DegreeLimit {
            op: "char_poly_generators",
            degree: d,
            limit: CHAR_POLY_MAX_DIM,
        });
    }
    let mut out = vec![SymElement::zero(d); d];
    for mask in 1u32..(1 << d) {
        let rows: Vec<usize> = (0..d).filter(|r| mask & (1 << r) != 0).collect();
        let k = rows.len();
        for (perm, odd) in permutations(k) {
            let codes = (0..k)
                .map(|a| {
                    GenIndex {
                        row: rows[a] + 1,
                        col: rows[perm[a]] + 1,
                    }
                    .code(d)
                })
                .collect();
            let sign = if odd { -T::one() } else { T::one() };
            out[k - 1].add_term(Word::from_codes(codes).sorted(), sign);
        }
    }
    Ok(out)
}

/// Image of the highest-filtration part in S(gl_d).
pub fn top_symbol<T: Scalar>(f: &UeaElement<T>) -> Result<SymElement<T>> {
    if f.is_zero() {
        return Err(Error::ZeroElement { op: "top_symbol" });
    }
    Ok(uea_part_symbol(&f.top_part()))
}

/// Forgets the ordering of every word.
pub(crate) fn uea_part_symbol<T: Scalar>(f: &UeaElement<T>) -> SymElement<T> {
    SymElement::from_monomials(f.dim(), f.terms().map(|(w, c)| (w.clone(), c.clone())))
}

/// `{∂_ξ^p f, ∂_ξ^q g} == 0` for Poisson-central `f` and `g`.
pub fn classical_shift_check<T: Scalar>(
    xi: &ShiftMatrix<T>,
    p: usize,
    q: usize,
    f: &SymElement<T>,
    g: &SymElement<T>,
) -> Result<bool> {
    for x in [f, g] {
        if !x.is_poisson_central() {
            return Err(Error::NotPoissonCentral {
                op: "classical_shift_check",
            });
        }
    }
    let a = classical_derive_pow(xi, f, p)?;
    let b = classical_derive_pow(xi, g, q)?;
    Ok(a.poisson_bracket(&b)?.is_zero())
}
