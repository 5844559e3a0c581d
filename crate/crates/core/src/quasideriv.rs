//! Quasi-derivations `∂̂^i_j` and `∂̄^i_j` on U(gl_d), the matrix operator
//! `D̂` with `D̂(f)[a][b] = ∂̂^b_a f`, and the directional operator
//! `∂̂_ξ = tr(ξ·D̂) = Σ ξ[i][j] ∂̂^i_j`.
//!
//! Both variants satisfy `∂(1) = 0` and `∂^i_j(e^p_q) = δ^p_j δ^i_q` and
//! differ in the correction term of the product rule:
//!
//! ```text
//! ∂̂^i_j(fg) = ∂̂^i_j f·g + f·∂̂^i_j g + Σ_k ∂̂^k_j f·∂̂^i_k g
//! ∂̄^i_j(fg) = ∂̄^i_j f·g + f·∂̄^i_j g − Σ_k ∂̄^i_k f·∂̄^k_j g
//! ```
//!
//! On a normal word `x·R` with `x = e^p_q` these reduce to
//!
//! ```text
//! ∂̂^i_j(xR) = δ^p_j δ^i_q R + x·∂̂^i_j R + δ^p_j ∂̂^i_q R
//! ∂̄^i_j(xR) = δ^p_j δ^i_q R + x·∂̄^i_j R − δ^i_q ∂̄^p_j R
//! ```
//!
//! which is what the memoized word recursion evaluates.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::matrix::{power_matrix, tau, ElementMatrix};
use crate::pbw::normal::{normal_terms, IntTerms};
use crate::pbw::{check_dim, Accumulator, GenIndex, UeaElement, Word};
use crate::scalar::{from_int, Scalar};
use crate::shift::ShiftMatrix;

/// Which product rule the quasi-derivation obeys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Hat,
    Bar,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Hat => "hat",
            Variant::Bar => "bar",
        })
    }
}

type Key = (Variant, usize, u8, u8, Word);
type Cache = RwLock<HashMap<Key, IntTerms>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Drops every memoized quasi-derivative.
pub fn clear_quasi_cache() {
    cache().write().unwrap().clear();
}

fn add_scaled(acc: &mut HashMap<Word, i128>, terms: &[(Word, i128)], c: i128) {
    for (w, k) in terms {
        *acc.entry(w.clone()).or_insert(0) += c * k;
    }
}

/// `∂^i_j` of a normal word, as integer-coefficient normal words.
pub(crate) fn word_partial(
    variant: Variant,
    i: usize,
    j: usize,
    word: &Word,
    dim: usize,
) -> IntTerms {
    if word.is_empty() {
        return Arc::new(Vec::new());
    }
    let key = (variant, dim, i as u8, j as u8, word.clone());
    if let Some(hit) = cache().read().unwrap().get(&key) {
        return hit.clone();
    }

    let x = word.0[0];
    let rest = Word(word.0[1..].to_vec());
    let GenIndex { row: p, col: q } = GenIndex::from_code(x, dim);
    let mut acc: HashMap<Word, i128> = HashMap::new();

    if p == j && i == q {
        acc.insert(rest.clone(), 1);
    }
    for (w, c) in word_partial(variant, i, j, &rest, dim).iter() {
        let mut codes = Vec::with_capacity(w.len() + 1);
        codes.push(x);
        codes.extend_from_slice(&w.0);
        let lifted = Word(codes);
        if lifted.is_normal() {
            *acc.entry(lifted).or_insert(0) += c;
        } else {
            add_scaled(&mut acc, &normal_terms(&lifted, dim), *c);
        }
    }
    match variant {
        Variant::Hat if p == j => add_scaled(&mut acc, &word_partial(variant, i, q, &rest, dim), 1),
        Variant::Bar if i == q => {
            add_scaled(&mut acc, &word_partial(variant, p, j, &rest, dim), -1)
        }
        _ => {}
    }

    let mut terms: Vec<(Word, i128)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let terms = Arc::new(terms);
    cache().write().unwrap().insert(key, terms.clone());
    terms
}

/// `∂^i_j f` for either variant.
pub fn partial<T: Scalar>(
    variant: Variant,
    i: usize,
    j: usize,
    f: &UeaElement<T>,
) -> Result<UeaElement<T>> {
    let d = f.dim();
    GenIndex::new(i, j, d)?;
    let mut acc = Accumulator::new(d);
    for (w, c) in f.terms() {
        for (nw, k) in word_partial(variant, i, j, w, d).iter() {
            acc.add_normal(nw.clone(), c.clone() * from_int::<T>(*k));
        }
    }
    Ok(acc.finish())
}

/// `∂̂^i_j f`.
pub fn quasi_derive<T: Scalar>(i: usize, j: usize, f: &UeaElement<T>) -> Result<UeaElement<T>> {
    partial(Variant::Hat, i, j, f)
}

/// `∂̄^i_j f`.
pub fn bar_quasi_derive<T: Scalar>(i: usize, j: usize, f: &UeaElement<T>) -> Result<UeaElement<T>> {
    partial(Variant::Bar, i, j, f)
}

/// `D(f)` with entry `(a, b)` equal to `∂^b_a f`, so that
/// `tr(ξ·D(f)) = Σ ξ[i][j] ∂^i_j f`.
pub fn matrix_quasi_derive<T: Scalar>(f: &UeaElement<T>, variant: Variant) -> ElementMatrix<T> {
    ElementMatrix::from_fn(f.dim(), |a, b| {
        partial(variant, b, a, f).expect("indices in range")
    })
}

/// `∂_ξ f = tr(ξ·D(f))`.
pub fn directional_derive<T: Scalar>(
    xi: &ShiftMatrix<T>,
    f: &UeaElement<T>,
    variant: Variant,
) -> Result<UeaElement<T>> {
    let d = f.dim();
    check_dim(xi.dim(), d)?;
    let mut acc = Accumulator::new(d);
    for i in 1..=d {
        for j in 1..=d {
            let x = xi.get(i, j);
            if x.is_zero() {
                continue;
            }
            for (w, c) in f.terms() {
                let cx = c.clone() * x.clone();
                for (nw, k) in word_partial(variant, i, j, w, d).iter() {
                    acc.add_normal(nw.clone(), cx.clone() * from_int::<T>(*k));
                }
            }
        }
    }
    Ok(acc.finish())
}

/// `∂_ξ^p f`.
pub fn directional_power<T: Scalar>(
    xi: &ShiftMatrix<T>,
    f: &UeaElement<T>,
    p: usize,
    variant: Variant,
) -> Result<UeaElement<T>> {
    let mut out = f.clone();
    for _ in 0..p {
        if out.is_zero() {
            break;
        }
        out = directional_derive(xi, &out, variant)?;
    }
    Ok(out)
}

/// Sign of a [`PlusMinusPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmSign {
    Plus,
    Minus,
}

/// `f^{(n)}_±(x) = ((x+1)^n ± (x−1)^n) / 2`, stored by its integer
/// coefficients in increasing degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlusMinusPoly {
    pub sign: PmSign,
    pub n: usize,
    pub coeffs: Vec<i128>,
}

impl PlusMinusPoly {
    pub fn new(sign: PmSign, n: usize) -> Self {
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut binom: i128 = 1;
        for m in 0..=n {
            let odd = (n - m) % 2 == 1;
            let keep = match sign {
                PmSign::Plus => !odd,
                PmSign::Minus => odd,
            };
            coeffs.push(if keep { binom } else { 0 });
            binom = binom * (n - m) as i128 / (m + 1) as i128;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PlusMinusPoly { sign, n, coeffs }
    }

    pub fn plus(n: usize) -> Self {
        Self::new(PmSign::Plus, n)
    }

    pub fn minus(n: usize) -> Self {
        Self::new(PmSign::Minus, n)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_int(&self, x: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, c| acc * x + c)
    }

    /// `f(e)` for the generator matrix `e` of U(gl_d).
    pub fn eval_generator_matrix<T: Scalar>(&self, d: usize) -> Result<ElementMatrix<T>> {
        let mut out = ElementMatrix::zeros(d);
        for (m, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let pm = power_matrix::<T>(m, d)?;
                let c = from_int::<T>(c);
                out = out.checked_add(&ElementMatrix::from_fn(d, |a, b| pm.get(a, b).scale(&c)))?;
            }
        }
        Ok(out)
    }
}

/// Compositions of `total` into `parts` ordered nonnegative parts.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut tail in compositions(total - first, parts - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Closed form of `D((e^n)^i_j)`, computed without any quasi-derivative.
///
/// For [`Variant::Bar`] it is the `f^{(k)}_±` expression
///
/// ```text
/// D̄((e^n)^i_j)[a][b] = Σ_{m<n} (e^m)^b_j f^{(n−m−1)}_+(e)^i_a − (e^m)^i_j f^{(n−m−1)}_−(e)^b_a
/// ```
///
/// For [`Variant::Hat`] no polynomial in `e` suffices (already at `n = 2`
/// the answer contains `d·δ^i_a δ^b_j`); the closed form involves the central
/// traces, with `τ_0 = d`:
///
/// ```text
/// D̂((e^n)^i_j)[a][b] = Σ_{k≥1} Σ_{m+r_1+…+r_{k−1}+s=n−k} (e^m)^i_a τ_{r_1}⋯τ_{r_{k−1}} (e^s)^b_j
/// ```
pub fn power_formula_oracle<T: Scalar>(
    n: usize,
    i: usize,
    j: usize,
    d: usize,
    variant: Variant,
) -> Result<ElementMatrix<T>> {
    if d == 0 {
        return Err(Error::InvalidDimension(d));
    }
    GenIndex::new(i, j, d)?;
    let powers = (0..n.max(1))
        .map(|m| power_matrix::<T>(m, d))
        .collect::<Result<Vec<_>>>()?;
    match variant {
        Variant::Bar => {
            let mut out = ElementMatrix::zeros(d);
            for (m, em) in powers.iter().enumerate().take(n) {
                let fp = PlusMinusPoly::plus(n - m - 1).eval_generator_matrix::<T>(d)?;
                let fm = PlusMinusPoly::minus(n - m - 1).eval_generator_matrix::<T>(d)?;
                let term = ElementMatrix::from_fn(d, |a, b| {
                    &(em.get(b, j) * fp.get(i, a)) - &(em.get(i, j) * fm.get(b, a))
                });
                out = out.checked_add(&term)?;
            }
            Ok(out)
        }
        Variant::Hat => {
            let mut taus = vec![UeaElement::constant(d, from_int::<T>(d as i128))];
            for r in 1..n {
                taus.push(tau(r, d)?);
            }
            Ok(ElementMatrix::from_fn(d, |a, b| {
                let mut acc = UeaElement::zero(d);
                for k in 1..=n {
                    for parts in compositions(n - k, k + 1) {
                        let m = parts[0];
                        let s = parts[k];
                        let mut x = powers[m].get(i, a).clone();
                        for &r in &parts[1..k] {
                            x = &x * &taus[r];
                        }
                        acc = &acc + &(&x * powers[s].get(b, j));
                    }
                }
                acc
            }))
        }
    }
}

/// Writes `D̂(f) = Σ_k a_k·(e^k)^T` for central `f`, with central `a_k`.
///
/// Returns `(k, a_k)` for `k = 0..deg f`; each `a_k` is a polynomial in
/// `τ_1..τ_d`. The coefficients come from an exact linear solve and the
/// result is checked by re-expansion before it is returned.
pub fn central_decomposition<T: Scalar>(f: &UeaElement<T>) -> Result<Vec<(usize, UeaElement<T>)>> {
    let d = f.dim();
    if !f.is_central() {
        return Err(Error::NotCentral {
            op: "central_decomposition",
        });
    }
    let deg = f.degree();
    if deg <= 0 {
        return Ok(Vec::new());
    }
    let deg = deg as usize;
    let target = matrix_quasi_derive(f, Variant::Hat);

    let taus = (1..=d)
        .map(|r| tau::<T>(r, d))
        .collect::<Result<Vec<_>>>()?;
    let powers_t = (0..deg)
        .map(|k| Ok(power_matrix::<T>(k, d)?.transpose()))
        .collect::<Result<Vec<_>>>()?;

    // unknown (k, τ-monomial) -> the matrix τ^μ (e^k)^T
    let mut unknowns: Vec<(usize, UeaElement<T>, ElementMatrix<T>)> = Vec::new();
    for (k, ekt) in powers_t.iter().enumerate() {
        for mono in tau_monomials(&taus, deg - 1 - k, d) {
            let m = ekt.element_scale(&mono)?;
            unknowns.push((k, mono, m));
        }
    }

    let columns: Vec<HashMap<(usize, usize, Word), T>> =
        unknowns.iter().map(|(_, _, m)| flatten(m)).collect();
    let rhs = flatten(&target);
    let solution = solve(&columns, &rhs).ok_or_else(|| {
        Error::DecompositionFailed("no central coefficients reproduce D(f)".into())
    })?;

    let mut coeffs: Vec<UeaElement<T>> = vec![UeaElement::zero(d); deg];
    for ((k, mono, _), c) in unknowns.iter().zip(&solution) {
        if !c.is_zero() {
            coeffs[*k] = &coeffs[*k] + &mono.scale(c);
        }
    }

    let mut check = ElementMatrix::zeros(d);
    for (k, a) in coeffs.iter().enumerate() {
        check = check.checked_add(&powers_t[k].element_scale(a)?)?;
    }
    if check != target {
        return Err(Error::DecompositionFailed(
            "re-expansion does not match D(f)".into(),
        ));
    }
    Ok(coeffs.into_iter().enumerate().collect())
}

/// Products `τ_1^{c_1}⋯τ_d^{c_d}` with `Σ r·c_r ≤ budget`, including `1`.
fn tau_monomials<T: Scalar>(taus: &[UeaElement<T>], budget: usize, d: usize) -> Vec<UeaElement<T>> {
    fn go<T: Scalar>(
        taus: &[UeaElement<T>],
        start: usize,
        budget: usize,
        cur: UeaElement<T>,
        out: &mut Vec<UeaElement<T>>,
    ) {
        out.push(cur.clone());
        for r in start..taus.len() {
            let w = r + 1;
            if w <= budget {
                go(taus, r, budget - w, &cur * &taus[r], out);
            }
        }
    }
    let mut out = Vec::new();
    go(taus, 0, budget, UeaElement::one(d), &mut out);
    out
}

fn flatten<T: Scalar>(m: &ElementMatrix<T>) -> HashMap<(usize, usize, Word), T> {
    let mut out = HashMap::new();
    for ((a, b), x) in m.entries() {
        for (w, c) in x.terms() {
            out.insert((a, b, w.clone()), c.clone());
        }
    }
    out
}

/// Exact solve of `Σ x_c·column_c = rhs`; free unknowns are
/// set to zero. `None` if inconsistent.
fn solve<K: std::hash::Hash + Eq + Clone, T: Scalar>(
    columns: &[HashMap<K, T>],
    rhs: &HashMap<K, T>,
) -> Option<Vec<T>> {
    let mut keys: Vec<K> = Vec::new();
    let mut index: HashMap<K, usize> = HashMap::new();
    for map in columns.iter().chain(std::iter::once(rhs)) {
        for k in map.keys() {
            if !index.contains_key(k) {
                index.insert(k.clone(), keys.len());
                keys.push(k.clone());
            }
        }
    }
    let n = columns.len();
    let mut rows = vec![vec![T::zero(); n + 1]; keys.len()];
    for (c, map) in columns.iter().enumerate() {
        for (k, v) in map {
            rows[index[k]][c] = v.clone();
        }
    }
    for (k, v) in rhs {
        rows[index[k]][n] = v.clone();
    }

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&p| !rows[p][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one() / rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for q in 0..rows.len() {
            if q != r && !rows[q][c].is_zero() {
                let factor = rows[q][c].clone();
                for x in 0..=n {
                    let sub = rows[r][x].clone() * factor.clone();
                    rows[q][x] = rows[q][x].clone() - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![T::zero(); n];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = rows[row][n].clone();
    }
    Some(x)
}
