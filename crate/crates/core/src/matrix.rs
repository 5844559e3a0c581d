//! Matrices with entries in U(gl_d): the generator matrix `e`, its powers,
//! the central traces τ_k, and closed forms for commutators of power entries.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pbw::{check_dim, ElementJson, GenIndex, UeaElement, Word};
use crate::scalar::Scalar;
use crate::shift::ShiftMatrix;

/// A d×d matrix over U(gl_d). Public accessors are 1-based.
#[derive(Debug, Clone, PartialEq)]
pub struct ElementMatrix<T> {
    dim: usize,
    entries: Vec<UeaElement<T>>,
}

fn check_index(i: usize, dim: usize) -> Result<()> {
    if i == 0 || i > dim {
        return Err(Error::IndexOutOfRange {
            row: i,
            col: i,
            dim,
        });
    }
    Ok(())
}

fn check_pair(i: usize, j: usize, dim: usize) -> Result<()> {
    GenIndex::new(i, j, dim).map(|_| ())
}

impl<T: Scalar> ElementMatrix<T> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> UeaElement<T>) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 1..=dim {
            for j in 1..=dim {
                let x = f(i, j);
                debug_assert_eq!(x.dim(), dim);
                entries.push(x);
            }
        }
        ElementMatrix { dim, entries }
    }

    pub fn try_from_fn(
        dim: usize,
        mut f: impl FnMut(usize, usize) -> Result<UeaElement<T>>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 1..=dim {
            for j in 1..=dim {
                let x = f(i, j)?;
                check_dim(dim, x.dim())?;
                entries.push(x);
            }
        }
        Ok(ElementMatrix { dim, entries })
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| UeaElement::zero(dim))
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| {
            if i == j {
                UeaElement::one(dim)
            } else {
                UeaElement::zero(dim)
            }
        })
    }

    /// Constant matrix with the scalar entries of `xi`.
    pub fn from_shift(xi: &ShiftMatrix<T>) -> Self {
        let d = xi.dim();
        Self::from_fn(d, |i, j| UeaElement::constant(d, xi.get(i, j).clone()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &UeaElement<T> {
        &self.entries[(row - 1) * self.dim + (col - 1)]
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &UeaElement<T>)> {
        let d = self.dim;
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, x)| ((k / d + 1, k % d + 1), x))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(UeaElement::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        self.zip(other, UeaElement::checked_add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        self.zip(other, UeaElement::checked_sub)
    }

    fn zip(
        &self,
        other: &Self,
        f: impl Fn(&UeaElement<T>, &UeaElement<T>) -> Result<UeaElement<T>>,
    ) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ElementMatrix {
            dim: self.dim,
            entries,
        })
    }

    /// Matrix product; entries multiply in U(gl_d) in the order `A[i][k]·B[k][j]`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let d = self.dim;
        Ok(Self::from_fn(d, |i, j| {
            (1..=d).fold(UeaElement::zero(d), |acc, k| {
                &acc + &(self.get(i, k) * other.get(k, j))
            })
        }))
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)?
            .checked_sub(&other.checked_mul(self)?)
    }

    /// `ξ·A` for a scalar matrix ξ.
    pub fn left_scale(&self, xi: &ShiftMatrix<T>) -> Result<Self> {
        check_dim(self.dim, xi.dim())?;
        let d = self.dim;
        Ok(Self::from_fn(d, |i, j| {
            (1..=d).fold(UeaElement::zero(d), |acc, k| {
                &acc + &self.get(k, j).scale(xi.get(i, k))
            })
        }))
    }

    /// Every entry multiplied on the left by `a`.
    pub fn element_scale(&self, a: &UeaElement<T>) -> Result<Self> {
        check_dim(self.dim, a.dim())?;
        Ok(Self::from_fn(self.dim, |i, j| a * self.get(i, j)))
    }

    pub fn trace(&self) -> UeaElement<T> {
        (1..=self.dim).fold(UeaElement::zero(self.dim), |acc, k| &acc + self.get(k, k))
    }

    /// `tr(ξ·A)` without forming the product.
    pub fn trace_with(&self, xi: &ShiftMatrix<T>) -> Result<UeaElement<T>> {
        check_dim(self.dim, xi.dim())?;
        let d = self.dim;
        let mut out = UeaElement::zero(d);
        for i in 1..=d {
            for k in 1..=d {
                let c = xi.get(i, k);
                if !c.is_zero() {
                    out = &out + &self.get(k, i).scale(c);
                }
            }
        }
        Ok(out)
    }

    pub fn map_coeffs<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> ElementMatrix<U> {
        ElementMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x.map_coeffs(&mut f)).collect(),
        }
    }

    /// Row-major nested arrays of element JSON.
    pub fn to_json(&self) -> MatrixJson {
        MatrixJson(
            (1..=self.dim)
                .map(|i| (1..=self.dim).map(|j| self.get(i, j).to_json()).collect())
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixJson(pub Vec<Vec<ElementJson>>);

/// The matrix `e` with entry `(i, j)` equal to the generator `e^i_j`.
pub fn generator_matrix<T: Scalar>(d: usize) -> Result<ElementMatrix<T>> {
    if d == 0 {
        return Err(Error::InvalidDimension(d));
    }
    ElementMatrix::try_from_fn(d, |i, j| UeaElement::generator(i, j, d))
}

/// `(e^n)^i_j`, computed from its defining sum
/// `Σ e^i_{k1} e^{k1}_{k2} ⋯ e^{k_{n-1}}_j` over all `d^{n-1}` index paths.
pub fn power_entry<T: Scalar>(n: usize, i: usize, j: usize, d: usize) -> Result<UeaElement<T>> {
    if d == 0 {
        return Err(Error::InvalidDimension(d));
    }
    check_pair(i, j, d)?;
    if n == 0 {
        return Ok(if i == j {
            UeaElement::one(d)
        } else {
            UeaElement::zero(d)
        });
    }
    let mut words = Vec::with_capacity(d.pow(n as u32 - 1));
    let mut path = vec![1usize; n - 1];
    loop {
        let mut codes = Vec::with_capacity(n);
        let mut row = i;
        for &k in &path {
            codes.push(GenIndex { row, col: k }.code(d));
            row = k;
        }
        codes.push(GenIndex { row, col: j }.code(d));
        words.push((Word::from_codes(codes), T::one()));

        // odometer over the inner indices
        let mut pos = 0;
        loop {
            if pos == path.len() {
                return Ok(UeaElement::from_words(d, words));
            }
            path[pos] += 1;
            if path[pos] <= d {
                break;
            }
            path[pos] = 1;
            pos += 1;
        }
    }
}

/// All entries of `e^n` by path expansion.
pub fn power_matrix<T: Scalar>(n: usize, d: usize) -> Result<ElementMatrix<T>> {
    if d == 0 {
        return Err(Error::InvalidDimension(d));
    }
    ElementMatrix::try_from_fn(d, |i, j| power_entry(n, i, j, d))
}

/// `e^n` by repeated matrix multiplication `e^{k+1} = e^k · e`.
pub fn power_matrix_recursive<T: Scalar>(n: usize, d: usize) -> Result<ElementMatrix<T>> {
    let e = generator_matrix::<T>(d)?;
    let mut out = ElementMatrix::identity(d);
    for _ in 0..n {
        out = out.checked_mul(&e)?;
    }
    Ok(out)
}

/// Central element `τ_k = tr(e^k)`.
pub fn tau<T: Scalar>(k: usize, d: usize) -> Result<UeaElement<T>> {
    if k == 0 {
        return Err(Error::InvalidArgument("tau needs k >= 1".into()));
    }
    (1..=d).try_fold(UeaElement::zero(d), |acc, i| {
        Ok(&acc + &power_entry(k, i, i, d)?)
    })
}

/// `tr(ξ·(e^k)^T) = Σ_{i,j} ξ^i_j (e^k)^i_j`.
pub fn xi_twisted_trace<T: Scalar>(xi: &ShiftMatrix<T>, k: usize) -> Result<UeaElement<T>> {
    let d = xi.dim();
    let mut out = UeaElement::zero(d);
    for i in 1..=d {
        for j in 1..=d {
            let c = xi.get(i, j);
            if !c.is_zero() {
                out = &out + &power_entry::<T>(k, i, j, d)?.scale(c);
            }
        }
    }
    Ok(out)
}

fn kronecker<T: Scalar>(a: usize, b: usize, d: usize) -> UeaElement<T> {
    if a == b {
        UeaElement::one(d)
    } else {
        UeaElement::zero(d)
    }
}

/// Closed form `δ^k_j (e^p)^i_ℓ − (e^p)^k_j δ^i_ℓ` of both
/// `[(e^p)^i_j, e^k_ℓ]` and `[e^i_j, (e^p)^k_ℓ]`.
pub fn power_commutator_oracle_3<T: Scalar>(
    p: usize,
    (i, j, k, l): (usize, usize, usize, usize),
    d: usize,
) -> Result<UeaElement<T>> {
    for x in [i, j, k, l] {
        check_index(x, d)?;
    }
    let a = &kronecker::<T>(k, j, d) * &power_entry(p, i, l, d)?;
    let b = &power_entry(p, k, j, d)? * &kronecker(i, l, d);
    Ok(&a - &b)
}

/// Closed form of `[(e^m)^i_j, (e^n)^k_ℓ]`:
/// `Σ_{a=1}^{min(m,n)} (e^{a-1})^k_j (e^{m+n-a})^i_ℓ − (e^{m+n-a})^k_j (e^{a-1})^i_ℓ`.
pub fn power_commutator_oracle_4<T: Scalar>(
    m: usize,
    n: usize,
    (i, j, k, l): (usize, usize, usize, usize),
    d: usize,
) -> Result<UeaElement<T>> {
    for x in [i, j, k, l] {
        check_index(x, d)?;
    }
    let mut out = UeaElement::zero(d);
    for a in 1..=m.min(n) {
        let lo = a - 1;
        let hi = m + n - a;
        let plus = &power_entry::<T>(lo, k, j, d)? * &power_entry(hi, i, l, d)?;
        let minus = &power_entry::<T>(hi, k, j, d)? * &power_entry(lo, i, l, d)?;
        out = &out + &(&plus - &minus);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type E = UeaElement<Rational>;

    fn p(s: &str, d: usize) -> E {
        E::parse(s, d).unwrap()
    }

    #[test]
    fn generator_matrix_examples() {
        let e1 = generator_matrix::<Rational>(1).unwrap();
        assert_eq!(e1.get(1, 1), &p("e[1,1]", 1));
        let e2 = generator_matrix::<Rational>(2).unwrap();
        assert_eq!(e2.get(1, 2), &p("e[1,2]", 2));
        assert_eq!(e2.trace(), p("e[1,1] + e[2,2]", 2));
        assert!(generator_matrix::<Rational>(0).is_err());
    }

    #[test]
    fn power_entry_examples() {
        assert!(power_entry::<Rational>(0, 1, 2, 2).unwrap().is_zero());
        assert_eq!(power_entry::<Rational>(0, 1, 1, 2).unwrap(), E::one(2));
        assert_eq!(power_entry::<Rational>(1, 2, 1, 3).unwrap(), p("e[2,1]", 3));
        // e^1_1 e^1_1 + e^1_2 e^2_1, both words already normal
        assert_eq!(
            power_entry::<Rational>(2, 1, 1, 2).unwrap(),
            p("e[1,1]*e[1,1] + e[1,2]*e[2,1]", 2)
        );
        assert!(power_entry::<Rational>(2, 3, 1, 2).is_err());
    }

    #[test]
    fn expansion_matches_recursive_powers() {
        for d in 1..=3 {
            for n in 0..=4 {
                assert_eq!(
                    power_matrix::<Rational>(n, d).unwrap(),
                    power_matrix_recursive::<Rational>(n, d).unwrap(),
                    "n={n} d={d}"
                );
            }
        }
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau::<Rational>(1, 2).unwrap(), p("e[1,1] + e[2,2]", 2));
        let t2 = tau::<Rational>(2, 2).unwrap();
        let t3 = tau::<Rational>(3, 2).unwrap();
        assert!(t2.commutator(&p("e[1,2]", 2)).unwrap().is_zero());
        assert!(t2.commutator(&t3).unwrap().is_zero());
        assert!(tau::<Rational>(0, 2).is_err());
    }

    #[test]
    fn twisted_trace_examples() {
        let id = ShiftMatrix::<Rational>::identity(3).unwrap();
        for k in 1..=3 {
            assert_eq!(xi_twisted_trace(&id, k).unwrap(), tau(k, 3).unwrap());
        }
        let xi = ShiftMatrix::parse("diag:2,1").unwrap();
        assert_eq!(xi_twisted_trace(&xi, 1).unwrap(), p("2*e[1,1] + e[2,2]", 2));
        assert_eq!(
            xi_twisted_trace(&xi, 0).unwrap(),
            E::constant(2, xi.trace())
        );
    }

    #[test]
    fn oracle_3_examples() {
        let d = 2;
        let got = power_commutator_oracle_3::<Rational>(2, (1, 1, 1, 2), d).unwrap();
        assert_eq!(got, power_entry(2, 1, 2, d).unwrap());
        let got = power_commutator_oracle_3::<Rational>(2, (1, 2, 2, 1), d).unwrap();
        let want =
            &power_entry::<Rational>(2, 1, 1, d).unwrap() - &power_entry(2, 2, 2, d).unwrap();
        assert_eq!(got, want);
        let brute = power_entry::<Rational>(2, 1, 2, d)
            .unwrap()
            .commutator(&p("e[2,1]", d))
            .unwrap();
        assert_eq!(brute, want);
    }

    #[test]
    fn oracle_4_empty_sum() {
        assert!(power_commutator_oracle_4::<Rational>(0, 3, (1, 1, 2, 2), 2)
            .unwrap()
            .is_zero());
        assert!(power_commutator_oracle_4::<Rational>(2, 0, (1, 2, 2, 1), 2)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn matrix_ops() {
        let e = generator_matrix::<Rational>(2).unwrap();
        let xi = ShiftMatrix::parse("full:[[1,2],[3,4]]").unwrap();
        let direct = e.left_scale(&xi).unwrap().trace();
        assert_eq!(e.trace_with(&xi).unwrap(), direct);
        let c = e.commutator(&e).unwrap();
        assert!(c.is_zero());
        assert_eq!(e.transpose().transpose(), e);
    }
}
