//! Numerical coefficient matrices ξ.

use std::fmt;

use crate::error::{Error, Result};
use crate::pbw::parse_rational;
use crate::scalar::Scalar;
use crate::Rational;

/// A d×d scalar matrix, entries indexed 1-based as `(row, col)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftMatrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Scalar> ShiftMatrix<T> {
    /// Row-major entries.
    pub fn new(dim: usize, entries: Vec<T>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(dim));
        }
        if entries.len() != dim * dim {
            return Err(Error::InvalidArgument(format!(
                "{} entries given for a {dim}x{dim} matrix",
                entries.len()
            )));
        }
        Ok(ShiftMatrix { dim, entries })
    }

    pub fn diag(values: Vec<T>) -> Result<Self> {
        let d = values.len();
        let mut entries = vec![T::zero(); d * d];
        for (k, v) in values.into_iter().enumerate() {
            entries[k * d + k] = v;
        }
        Self::new(d, entries)
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::diag(vec![T::one(); dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[(row - 1) * self.dim + (col - 1)]
    }

    pub fn trace(&self) -> T {
        (1..=self.dim).fold(T::zero(), |acc, k| acc + self.get(k, k).clone())
    }

    pub fn is_diagonal(&self) -> bool {
        (1..=self.dim).all(|i| (1..=self.dim).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<T> {
        (1..=self.dim).map(|k| self.get(k, k).clone()).collect()
    }

    /// Diagonal with pairwise distinct diagonal entries.
    pub fn is_regular_diagonal(&self) -> bool {
        self.require_regular_diagonal("is_regular_diagonal").is_ok()
    }

    pub(crate) fn require_regular_diagonal(&self, op: &'static str) -> Result<()> {
        if !self.is_diagonal() {
            return Err(Error::IrregularShift {
                op,
                reason: "matrix is not diagonal".into(),
            });
        }
        let diag = self.diagonal();
        for a in 0..diag.len() {
            for b in a + 1..diag.len() {
                if diag[a] == diag[b] {
                    return Err(Error::IrregularShift {
                        op,
                        reason: format!("diagonal entries {} and {} coincide", a + 1, b + 1),
                    });
                }
            }
        }
        Ok(())
    }

    /// `π·ξ·π⁻¹` for the permutation matrix of `perm` (0-based images):
    /// entry `(π(i), π(j))` of the result is entry `(i, j)` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let d = self.dim;
        if perm.len() != d {
            return Err(Error::DimensionMismatch {
                left: d,
                right: perm.len(),
            });
        }
        let mut entries = vec![T::zero(); d * d];
        for i in 0..d {
            for j in 0..d {
                entries[perm[i] * d + perm[j]] = self.entries[i * d + j].clone();
            }
        }
        Self::new(d, entries)
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> ShiftMatrix<U> {
        ShiftMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl ShiftMatrix<Rational> {
    /// Parses `diag:a,b,...` or `full:[[a,b],[c,d]]` (a flat row-major
    /// `full:[a,b,c,d]` is accepted too). Entries are rationals `p/q`.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if let Some(rest) = spec.strip_prefix("diag:") {
            let values = rest
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            return Self::diag(values);
        }
        if let Some(rest) = spec.strip_prefix("full:") {
            let flat: String = rest.chars().filter(|c| !matches!(c, '[' | ']')).collect();
            let values = flat
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            let d = (values.len() as f64).sqrt().round() as usize;
            if d * d != values.len() {
                return Err(Error::InvalidArgument(format!(
                    "full matrix needs a square number of entries, got {}",
                    values.len()
                )));
            }
            return Self::new(d, values);
        }
        Err(Error::InvalidArgument(format!(
            "shift matrix must start with `diag:` or `full:`, got {spec:?}"
        )))
    }
}

impl<T: Scalar> fmt::Display for ShiftMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_diagonal() {
            f.write_str("diag:")?;
            for (k, v) in self.diagonal().iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            return Ok(());
        }
        f.write_str("full:[")?;
        for i in 1..=self.dim {
            if i > 1 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 1..=self.dim {
                if j > 1 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
