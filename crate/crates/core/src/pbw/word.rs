use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Generator label `e[row,col]` of gl_d, 1-based.
///
/// Generators are totally ordered lexicographically on `(row, col)`; this is
/// the order used for PBW normal words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenIndex {
    pub row: usize,
    pub col: usize,
}

impl GenIndex {
    pub fn new(row: usize, col: usize, dim: usize) -> Result<Self> {
        let g = GenIndex { row, col };
        g.check(dim)?;
        Ok(g)
    }

    pub fn check(self, dim: usize) -> Result<()> {
        if self.row == 0 || self.col == 0 || self.row > dim || self.col > dim {
            return Err(Error::IndexOutOfRange {
                row: self.row,
                col: self.col,
                dim,
            });
        }
        Ok(())
    }

    /// Flat code `(row-1)*dim + (col-1)`.
    pub fn code(self, dim: usize) -> u16 {
        ((self.row - 1) * dim + (self.col - 1)) as u16
    }

    pub fn from_code(code: u16, dim: usize) -> Self {
        let c = code as usize;
        GenIndex {
            row: c / dim + 1,
            col: c % dim + 1,
        }
    }
}

impl fmt::Display for GenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[{},{}]", self.row, self.col)
    }
}

/// A word in the generators, stored as flat codes.
///
/// Words are ordered longest first, then lexicographically on codes. Element
/// term maps iterate in this order, which is also the canonical print order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub(crate) Vec<u16>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_codes(codes: Vec<u16>) -> Self {
        Word(codes)
    }

    pub fn from_letters(letters: &[GenIndex], dim: usize) -> Result<Self> {
        letters
            .iter()
            .map(|g| g.check(dim).map(|_| g.code(dim)))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn codes(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self, dim: usize) -> impl Iterator<Item = GenIndex> + '_ {
        self.0.iter().map(move |&c| GenIndex::from_code(c, dim))
    }

    /// PBW-normal iff letters are weakly increasing.
    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub(crate) fn sorted(mut self) -> Word {
        self.0.sort_unstable();
        self
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .0
            .len()
            .cmp(&self.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Structure constants of the defining relation
/// `[e^a_b, e^p_q] = δ^p_b e^a_q − δ^a_q e^p_b`, as (code, coefficient) pairs.
pub(crate) fn bracket_codes(x: u16, y: u16, dim: usize) -> impl Iterator<Item = (u16, i128)> {
    let GenIndex { row: a, col: b } = GenIndex::from_code(x, dim);
    let GenIndex { row: p, col: q } = GenIndex::from_code(y, dim);
    let first = (p == b).then(|| (GenIndex { row: a, col: q }.code(dim), 1));
    let second = (a == q).then(|| (GenIndex { row: p, col: b }.code(dim), -1));
    first.into_iter().chain(second)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_round_trip() {
        for dim in 1..=4 {
            for row in 1..=dim {
                for col in 1..=dim {
                    let g = GenIndex::new(row, col, dim).unwrap();
                    assert_eq!(GenIndex::from_code(g.code(dim), dim), g);
                }
            }
        }
    }

    #[test]
    fn code_order_matches_generator_order() {
        let dim = 3;
        let all: Vec<GenIndex> = (1..=dim)
            .flat_map(|r| (1..=dim).map(move |c| GenIndex { row: r, col: c }))
            .collect();
        for a in &all {
            for b in &all {
                assert_eq!(a.cmp(b), a.code(dim).cmp(&b.code(dim)));
            }
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(GenIndex::new(0, 1, 2).is_err());
        assert!(GenIndex::new(3, 1, 2).is_err());
        assert!(GenIndex::new(2, 2, 2).is_ok());
    }

    #[test]
    fn words_sort_longest_first() {
        let a = Word(vec![0, 1]);
        let b = Word(vec![3]);
        let c = Word(vec![]);
        let mut v = vec![c.clone(), b.clone(), a.clone()];
        v.sort();
        assert_eq!(v, vec![a, b, c]);
    }
}
