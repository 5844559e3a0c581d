//! Text and JSON forms of elements.
//!
//! Grammar (whitespace is ignored between tokens):
//!
//! ```text
//! element := ['+'|'-'] term (('+'|'-') term)*
//! term    := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
//! factor  := 'e[' int ',' int ']'
//! coeff   := int | int '/' int
//! ```
//!
//! Printing emits the PBW-normal form with terms in canonical order, longest
//! words first and lexicographic within a length, e.g.
//! `3/2*e[1,2]*e[2,1] - e[1,1]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::element::UeaElement;
use super::word::{GenIndex, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Rational;

/// One parsed summand: coefficient times a (possibly unordered) word.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedTerm {
    pub coeff: Rational,
    pub letters: Vec<GenIndex>,
}

pub(crate) fn write_terms<'a, T, I>(f: &mut fmt::Formatter<'_>, dim: usize, terms: I) -> fmt::Result
where
    T: Scalar,
    I: IntoIterator<Item = (&'a Word, &'a T)>,
{
    let mut first = true;
    for (w, c) in terms {
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let a = c.abs();
        if w.is_empty() {
            write!(f, "{a}")?;
            continue;
        }
        if !a.is_one() {
            write!(f, "{a}*")?;
        }
        for (k, g) in w.letters(dim).enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{g}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl<T: Scalar> fmt::Display for UeaElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.dim(), self.terms())
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
    dim: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, dim: usize) -> Self {
        Parser {
            src,
            chars: src.char_indices().collect(),
            pos: 0,
            dim,
        }
    }

    fn error(&self, at: usize, message: impl Into<String>) -> Error {
        let byte = self.chars.get(at).map_or(self.src.len(), |c| c.0);
        let before = &self.src[..byte];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(self.pos, format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(self.pos, format!("expected '{want}', found end of input"))),
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(start, "expected an integer"));
        }
        let text: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(BigInt::from_str(&text).expect("digits parse"))
    }

    fn index(&mut self) -> Result<usize> {
        let at = self.pos;
        let v = self.int()?;
        usize::try_from(v).map_err(|_| self.error(at, "index too large"))
    }

    fn coeff(&mut self) -> Result<Rational> {
        let num = self.int()?;
        self.skip_ws();
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let den = self.int()?;
            if den.is_zero() {
                return Err(self.error(at, "zero denominator"));
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn factor(&mut self) -> Result<GenIndex> {
        self.skip_ws();
        let at = self.pos;
        self.expect('e')?;
        self.expect('[')?;
        let row = self.index()?;
        self.expect(',')?;
        let col = self.index()?;
        self.expect(']')?;
        GenIndex::new(row, col, self.dim).map_err(|e| self.error(at, e.to_string()))
    }

    fn factors(&mut self, letters: &mut Vec<GenIndex>) -> Result<()> {
        letters.push(self.factor()?);
        loop {
            self.skip_ws();
            if self.peek() != Some('*') {
                return Ok(());
            }
            self.pos += 1;
            letters.push(self.factor()?);
        }
    }

    fn term(&mut self) -> Result<ParsedTerm> {
        self.skip_ws();
        let mut letters = Vec::new();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.coeff()?;
                self.skip_ws();
                if self.peek() == Some('*') {
                    self.pos += 1;
                    self.factors(&mut letters)?;
                }
                Ok(ParsedTerm { coeff, letters })
            }
            Some('e') => {
                self.factors(&mut letters)?;
                Ok(ParsedTerm {
                    coeff: Rational::one(),
                    letters,
                })
            }
            Some(c) => Err(self.error(self.pos, format!("unexpected '{c}'"))),
            None => Err(self.error(self.pos, "unexpected end of input")),
        }
    }

    fn element(&mut self) -> Result<Vec<ParsedTerm>> {
        let mut out = Vec::new();
        self.skip_ws();
        let mut negative = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            negative = c == '-';
            self.pos += 1;
        }
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            out.push(t);
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some(c @ ('+' | '-')) => {
                    negative = c == '-';
                    self.pos += 1;
                }
                Some(c) => {
                    return Err(self.error(self.pos, format!("expected '+' or '-', found '{c}'")))
                }
            }
        }
    }
}

/// Parses the text grammar into raw terms, checking indices against `dim`.
pub fn parse_terms(src: &str, dim: usize) -> Result<Vec<ParsedTerm>> {
    if dim == 0 {
        return Err(Error::InvalidDimension(dim));
    }
    Parser::new(src, dim).element()
}

/// Parses a rational `p`, `-p`, `p/q` or `-p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::InvalidArgument(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    BigInt::from_str(t)
        .map(Rational::from_integer)
        .map_err(|_| bad())
}

impl UeaElement<Rational> {
    /// Parses and normal orders an element of U(gl_dim).
    pub fn parse(src: &str, dim: usize) -> Result<Self> {
        let terms = parse_terms(src, dim)?;
        let words = terms.into_iter().map(|t| {
            let w = Word::from_letters(&t.letters, dim).expect("indices checked by parser");
            (w, t.coeff)
        });
        Ok(UeaElement::from_words(dim, words))
    }

    pub fn from_json(json: &ElementJson) -> Result<Self> {
        let d = json.d;
        if d == 0 {
            return Err(Error::InvalidDimension(d));
        }
        let mut words = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            let letters: Vec<GenIndex> = t
                .word
                .iter()
                .map(|&[row, col]| GenIndex { row, col })
                .collect();
            words.push((Word::from_letters(&letters, d)?, parse_rational(&t.coeff)?));
        }
        Ok(UeaElement::from_words(d, words))
    }
}

impl FromStr for UeaElement<Rational> {
    type Err = Error;

    /// Parses `d:<element>`, e.g. `2:e[1,2]*e[2,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let (d, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidArgument("expected `<dim>:<element>`".into()))?;
        let d = d
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad dimension {d:?}")))?;
        Self::parse(rest, d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub word: Vec<[usize; 2]>,
}

/// `{ "d": int, "terms": [ { "coeff": "p/q", "word": [[row,col],...] } ] }`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub d: usize,
    pub terms: Vec<TermJson>,
}

pub(crate) fn terms_json<'a, T, I>(dim: usize, terms: I) -> ElementJson
where
    T: Scalar,
    I: IntoIterator<Item = (&'a Word, &'a T)>,
{
    ElementJson {
        d: dim,
        terms: terms
            .into_iter()
            .map(|(w, c)| TermJson {
                coeff: c.to_string(),
                word: w.letters(dim).map(|g| [g.row, g.col]).collect(),
            })
            .collect(),
    }
}

impl<T: Scalar> UeaElement<T> {
    pub fn to_json(&self) -> ElementJson {
        terms_json(self.dim(), self.terms())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = UeaElement<Rational>;

    #[test]
    fn prints_canonical_form() {
        let x = E::parse("3/2*e[1,2]*e[2,1] - e[1,1]", 2).unwrap();
        assert_eq!(x.to_string(), "3/2*e[1,2]*e[2,1] - e[1,1]");
        let y = E::parse("e[2,1]*e[1,2]", 2).unwrap();
        assert_eq!(y.to_string(), "e[1,2]*e[2,1] - e[1,1] + e[2,2]");
        assert_eq!(E::zero(2).to_string(), "0");
        assert_eq!(E::parse("-2", 2).unwrap().to_string(), "-2");
        assert_eq!(
            E::parse("1 + 2*e[1,1]*e[1,1]", 2).unwrap().to_string(),
            "2*e[1,1]*e[1,1] + 1"
        );
    }

    #[test]
    fn parses_whitespace_and_signs() {
        let a = E::parse("  - e[1, 1] +\n 1/2 * e[2,2] ", 2).unwrap();
        assert_eq!(a.to_string(), "-e[1,1] + 1/2*e[2,2]");
        assert!(E::parse("e[1,1] - e[1,1]", 2).unwrap().is_zero());
        assert!(E::parse("0", 3).unwrap().is_zero());
    }

    #[test]
    fn reports_line_and_column() {
        match E::parse("e[1,1] +\n  e[1,x]", 2) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 7)),
            other => panic!("unexpected {other:?}"),
        }
        match E::parse("e[1,3]", 2) {
            Err(Error::Parse {
                line,
                column,
                message,
            }) => {
                assert_eq!((line, column), (1, 1));
                assert!(message.contains("out of range"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(E::parse("", 2).is_err());
        assert!(E::parse("e[1,1] e[2,2]", 2).is_err());
        assert!(E::parse("1/0", 2).is_err());
        assert!(E::parse("2*3", 2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = E::parse("3/2*e[1,2]*e[2,1] - e[1,1] + 4", 2).unwrap();
        let j = x.to_json();
        assert_eq!(j.terms[0].coeff, "3/2");
        assert_eq!(j.terms[0].word, vec![[1, 2], [2, 1]]);
        let text = serde_json::to_string(&j).unwrap();
        let back: ElementJson = serde_json::from_str(&text).unwrap();
        assert_eq!(E::from_json(&back).unwrap(), x);
    }

    #[test]
    fn from_str_with_dimension_prefix() {
        let x: E = "3:e[3,1]".parse().unwrap();
        assert_eq!(x.dim(), 3);
    }

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("-3/6").unwrap(),
            Rational::new((-1).into(), 2.into())
        );
        assert_eq!(
            parse_rational(" 7 ").unwrap(),
            Rational::from_integer(7.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
