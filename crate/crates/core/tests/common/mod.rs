//! Test-side oracles and random generators. Nothing here calls the
//! library's rewriting or quasi-derivation code.
#![allow(dead_code)]

use std::collections::HashMap;

use argshift::{Element, GenIndex, Rational, Shift, Sym, Word};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn qq(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

pub fn gen(i: usize, j: usize, d: usize) -> Element {
    Element::generator(i, j, d).unwrap()
}

pub fn code(i: usize, j: usize, d: usize) -> u16 {
    ((i - 1) * d + (j - 1)) as u16
}

pub fn decode(c: u16, d: usize) -> (usize, usize) {
    (c as usize / d + 1, c as usize % d + 1)
}

/// `[e^a_b, e^p_q]` straight from the defining relation, as (code, coeff).
pub fn relation(x: u16, y: u16, d: usize) -> Vec<(u16, i64)> {
    let (a, b) = decode(x, d);
    let (p, qq) = decode(y, d);
    let mut out = Vec::new();
    if p == b {
        out.push((code(a, qq, d), 1));
    }
    if a == qq {
        out.push((code(p, b, d), -1));
    }
    out
}

/// Normal ordering by rewriting a uniformly random descent at every step.
/// Returns a map from sorted code vectors to integer coefficients.
pub fn random_order_normalize(word: &[u16], d: usize, rng: &mut Rng8) -> HashMap<Vec<u16>, i64> {
    let mut done: HashMap<Vec<u16>, i64> = HashMap::new();
    let mut work: Vec<(Vec<u16>, i64)> = vec![(word.to_vec(), 1)];
    while let Some((w, c)) = work.pop() {
        let descents: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&k| w[k] > w[k + 1])
            .collect();
        let Some(&k) = descents.choose(rng) else {
            *done.entry(w).or_insert(0) += c;
            continue;
        };
        let mut swapped = w.clone();
        swapped.swap(k, k + 1);
        work.push((swapped, c));
        for (z, s) in relation(w[k], w[k + 1], d) {
            let mut shorter = w[..k].to_vec();
            shorter.push(z);
            shorter.extend_from_slice(&w[k + 2..]);
            work.push((shorter, c * s));
        }
    }
    done.retain(|_, c| *c != 0);
    done
}

pub fn element_as_int_map(x: &Element) -> HashMap<Vec<u16>, i64> {
    x.terms()
        .map(|(w, c)| {
            assert!(c.is_integer());
            (w.codes().to_vec(), c.to_integer().try_into().unwrap())
        })
        .collect()
}

pub fn random_word(rng: &mut Rng8, d: usize, max_len: usize) -> Vec<u16> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..(d * d) as u16)).collect()
}

pub fn random_coeff(rng: &mut Rng8) -> Rational {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-4i64..=4);
    }
    qq(n, rng.gen_range(1i64..=3))
}

/// Sum of up to `max_terms` random (unordered) words of length ≤ `max_deg`.
pub fn random_element(rng: &mut Rng8, d: usize, max_terms: usize, max_deg: usize) -> Element {
    let n = rng.gen_range(1..=max_terms);
    let words: Vec<(Word, Rational)> = (0..n)
        .map(|_| {
            (
                Word::from_codes(random_word(rng, d, max_deg)),
                random_coeff(rng),
            )
        })
        .collect();
    Element::from_words(d, words)
}

pub fn random_sym(rng: &mut Rng8, d: usize, max_terms: usize, max_deg: usize) -> Sym {
    let n = rng.gen_range(1..=max_terms);
    let words: Vec<(Word, Rational)> = (0..n)
        .map(|_| {
            (
                Word::from_codes(random_word(rng, d, max_deg)),
                random_coeff(rng),
            )
        })
        .collect();
    Sym::from_monomials(d, words)
}

/// Dense rational matrix with small entries.
pub fn random_dense_shift(rng: &mut Rng8, d: usize) -> Shift {
    let entries = (0..d * d)
        .map(|_| qq(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=3)))
        .collect();
    Shift::new(d, entries).unwrap()
}

/// Diagonal with pairwise distinct rational entries.
pub fn random_regular_diag(rng: &mut Rng8, d: usize) -> Shift {
    loop {
        let v: Vec<Rational> = (0..d)
            .map(|_| qq(rng.gen_range(-7i64..=7), rng.gen_range(1i64..=4)))
            .collect();
        let distinct = (0..d).all(|a| (a + 1..d).all(|b| v[a] != v[b]));
        if distinct {
            return Shift::diag(v).unwrap();
        }
    }
}

/// Quasi-derivative of an arbitrary word, by splitting off the first letter
/// and applying the twisted product rule with the explicit generator values.
/// The word is never normal ordered, so this is independent of the PBW
/// basis; the result is an unordered sum of words.
pub fn oracle_partial(
    bar: bool,
    i: usize,
    j: usize,
    word: &[u16],
    d: usize,
) -> HashMap<Vec<u16>, Rational> {
    let mut out: HashMap<Vec<u16>, Rational> = HashMap::new();
    let add = |w: Vec<u16>, c: Rational, out: &mut HashMap<Vec<u16>, Rational>| {
        *out.entry(w).or_insert_with(Rational::zero) += c;
    };
    if word.is_empty() {
        return out;
    }
    let x = word[0];
    let rest = &word[1..];
    let (p, qx) = decode(x, d);
    // ∂(x)·R
    if p == j && i == qx {
        add(rest.to_vec(), q(1), &mut out);
    }
    // x·∂R
    for (w, c) in oracle_partial(bar, i, j, rest, d) {
        let mut lifted = vec![x];
        lifted.extend(w);
        add(lifted, c, &mut out);
    }
    // correction Σ_k
    for k in 1..=d {
        let (dx, r_i, r_j, sign) = if bar {
            // −∂̄^i_k x · ∂̄^k_j R
            ((p == k && i == qx) as i64, k, j, -1)
        } else {
            // ∂̂^k_j x · ∂̂^i_k R
            ((p == j && k == qx) as i64, i, k, 1)
        };
        if dx == 0 {
            continue;
        }
        for (w, c) in oracle_partial(bar, r_i, r_j, rest, d) {
            add(w, c * q(sign), &mut out);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn oracle_partial_element(bar: bool, i: usize, j: usize, f: &Element) -> Element {
    let d = f.dim();
    let mut words = Vec::new();
    for (w, c) in f.terms() {
        for (u, k) in oracle_partial(bar, i, j, w.codes(), d) {
            words.push((Word::from_codes(u), c.clone() * k));
        }
    }
    Element::from_words(d, words)
}

pub fn letters(word: &[u16], d: usize) -> Vec<GenIndex> {
    word.iter()
        .map(|&c| {
            let (row, col) = decode(c, d);
            GenIndex { row, col }
        })
        .collect()
}
