//! PBW normal ordering by leftmost-descent rewriting.
//!
//! A word `A·x·y·B` with `x > y` rewrites to `A·y·x·B + A·[x,y]·B`. The
//! leftmost descent is always rewritten first. Each step either lowers the
//! number of inversions at fixed length or shortens the word, so the process
//! terminates. Normal forms of words have integer coefficients and are
//! memoized per dimension.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::word::{bracket_codes, Word};

pub(crate) type IntTerms = Arc<Vec<(Word, i128)>>;

type Cache = RwLock<HashMap<usize, HashMap<Word, IntTerms>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Drops every memoized normal form.
pub fn clear_normal_order_cache() {
    cache().write().unwrap().clear();
}

fn leftmost_descent(w: &[u16]) -> Option<usize> {
    w.windows(2).position(|p| p[0] > p[1])
}

/// Normal form of an arbitrary word, as integer-coefficient normal words.
pub(crate) fn normal_terms(word: &Word, dim: usize) -> IntTerms {
    let Some(pos) = leftmost_descent(&word.0) else {
        return Arc::new(vec![(word.clone(), 1)]);
    };
    if let Some(hit) = cache().read().unwrap().get(&dim).and_then(|m| m.get(word)) {
        return hit.clone();
    }

    let w = &word.0;
    let (x, y) = (w[pos], w[pos + 1]);
    let mut acc: HashMap<Word, i128> = HashMap::new();

    let mut swapped = w.clone();
    swapped.swap(pos, pos + 1);
    for (nw, c) in normal_terms(&Word(swapped), dim).iter() {
        *acc.entry(nw.clone()).or_insert(0) += c;
    }

    for (z, c) in bracket_codes(x, y, dim) {
        let mut shorter = Vec::with_capacity(w.len() - 1);
        shorter.extend_from_slice(&w[..pos]);
        shorter.push(z);
        shorter.extend_from_slice(&w[pos + 2..]);
        for (nw, c2) in normal_terms(&Word(shorter), dim).iter() {
            *acc.entry(nw.clone()).or_insert(0) += c * c2;
        }
    }

    let mut terms: Vec<(Word, i128)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    let terms = Arc::new(terms);
    cache()
        .write()
        .unwrap()
        .entry(dim)
        .or_default()
        .insert(word.clone(), terms.clone());
    terms
}
