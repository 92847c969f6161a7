//! Lyndon words and the Chen–Fox–Lyndon factorization.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{lex_compare, LetterOrder, Word};

/// Factorization of a word into a non-increasing sequence of Lyndon words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonFactorization {
    pub factors: Vec<Word>,
    /// 0-based start index of each factor in the source word.
    pub starts: Vec<usize>,
    pub order: LetterOrder,
}

impl LyndonFactorization {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `(start, end)` of each factor, end exclusive.
    pub fn ranges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.starts
            .iter()
            .zip(&self.factors)
            .map(|(&s, f)| (s, s + f.len()))
    }

    pub fn concat(&self) -> Word {
        Word::from_symbols(
            self.factors
                .iter()
                .flat_map(|f| f.as_slice().iter().copied())
                .collect(),
        )
    }
}

impl fmt::Display for LyndonFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Duval's algorithm. Returns the `(start, end)` range of every factor.
pub fn factor_ranges(w: &[u8], order: LetterOrder) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut ranges = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && order.rank(w[k]) <= order.rank(w[j]) {
            if order.rank(w[k]) < order.rank(w[j]) {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            ranges.push((i, i + period));
            i += period;
        }
    }
    ranges
}

pub fn lyndon_factorization(w: &Word, order: LetterOrder) -> LyndonFactorization {
    let ranges = factor_ranges(w.as_slice(), order);
    LyndonFactorization {
        factors: ranges.iter().map(|&(s, e)| w.slice(s, e)).collect(),
        starts: ranges.iter().map(|&(s, _)| s).collect(),
        order,
    }
}

/// Primitive and strictly smaller than all of its proper suffixes.
pub fn is_lyndon(w: &Word, order: LetterOrder) -> bool {
    !w.is_empty() && factor_ranges(w.as_slice(), order).len() == 1
}

/// Standard factorization `(u, v)` of a Lyndon word (order `0 < 1`), where
/// `v` is the lexicographically least proper suffix.
pub fn standard_factorization(w: &Word) -> Result<(Word, Word)> {
    if w.len() < 2 || !is_lyndon(w, LetterOrder::ZeroFirst) {
        return Err(Error::NotLyndon(w.clone()));
    }
    // The least suffix of a word is the last factor of its Lyndon factorization.
    let tail = &w.as_slice()[1..];
    let (last_start, _) = *factor_ranges(tail, LetterOrder::ZeroFirst)
        .last()
        .expect("nonempty");
    let split = last_start + 1;
    let (u, v) = (w.slice(0, split), w.slice(split, w.len()));

    if cfg!(debug_assertions) && w.len() <= 256 {
        debug_assert_eq!(
            Some(split),
            longest_proper_lyndon_suffix(w),
            "least proper suffix differs from longest proper Lyndon suffix for {w}"
        );
        debug_assert!(is_lyndon(&u, LetterOrder::ZeroFirst));
    }
    Ok((u, v))
}

/// Start index of the longest proper suffix that is Lyndon (quadratic).
fn longest_proper_lyndon_suffix(w: &Word) -> Option<usize> {
    (1..w.len()).find(|&i| is_lyndon(&w.slice(i, w.len()), LetterOrder::ZeroFirst))
}

/// Lyndon by definition: strictly smaller than every proper suffix.
/// Quadratic; used to cross-check Duval.
pub fn is_lyndon_naive(w: &[u8], order: LetterOrder) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| lex_compare(w, &w[i..], order) == Ordering::Less)
}
