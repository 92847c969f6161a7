//! Balance, digital convexity, and minimal forbidden words.
//!
//! A word is upward digitally convex iff every factor of its Lyndon
//! factorization (order `0 < 1`) is a primitive lower Christoffel word, and
//! downward digitally convex iff every factor of its Lyndon factorization
//! for `1 < 0` is a primitive upper Christoffel word.

use std::collections::{BTreeSet, HashSet};

use crate::christoffel::{christoffel_lower, christoffel_upper, primitive_lower_of_len};
use crate::lyndon::{factor_ranges, standard_factorization};
use crate::word::{LetterOrder, Parikh, Word};

/// For every length, the number of `1`s in any two factors of that length
/// differs by at most one.
pub fn is_balanced(w: &Word) -> bool {
    let s = w.as_slice();
    let n = s.len();
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(0usize);
    for &x in s {
        prefix.push(prefix.last().unwrap() + x as usize);
    }
    for len in 1..n {
        let (mut lo, mut hi) = (usize::MAX, 0);
        for i in 0..=n - len {
            let ones = prefix[i + len] - prefix[i];
            lo = lo.min(ones);
            hi = hi.max(ones);
            if hi - lo > 1 {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Upward,
    Downward,
}

impl Direction {
    pub fn letter_order(self) -> LetterOrder {
        match self {
            Direction::Upward => LetterOrder::ZeroFirst,
            Direction::Downward => LetterOrder::OneFirst,
        }
    }
}

/// Occurrence `w[start..end]` of a Lyndon factor that is not a primitive
/// Christoffel word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub start: usize,
    pub end: usize,
    pub factor: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityReport {
    pub direction: Direction,
    /// First offending Lyndon factor; `None` iff the word is convex.
    pub witness: Option<Witness>,
}

impl ConvexityReport {
    pub fn is_convex(&self) -> bool {
        self.witness.is_none()
    }
}

/// Whether a Lyndon factor equals the primitive Christoffel word of its
/// own Parikh vector (lower for upward, upper for downward).
fn is_christoffel_factor(factor: &[u8], direction: Direction) -> bool {
    let p = Word::from(factor).parikh();
    if !p.is_coprime() {
        return false;
    }
    let expected = match direction {
        Direction::Upward => christoffel_lower(p),
        Direction::Downward => christoffel_upper(p),
    };
    expected.is_ok_and(|c| c.as_slice() == factor)
}

fn first_bad_factor(w: &Word, direction: Direction) -> Option<(usize, usize)> {
    let s = w.as_slice();
    factor_ranges(s, direction.letter_order())
        .into_iter()
        .find(|&(start, end)| !is_christoffel_factor(&s[start..end], direction))
}

pub fn is_digitally_convex(w: &Word, direction: Direction) -> ConvexityReport {
    ConvexityReport {
        direction,
        witness: first_bad_factor(w, direction).map(|(start, end)| Witness {
            start,
            end,
            factor: w.slice(start, end),
        }),
    }
}

/// Boolean form of [`is_digitally_convex`].
pub fn is_convex(w: &Word, direction: Direction) -> bool {
    first_bad_factor(w, direction).is_none()
}

/// Upward digital convexity, the default sense.
pub fn is_dc(w: &Word) -> bool {
    is_convex(w, Direction::Upward)
}

/// Minimal forbidden words of the factor language of `w`, up to `max_len`:
/// words `xvy` with `xv` and `vy` factors of `w` but `xvy` not a factor.
pub fn mfw_of_word(w: &Word, max_len: usize) -> BTreeSet<Word> {
    let s = w.as_slice();
    let mut factors: HashSet<&[u8]> = HashSet::new();
    for len in 0..=max_len.min(s.len()) {
        factors.extend(w.factors_of_len(len));
    }
    let mut out = BTreeSet::new();
    for len in 1..=max_len {
        // candidates extend a factor of length len-1 by one letter
        for prefix in w.factors_of_len(len - 1).collect::<HashSet<_>>() {
            for y in [0u8, 1] {
                let mut cand = prefix.to_vec();
                cand.push(y);
                if !factors.contains(cand.as_slice()) && factors.contains(&cand[1..]) {
                    out.insert(Word::from_symbols(cand));
                }
            }
        }
    }
    out
}

/// Non-coprime pairs `(a,b)` with `a, b >= 1` and `a + b = n`.
fn non_primitive_pairs(n: usize) -> impl Iterator<Item = Parikh> {
    (1..n)
        .map(move |a| Parikh::new(a, n - a))
        .filter(|p| !p.is_coprime())
}

/// Swaps the end letters: `xvy -> yvx`.
fn swap_ends(w: &Word) -> Word {
    let n = w.len();
    let mut s = w.as_slice().to_vec();
    s.swap(0, n - 1);
    Word::from_symbols(s)
}

/// Minimal forbidden words of length `n` of the balanced language: `yvx`
/// for every non-primitive Christoffel word `xvy` with distinct end letters.
pub fn mfw_balanced(n: usize) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    if n < 2 {
        return out;
    }
    for p in non_primitive_pairs(n) {
        let lower = christoffel_lower(p).expect("nonzero");
        out.insert(swap_ends(&lower.reverse()));
        out.insert(swap_ends(&lower));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MfwConstruction {
    /// `u(uv)^k v` over standard factorizations `(u,v)` of primitive lower
    /// Christoffel words, `k >= 1`.
    Provencal,
    /// `0w1` for every non-primitive Christoffel word `1w0`.
    #[default]
    Complement,
}

/// Minimal forbidden words of length `n` of the upward digitally convex language.
pub fn mfw_dc(n: usize, construction: MfwConstruction) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    if n < 2 {
        return out;
    }
    match construction {
        MfwConstruction::Complement => {
            for p in non_primitive_pairs(n) {
                let upper = christoffel_upper(p).expect("nonzero");
                out.insert(swap_ends(&upper));
            }
        }
        MfwConstruction::Provencal => {
            // |u(uv)^k v| = (k+1)|uv|, so |uv| is a proper divisor of n.
            for m in (2..n).filter(|m| n.is_multiple_of(*m)) {
                let k = n / m - 1;
                for w in primitive_lower_of_len(m) {
                    let (u, v) = standard_factorization(&w).expect("Christoffel words are Lyndon");
                    out.insert(u.concat(&w.repeat(k)).concat(&v));
                }
            }
        }
    }
    out
}
