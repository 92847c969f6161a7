//! Christoffel words, central words and their two factorizations.
//!
//! The lower Christoffel word `w_{a,b}` encodes the lattice path from `(0,0)`
//! to `(a,b)` that stays as close as possible to the segment joining them
//! from below without crossing it; the upper word is its reversal. When
//! `gcd(a,b) = 1` the word is primitive and has the form `0C1` with `C` a
//! central word.

use num_integer::Integer;

use crate::convexity::is_balanced;
use crate::error::{Error, Result};
use crate::lyndon::standard_factorization;
use crate::word::{Parikh, Word};

/// Greedy path for coprime (or degenerate) `(a,b)`: at `(x,y)` step up iff
/// the point `(x, y+1)` is on or below the segment.
fn greedy_path(a: usize, b: usize) -> Word {
    let mut symbols = Vec::with_capacity(a + b);
    let (mut x, mut y) = (0usize, 0usize);
    while x < a || y < b {
        let up = y < b && (x == a || (y + 1) * a <= x * b);
        if up {
            symbols.push(1);
            y += 1;
        } else {
            symbols.push(0);
            x += 1;
        }
    }
    Word::from_symbols(symbols)
}

/// Lower Christoffel word `w_{a,b}`. For `d = gcd(a,b) > 1` this is
/// `(w_{a/d,b/d})^d`.
pub fn christoffel_lower(p: Parikh) -> Result<Word> {
    if p.is_empty() {
        return Err(Error::ZeroParikh);
    }
    let d = p.gcd();
    Ok(greedy_path(p.zeros / d, p.ones / d).repeat(d))
}

/// Upper Christoffel word `W_{a,b}`, the reversal of the lower one.
pub fn christoffel_upper(p: Parikh) -> Result<Word> {
    christoffel_lower(p).map(|w| w.reverse())
}

/// Primitive lower Christoffel words of length `n` that start with `0`:
/// the single letter `0` for `n = 1`, otherwise `w_{a,b}` for every coprime
/// `a + b = n`, ordered by increasing slope.
pub fn primitive_lower_of_len(n: usize) -> Vec<Word> {
    match n {
        0 => Vec::new(),
        1 => vec![Word::letter_power(0, 1)],
        _ => (1..n)
            .rev()
            .map(|a| Parikh::new(a, n - a))
            .filter(Parikh::is_coprime)
            .map(|p| greedy_path(p.zeros, p.ones))
            .collect(),
    }
}

/// Christoffel status of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChristoffelClass {
    /// A single letter, both lower and upper.
    Letter,
    /// `0C1` with `C` central.
    PrimitiveLower,
    /// `1C0` with `C` central.
    PrimitiveUpper,
    /// `root^exponent` with `exponent >= 2` and `root` a primitive
    /// Christoffel word (possibly a single letter).
    Power {
        root: Word,
        exponent: usize,
    },
    NotChristoffel,
}

fn is_primitive_christoffel(w: &Word) -> bool {
    w.len() == 1 || (is_balanced(w) && w.is_unbordered())
}

pub fn classify_christoffel(w: &Word) -> ChristoffelClass {
    if w.is_empty() {
        return ChristoffelClass::NotChristoffel;
    }
    if w.len() == 1 {
        return ChristoffelClass::Letter;
    }
    if is_primitive_christoffel(w) {
        return if w.first() == Some(0) {
            ChristoffelClass::PrimitiveLower
        } else {
            ChristoffelClass::PrimitiveUpper
        };
    }
    match w.primitive_root() {
        Some((root, exponent)) if exponent >= 2 && is_primitive_christoffel(&root) => {
            ChristoffelClass::Power { root, exponent }
        }
        _ => ChristoffelClass::NotChristoffel,
    }
}

fn require_coprime_positive(p: Parikh) -> Result<()> {
    if p.zeros == 0 || p.ones == 0 {
        Err(Error::ZeroComponent(p))
    } else if !p.is_coprime() {
        Err(Error::NotCoprime(p))
    } else {
        Ok(())
    }
}

/// The central word `C` with `w_{a,b} = 0C1`.
pub fn central_word(p: Parikh) -> Result<Word> {
    require_coprime_positive(p)?;
    let w = greedy_path(p.zeros, p.ones);
    Ok(w.slice(1, w.len() - 1))
}

/// A word with coprime periods `p`, `q` and length `p + q - 2`.
///
/// The empty word is central (periods 1 and 1), as `w_{1,1} = 0·ε·1`.
pub fn is_central(w: &Word) -> bool {
    let n = w.len();
    // Periods >= |w| hold vacuously, so p ranges over 1..=n+1.
    let by_periods = (1..=n + 1).any(|p| {
        let q = n + 2 - p;
        p <= q && p.gcd(&q) == 1 && w.has_period(p) && w.has_period(q)
    });
    debug_assert_eq!(
        by_periods,
        classify_christoffel(
            &Word::letter_power(0, 1)
                .concat(w)
                .concat(&Word::letter_power(1, 1))
        ) == ChristoffelClass::PrimitiveLower,
        "central-word characterizations disagree on {w}"
    );
    by_periods
}

/// Structure of a central word `C`: either a letter power, or
/// `C = P·01·Q = Q·10·P` with palindromes `P`, `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralDecomposition {
    pub central: Word,
    /// `(P, Q)`; `None` when `C` is a power of a single letter.
    pub palindromes: Option<(Word, Word)>,
}

impl CentralDecomposition {
    pub fn is_degenerate(&self) -> bool {
        self.palindromes.is_none()
    }
}

pub fn central_decomposition(c: &Word) -> Result<CentralDecomposition> {
    if !is_central(c) {
        return Err(Error::NotCentral(c.clone()));
    }
    let s = c.as_slice();
    if s.windows(2).all(|p| p[0] == p[1]) {
        return Ok(CentralDecomposition {
            central: c.clone(),
            palindromes: None,
        });
    }
    let n = c.len();
    let palindromes = (0..n - 1)
        .filter(|&i| s[i] == 0 && s[i + 1] == 1)
        .map(|i| (c.slice(0, i), c.slice(i + 2, n)))
        .find(|(p, q)| {
            p.is_palindrome()
                && q.is_palindrome()
                && q.concat(&Word::from(&[1u8, 0][..])).concat(p) == *c
        })
        .expect("a non-degenerate central word has a P01Q = Q10P decomposition");
    Ok(CentralDecomposition {
        central: c.clone(),
        palindromes: Some(palindromes),
    })
}

/// Standard and palindromic factorizations of a primitive lower Christoffel
/// word, with the lattice points `S` and `S'` where they split the path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorizations {
    pub standard: (Word, Word),
    pub palindromic: (Word, Word),
    /// End of the first standard factor; the interior path vertex closest to the segment.
    pub s_point: (usize, usize),
    /// End of the first palindrome; the path vertex farthest from the segment.
    pub s_prime_point: (usize, usize),
}

pub fn factorizations(w: &Word) -> Result<Factorizations> {
    if w.len() < 2 || classify_christoffel(w) != ChristoffelClass::PrimitiveLower {
        return Err(Error::NotChristoffel(w.clone()));
    }
    let (u, v) = standard_factorization(w)?;
    // 0C1 = 0Q1·0P1 = 0P0·1Q1, so the palindromic split sits at |0P1|.
    let split = v.len();
    let palindromic = (w.slice(0, split), w.slice(split, w.len()));
    debug_assert!(palindromic.0.is_palindrome() && palindromic.1.is_palindrome());
    Ok(Factorizations {
        s_point: w.point_after(u.len()),
        s_prime_point: w.point_after(split),
        standard: (u, v),
        palindromic,
    })
}

fn mod_inverse(x: usize, m: usize) -> usize {
    let g = (x as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(g.gcd, 1);
    g.x.rem_euclid(m as i64) as usize
}

/// `(a', b')`: the inverses of `a` and `b` modulo `a + b`, taken in
/// `1..a+b`. Both are periods of the central word of `w_{a,b}`.
pub fn central_periods(p: Parikh) -> Result<(usize, usize)> {
    require_coprime_positive(p)?;
    let m = p.len();
    if m == 2 {
        return Ok((1, 1));
    }
    Ok((mod_inverse(p.zeros, m), mod_inverse(p.ones, m)))
}
