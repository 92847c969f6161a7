//! Binary words and their elementary predicates.
//!
//! A [`Word`] is a finite sequence over `{0,1}`. Read as a lattice path from
//! the origin, `0` is a horizontal unit step and `1` a vertical one, so the
//! [`Parikh`] vector of a word is the endpoint of its path.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Total order on the two letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum LetterOrder {
    /// `0 < 1`, the default throughout.
    #[default]
    ZeroFirst,
    /// `1 < 0`.
    OneFirst,
}

impl LetterOrder {
    /// Rank of `symbol` under this order (0 for the smaller letter).
    #[inline]
    pub fn rank(self, symbol: u8) -> u8 {
        match self {
            LetterOrder::ZeroFirst => symbol,
            LetterOrder::OneFirst => 1 - symbol,
        }
    }

    /// The smaller letter.
    #[inline]
    pub fn least(self) -> u8 {
        self.rank(0)
    }
}

/// A finite binary word. Every stored byte is `0` or `1`.
///
/// The derived `Ord` is the lexicographic order for `0 < 1` with a proper
/// prefix ordered before its extensions, which is also the order of the
/// textual forms.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<u8>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from raw symbols.
    ///
    /// # Panics
    /// If a symbol is neither 0 nor 1.
    pub fn from_symbols(symbols: Vec<u8>) -> Self {
        assert!(symbols.iter().all(|&s| s <= 1), "symbols must be 0 or 1");
        Word { symbols }
    }

    /// `symbol` repeated `n` times.
    pub fn letter_power(symbol: u8, n: usize) -> Self {
        Word::from_symbols(vec![symbol; n])
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }

    /// Symbol at 0-based index `i`.
    #[inline]
    pub fn at(&self, i: usize) -> u8 {
        self.symbols[i]
    }

    pub fn first(&self) -> Option<u8> {
        self.symbols.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.symbols.last().copied()
    }

    /// The factor `w[start..end]` (0-based, end exclusive).
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word {
            symbols: self.symbols[start..end].to_vec(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Word { symbols }
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word {
            symbols: self.symbols.repeat(n),
        }
    }

    pub fn parikh(&self) -> Parikh {
        let ones = self.symbols.iter().filter(|&&s| s == 1).count();
        Parikh::new(self.len() - ones, ones)
    }

    pub fn slope(&self) -> Result<Slope> {
        Slope::try_from(self.parikh())
    }

    pub fn reverse(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word { symbols }
    }

    pub fn complement(&self) -> Word {
        Word {
            symbols: self.symbols.iter().map(|&s| 1 - s).collect(),
        }
    }

    /// Word with the adjacent symbols at `i` and `i + 1` exchanged.
    pub fn swapped(&self, i: usize) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.swap(i, i + 1);
        Word { symbols }
    }

    /// Rotation `w[k..] w[..k]`.
    pub fn rotate(&self, k: usize) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.rotate_left(k % self.len().max(1));
        Word { symbols }
    }

    /// Lattice point reached after reading the first `k` symbols.
    pub fn point_after(&self, k: usize) -> (usize, usize) {
        let p = Word::from(&self.symbols[..k]).parikh();
        (p.zeros, p.ones)
    }

    /// Length of the longest proper border of every prefix (KMP failure function).
    fn border_table(&self) -> Vec<usize> {
        let w = &self.symbols;
        let mut table = vec![0usize; w.len()];
        let mut k = 0;
        for i in 1..w.len() {
            while k > 0 && w[i] != w[k] {
                k = table[k - 1];
            }
            if w[i] == w[k] {
                k += 1;
            }
            table[i] = k;
        }
        table
    }

    /// All periods `p` with `1 <= p <= |w|`, ascending. Empty for the empty word.
    pub fn periods(&self) -> Vec<usize> {
        let n = self.len();
        if n == 0 {
            return Vec::new();
        }
        let table = self.border_table();
        let mut periods = Vec::new();
        let mut border = table[n - 1];
        loop {
            periods.push(n - border);
            if border == 0 {
                break;
            }
            border = table[border - 1];
        }
        periods
    }

    pub fn smallest_period(&self) -> Option<usize> {
        let n = self.len();
        (n > 0).then(|| n - self.border_table()[n - 1])
    }

    /// Whether `p` is a period. Values `p >= |w|` hold vacuously.
    pub fn has_period(&self, p: usize) -> bool {
        p > 0 && (p >= self.len() || self.symbols[p..] == self.symbols[..self.len() - p])
    }

    /// `w` is not a power `v^k` with `k >= 2`. The empty word is not primitive.
    pub fn is_primitive(&self) -> bool {
        match self.smallest_period() {
            None => false,
            Some(p) => p == self.len() || !self.len().is_multiple_of(p),
        }
    }

    /// Primitive root `v` and exponent `k` with `w = v^k`.
    pub fn primitive_root(&self) -> Option<(Word, usize)> {
        let n = self.len();
        let p = self.smallest_period()?;
        if n.is_multiple_of(p) {
            Some((self.slice(0, p), n / p))
        } else {
            Some((self.clone(), 1))
        }
    }

    /// Nonempty word whose longest proper border is empty.
    pub fn is_unbordered(&self) -> bool {
        let n = self.len();
        n > 0 && self.border_table()[n - 1] == 0
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.symbols)
    }

    pub fn is_conjugate_of(&self, other: &Word) -> bool {
        if self.len() != other.len() {
            return false;
        }
        if self.is_empty() {
            return true;
        }
        let doubled = self.concat(self);
        doubled
            .symbols
            .windows(other.len())
            .any(|w| w == other.as_slice())
    }

    /// Splits `w = p1 · p2` into two palindromes with `p1` nonempty.
    ///
    /// Such a split exists iff `w` is a conjugate of its reversal. For
    /// primitive words it is unique; otherwise the split with the shortest
    /// `p1` is returned.
    pub fn two_palindrome_factorization(&self) -> Option<(Word, Word)> {
        let w = &self.symbols;
        (1..=w.len())
            .find(|&i| is_palindrome(&w[..i]) && is_palindrome(&w[i..]))
            .map(|i| (self.slice(0, i), self.slice(i, w.len())))
    }

    /// All factors of length `len`, with repetition, in order of occurrence.
    pub fn factors_of_len(&self, len: usize) -> impl Iterator<Item = &[u8]> {
        let count = (self.len() + 1).saturating_sub(len);
        (0..count).map(move |i| &self.symbols[i..i + len])
    }

    /// Iterator over all `2^n` words of length `n`, in lexicographic order.
    pub fn all_of_len(n: usize) -> impl Iterator<Item = Word> {
        assert!(n < usize::BITS as usize);
        (0usize..1 << n).map(move |bits| {
            Word::from_symbols((0..n).rev().map(|k| ((bits >> k) & 1) as u8).collect())
        })
    }
}

fn is_palindrome(w: &[u8]) -> bool {
    w.iter().eq(w.iter().rev())
}

/// Lexicographic comparison under `order`; a proper prefix is smaller.
pub fn lex_compare(u: &[u8], v: &[u8], order: LetterOrder) -> Ordering {
    u.iter()
        .map(|&s| order.rank(s))
        .cmp(v.iter().map(|&s| order.rank(s)))
}

impl From<&[u8]> for Word {
    fn from(symbols: &[u8]) -> Self {
        Word::from_symbols(symbols.to_vec())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        text.chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                found => Err(Error::Parse {
                    position: i + 1,
                    found,
                }),
            })
            .collect::<Result<Vec<u8>>>()
            .map(|symbols| Word { symbols })
    }
}

/// Parses a `'0'`/`'1'` string.
pub fn parse_word(text: &str) -> Result<Word> {
    text.parse()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            f.write_str(if s == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Letter counts `(zeros, ones)`; also the endpoint of the path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parikh {
    pub zeros: usize,
    pub ones: usize,
}

impl Parikh {
    pub const fn new(zeros: usize, ones: usize) -> Self {
        Parikh { zeros, ones }
    }

    pub fn len(&self) -> usize {
        self.zeros + self.ones
    }

    pub fn is_empty(&self) -> bool {
        self.zeros == 0 && self.ones == 0
    }

    pub fn gcd(&self) -> usize {
        self.zeros.gcd(&self.ones)
    }

    pub fn is_coprime(&self) -> bool {
        self.gcd() == 1
    }

    pub fn swap(self) -> Self {
        Parikh::new(self.ones, self.zeros)
    }
}

impl fmt::Display for Parikh {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.zeros, self.ones)
    }
}

/// Exact slope `ones / zeros`; `zeros == 0` means infinite.
///
/// Equality and ordering are by value (cross-multiplication), so `2/4 == 1/2`.
#[derive(Debug, Clone, Copy)]
pub struct Slope {
    numerator: usize,
    denominator: usize,
}

impl Slope {
    pub fn new(numerator: usize, denominator: usize) -> Result<Self> {
        if numerator == 0 && denominator == 0 {
            return Err(Error::UndefinedSlope);
        }
        Ok(Slope {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> usize {
        self.numerator
    }

    pub fn denominator(&self) -> usize {
        self.denominator
    }

    pub fn is_infinite(&self) -> bool {
        self.denominator == 0
    }
}

impl TryFrom<Parikh> for Slope {
    type Error = Error;

    fn try_from(p: Parikh) -> Result<Self> {
        Slope::new(p.ones, p.zeros)
    }
}

impl PartialEq for Slope {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Slope {}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numerator as u128 * other.denominator as u128;
        let rhs = other.numerator as u128 * self.denominator as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}
