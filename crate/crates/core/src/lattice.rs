//! Dominance order on words of a fixed Parikh vector, and the inflation and
//! deflation moves between digitally convex words.
//!
//! Deflation replaces an occurrence of `10` by `01` (removing one lattice
//! point under the path), inflation does the converse. Both moves are only
//! admitted when the result is again (upward) digitally convex.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::christoffel::christoffel_lower;
use crate::convexity::is_dc;
use crate::error::{Error, Result};
use crate::lyndon::{factor_ranges, standard_factorization};
use crate::word::{LetterOrder, Parikh, Word};

/// Prefix counts of `1`: `prefix_ones[i]` is the number of ones in `w[..=i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominanceProfile {
    prefix_ones: Vec<usize>,
}

impl DominanceProfile {
    pub fn of(w: &Word) -> Self {
        let prefix_ones = w
            .as_slice()
            .iter()
            .scan(0usize, |acc, &x| {
                *acc += x as usize;
                Some(*acc)
            })
            .collect();
        DominanceProfile { prefix_ones }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.prefix_ones
    }

    pub fn sum(&self) -> usize {
        self.prefix_ones.iter().sum()
    }

    /// Decodes the word with this profile.
    fn to_word(&self) -> Word {
        let mut prev = 0;
        let symbols = self
            .prefix_ones
            .iter()
            .map(|&s| {
                let step = s - prev;
                debug_assert!(step <= 1);
                prev = s;
                step as u8
            })
            .collect();
        Word::from_symbols(symbols)
    }

    fn pointwise(&self, other: &Self, f: fn(usize, usize) -> usize) -> Self {
        DominanceProfile {
            prefix_ones: self
                .prefix_ones
                .iter()
                .zip(&other.prefix_ones)
                .map(|(&x, &y)| f(x, y))
                .collect(),
        }
    }

    fn le(&self, other: &Self) -> bool {
        self.prefix_ones
            .iter()
            .zip(&other.prefix_ones)
            .all(|(x, y)| x <= y)
    }
}

fn require_same_len(u: &Word, v: &Word) -> Result<()> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    Ok(())
}

fn require_same_parikh(u: &Word, v: &Word) -> Result<()> {
    require_same_len(u, v)?;
    if u.parikh() != v.parikh() {
        return Err(Error::ParikhMismatch(u.parikh(), v.parikh()));
    }
    Ok(())
}

/// `u ⊑ v`: every prefix of `v` has at least as many ones as the prefix of
/// `u` of the same length.
pub fn dominance_le(u: &Word, v: &Word) -> Result<bool> {
    require_same_len(u, v)?;
    Ok(DominanceProfile::of(u).le(&DominanceProfile::of(v)))
}

/// Greatest lower bound in the dominance order.
pub fn meet(u: &Word, v: &Word) -> Result<Word> {
    require_same_parikh(u, v)?;
    Ok(DominanceProfile::of(u)
        .pointwise(&DominanceProfile::of(v), usize::min)
        .to_word())
}

/// Least upper bound in the dominance order.
pub fn join(u: &Word, v: &Word) -> Result<Word> {
    require_same_parikh(u, v)?;
    Ok(DominanceProfile::of(u)
        .pointwise(&DominanceProfile::of(v), usize::max)
        .to_word())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SiteKind {
    /// `10 -> 01`
    Deflation,
    /// `01 -> 10`
    Inflation,
}

impl fmt::Display for SiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SiteKind::Deflation => "deflation",
            SiteKind::Inflation => "inflation",
        })
    }
}

/// An admissible swap of the two symbols at `position` and `position + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Site {
    pub kind: SiteKind,
    /// 0-based index of the first symbol of the swapped pair.
    pub position: usize,
    /// Deflation: index of the Lyndon factor ending at `position`.
    /// Inflation: index of the Lyndon factor containing the pair.
    pub factor_index: usize,
}

fn require_dc(w: &Word) -> Result<()> {
    if is_dc(w) {
        Ok(())
    } else {
        Err(Error::NotConvex(w.clone()))
    }
}

/// Every `10` whose swap keeps `w` digitally convex.
///
/// These are exactly the boundaries between two *distinct* consecutive
/// Lyndon factors where the left one ends with `1` and the right one starts
/// with `0`. A boundary inside a power `ℓ^k` of one factor is excluded: the
/// swap creates the forbidden factor `0C01C1` for `ℓ = 0C1`.
pub fn deflation_sites(w: &Word) -> Result<Vec<Site>> {
    require_dc(w)?;
    let s = w.as_slice();
    let ranges = factor_ranges(s, LetterOrder::ZeroFirst);
    let sites: Vec<Site> = ranges
        .windows(2)
        .enumerate()
        .filter(|(_, pair)| {
            let ((ls, le), (rs, re)) = (pair[0], pair[1]);
            s[le - 1] == 1 && s[rs] == 0 && s[ls..le] != s[rs..re]
        })
        .map(|(i, pair)| Site {
            kind: SiteKind::Deflation,
            position: pair[0].1 - 1,
            factor_index: i,
        })
        .collect();
    debug_assert!(
        sites.iter().all(|site| is_dc(&w.swapped(site.position))),
        "deflation site does not preserve convexity in {w}"
    );
    Ok(sites)
}

/// Every `01` whose swap keeps `w` digitally convex.
///
/// Within a single primitive Christoffel factor `0UV1` only the `01` at the
/// palindromic split point can be inflated, turning it into `V1·0U`. Each
/// such candidate is then checked against the whole word, because the new
/// factors may break the order of the factorization.
pub fn inflation_sites(w: &Word) -> Result<Vec<Site>> {
    require_dc(w)?;
    let s = w.as_slice();
    let mut sites = Vec::new();
    for (i, &(start, end)) in factor_ranges(s, LetterOrder::ZeroFirst).iter().enumerate() {
        if end - start < 2 {
            continue;
        }
        let factor = w.slice(start, end);
        let (_, v) = standard_factorization(&factor)?;
        let position = start + v.len() - 1;
        debug_assert_eq!((s[position], s[position + 1]), (0, 1));
        if is_dc(&w.swapped(position)) {
            sites.push(Site {
                kind: SiteKind::Inflation,
                position,
                factor_index: i,
            });
        }
    }
    Ok(sites)
}

fn apply(w: &Word, position: usize, kind: SiteKind) -> Result<Word> {
    let sites = match kind {
        SiteKind::Deflation => deflation_sites(w)?,
        SiteKind::Inflation => inflation_sites(w)?,
    };
    if sites.iter().any(|s| s.position == position) {
        Ok(w.swapped(position))
    } else {
        Err(Error::InvalidSite {
            word: w.clone(),
            position,
            kind: match kind {
                SiteKind::Deflation => "deflation",
                SiteKind::Inflation => "inflation",
            },
        })
    }
}

/// Swaps the `10` at `position` (0-based) into `01`.
pub fn deflate(w: &Word, position: usize) -> Result<Word> {
    apply(w, position, SiteKind::Deflation)
}

/// Swaps the `01` at `position` (0-based) into `10`.
pub fn inflate(w: &Word, position: usize) -> Result<Word> {
    apply(w, position, SiteKind::Inflation)
}

fn chain(w: &Word, sites: fn(&Word) -> Result<Vec<Site>>) -> Result<Vec<Word>> {
    let mut out = vec![w.clone()];
    let mut current = w.clone();
    while let Some(site) = sites(&current)?.first() {
        current = current.swapped(site.position);
        out.push(current.clone());
    }
    Ok(out)
}

/// `w` followed by repeated leftmost deflations, ending at `w_{a,b}`.
pub fn deflation_chain(w: &Word) -> Result<Vec<Word>> {
    chain(w, deflation_sites)
}

/// `w` followed by repeated leftmost inflations, ending at `1^b 0^a`.
pub fn inflation_chain(w: &Word) -> Result<Vec<Word>> {
    chain(w, inflation_sites)
}

fn closure(seed: Word, sites: fn(&Word) -> Result<Vec<Site>>) -> Vec<Word> {
    let mut seen: HashSet<Word> = HashSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed]);
    while let Some(w) = queue.pop_front() {
        for site in sites(&w).expect("closure stays inside the convex words") {
            let next = w.swapped(site.position);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Word> = seen.into_iter().collect();
    out.sort();
    out
}

/// All upward digitally convex words with Parikh vector `p`, sorted, by
/// breadth-first inflation from `w_{a,b}`.
pub fn enumerate_dc(p: Parikh) -> Vec<Word> {
    match christoffel_lower(p) {
        Ok(bottom) => closure(bottom, inflation_sites),
        Err(_) => vec![Word::empty()],
    }
}

/// Same set as [`enumerate_dc`], by breadth-first deflation from `1^b 0^a`.
pub fn enumerate_dc_from_top(p: Parikh) -> Vec<Word> {
    let top = Word::letter_power(1, p.ones).concat(&Word::letter_power(0, p.zeros));
    closure(top, deflation_sites)
}

/// Largest `a + b` accepted by [`cover_relations`] unless overridden.
pub const DEFAULT_COVER_CAP: usize = 24;

/// The two Hasse diagrams on the digitally convex words of one Parikh class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverRelations {
    pub words: Vec<Word>,
    /// `(u, v)` with `v` a single inflation of `u`.
    pub inflation: BTreeSet<(Word, Word)>,
    /// `(u, v)` with `v` covering `u` in the dominance order restricted to `words`.
    pub dominance: BTreeSet<(Word, Word)>,
}

pub fn cover_relations(p: Parikh, cap: usize) -> Result<CoverRelations> {
    if p.len() > cap {
        return Err(Error::CapExceeded { size: p.len(), cap });
    }
    let words = enumerate_dc(p);
    let mut inflation = BTreeSet::new();
    for u in &words {
        for site in inflation_sites(u)? {
            inflation.insert((u.clone(), u.swapped(site.position)));
        }
    }

    let profiles: Vec<DominanceProfile> = words.iter().map(DominanceProfile::of).collect();
    let below = |i: usize, j: usize| i != j && profiles[i].le(&profiles[j]);
    let mut dominance = BTreeSet::new();
    for i in 0..words.len() {
        for j in 0..words.len() {
            if below(i, j) && !(0..words.len()).any(|k| below(i, k) && below(k, j)) {
                dominance.insert((words[i].clone(), words[j].clone()));
            }
        }
    }
    Ok(CoverRelations {
        words,
        inflation,
        dominance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn words(items: &[&str]) -> Vec<Word> {
        items.iter().map(|s| w(s)).collect()
    }

    fn edges(items: &[(&str, &str)]) -> BTreeSet<(Word, Word)> {
        items.iter().map(|(a, b)| (w(a), w(b))).collect()
    }

    /// Positions of `pattern` whose swap gives a convex word, by brute force.
    fn brute_sites(word: &Word, pattern: [u8; 2]) -> Vec<usize> {
        (0..word.len().saturating_sub(1))
            .filter(|&i| [word.at(i), word.at(i + 1)] == pattern && is_dc(&word.swapped(i)))
            .collect()
    }

    fn positions(sites: &[Site]) -> Vec<usize> {
        sites.iter().map(|s| s.position).collect()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_le(&w("0101"), &w("1100")).unwrap());
        assert!(!dominance_le(&w("1001"), &w("0110")).unwrap());
        assert!(!dominance_le(&w("0110"), &w("1001")).unwrap());
        assert!(dominance_le(&w("0110"), &w("0110")).unwrap());
        assert_eq!(
            dominance_le(&w("01"), &w("011")),
            Err(Error::LengthMismatch(2, 3))
        );
        assert_eq!(DominanceProfile::of(&w("0101")).as_slice(), &[0, 1, 1, 2]);
    }

    #[test]
    fn meet_join_examples() {
        assert_eq!(meet(&w("1001"), &w("0110")).unwrap(), w("0101"));
        assert_eq!(join(&w("1001"), &w("0110")).unwrap(), w("1010"));
        assert_eq!(
            join(&w("010101010110001001"), &w("011110001001001001")).unwrap(),
            w("011110001010001001")
        );
        assert!(matches!(
            meet(&w("0011"), &w("0111")),
            Err(Error::ParikhMismatch(..))
        ));
    }

    #[test]
    fn deflation_site_examples() {
        // only the boundary between the distinct factors 01 and 001 qualifies
        let x = w("0101001001");
        assert_eq!(positions(&deflation_sites(&x).unwrap()), vec![3]);
        assert_eq!(brute_sites(&x, [1, 0]), vec![3]);

        assert!(deflation_sites(&w("00100100101")).unwrap().is_empty());
        let sites = deflation_sites(&w("10")).unwrap();
        assert_eq!(positions(&sites), vec![0]);
        assert_eq!(deflate(&w("10"), 0).unwrap(), w("01"));
        assert!(matches!(
            deflation_sites(&w("0011")),
            Err(Error::NotConvex(_))
        ));
    }

    #[test]
    fn deflate_examples() {
        assert_eq!(deflate(&w("1100"), 1).unwrap(), w("1010"));
        assert_eq!(deflate(&w("1010"), 0).unwrap(), w("0110"));
        assert!(matches!(
            deflate(&w("0110"), 1),
            Err(Error::InvalidSite { .. })
        ));
    }

    #[test]
    fn inflation_site_examples() {
        let x = w("00100100101");
        let sites = inflation_sites(&x).unwrap();
        assert_eq!(positions(&sites), vec![7]);
        assert_eq!(inflate(&x, 7).unwrap(), w("00100101001"));

        let y = w("0101");
        let results: Vec<Word> = inflation_sites(&y)
            .unwrap()
            .iter()
            .map(|s| inflate(&y, s.position).unwrap())
            .collect();
        assert_eq!(results, words(&["1001", "0110"]));
        assert!(inflation_sites(&w("1100")).unwrap().is_empty());
    }

    #[test]
    fn bad_inflation_example() {
        let lw = |a, b| christoffel_lower(Parikh::new(a, b)).unwrap();
        let x = lw(5, 3).concat(&lw(20, 11));
        let sites = inflation_sites(&x).unwrap();
        assert_eq!(sites.len(), 1);
        assert_eq!(sites[0].factor_index, 1);
        let y = inflate(&x, sites[0].position).unwrap();
        assert_eq!(y, lw(5, 3).concat(&lw(9, 5)).concat(&lw(11, 6)));

        // the S' swap inside w_{5,3} is not admissible in x
        let blind = x.swapped(lw(3, 2).len() - 1);
        assert!(!is_dc(&blind));
        assert_eq!(blind, lw(3, 2).concat(&lw(2, 1)).concat(&lw(20, 11)));

        let site = inflation_sites(&y)
            .unwrap()
            .into_iter()
            .find(|s| s.factor_index == 0)
            .unwrap();
        let z = inflate(&y, site.position).unwrap();
        assert_eq!(z, lw(3, 2).concat(&lw(11, 6)).concat(&lw(11, 6)));
    }

    #[test]
    fn sites_match_brute_force() {
        for n in 0..=12 {
            for x in Word::all_of_len(n).filter(is_dc) {
                assert_eq!(
                    positions(&deflation_sites(&x).unwrap()),
                    brute_sites(&x, [1, 0]),
                    "{x}"
                );
                assert_eq!(
                    positions(&inflation_sites(&x).unwrap()),
                    brute_sites(&x, [0, 1]),
                    "{x}"
                );
            }
        }
    }

    #[test]
    fn chain_examples() {
        assert_eq!(
            deflation_chain(&w("1100")).unwrap(),
            words(&["1100", "1010", "0110", "0101"])
        );
        let up = inflation_chain(&w("0101")).unwrap();
        assert_eq!(up.len(), 4);
        assert_eq!(up.last(), Some(&w("1100")));
        let bottom = christoffel_lower(Parikh::new(7, 4)).unwrap();
        assert_eq!(deflation_chain(&bottom).unwrap(), vec![bottom]);
        assert!(deflation_chain(&w("0011")).is_err());
    }

    #[test]
    fn chain_lengths_sum_to_constant() {
        for m in 1..=12 {
            for a in 0..=m {
                let p = Parikh::new(a, m - a);
                let dc = enumerate_dc(p);
                let bottom = christoffel_lower(p).unwrap();
                let top = Word::letter_power(1, p.ones).concat(&Word::letter_power(0, p.zeros));
                let total = DominanceProfile::of(&top).sum() - DominanceProfile::of(&bottom).sum();
                for x in &dc {
                    let down = deflation_chain(x).unwrap();
                    let up = inflation_chain(x).unwrap();
                    assert_eq!(down.last(), Some(&bottom));
                    assert_eq!(up.last(), Some(&top));
                    assert_eq!(down.len() - 1 + up.len() - 1, total, "{x}");
                    for step in down.windows(2).chain(up.windows(2)) {
                        let (p0, p1) = (
                            DominanceProfile::of(&step[0]),
                            DominanceProfile::of(&step[1]),
                        );
                        let changed = p0
                            .as_slice()
                            .iter()
                            .zip(p1.as_slice())
                            .filter(|(x, y)| x != y)
                            .count();
                        assert_eq!(changed, 1);
                        assert!(is_dc(&step[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_dc(Parikh::new(2, 2)),
            words(&["0101", "0110", "1001", "1010", "1100"])
        );
        assert_eq!(enumerate_dc(Parikh::new(5, 0)), words(&["00000"]));
        assert_eq!(enumerate_dc(Parikh::new(1, 1)), words(&["01", "10"]));
        assert_eq!(enumerate_dc(Parikh::new(0, 0)), words(&[""]));
        assert_eq!(
            enumerate_dc_from_top(Parikh::new(2, 2)),
            enumerate_dc(Parikh::new(2, 2))
        );
    }

    #[test]
    fn cover_examples() {
        let expected = edges(&[
            ("0101", "0110"),
            ("0101", "1001"),
            ("0110", "1010"),
            ("1001", "1010"),
            ("1010", "1100"),
        ]);
        let c = cover_relations(Parikh::new(2, 2), DEFAULT_COVER_CAP).unwrap();
        assert_eq!(c.inflation, expected);
        assert_eq!(c.dominance, expected);

        let c = cover_relations(Parikh::new(1, 1), DEFAULT_COVER_CAP).unwrap();
        assert_eq!(c.inflation, edges(&[("01", "10")]));

        let chain = edges(&[("0001", "0010"), ("0010", "0100"), ("0100", "1000")]);
        let c = cover_relations(Parikh::new(3, 1), DEFAULT_COVER_CAP).unwrap();
        assert_eq!(c.words, words(&["0001", "0010", "0100", "1000"]));
        assert_eq!((c.inflation.clone(), c.dominance), (chain.clone(), chain));

        assert_eq!(
            cover_relations(Parikh::new(20, 10), 24),
            Err(Error::CapExceeded { size: 30, cap: 24 })
        );
    }
}
