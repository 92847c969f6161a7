//! Exact counts of balanced and digitally convex words, and the Fibonacci
//! word fixtures.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::word::Word;

/// Euler's totient.
pub fn totient(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    let (mut m, mut phi, mut p) = (n, n, 2u64);
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    Ok(phi)
}

/// `φ(0..=n_max)` by sieve; index 0 holds 0.
pub fn totient_table(n_max: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=n_max as u64).collect();
    for p in 2..=n_max {
        if phi[p] == p as u64 {
            for k in (p..=n_max).step_by(p) {
                phi[k] -= phi[k] / p as u64;
            }
        }
    }
    phi
}

/// `|DC_0(0..=n_max)|`: digitally convex words of each length starting with
/// `0`, i.e. the Euler transform of the totient (OEIS A061255).
pub fn dc0_table(n_max: usize) -> Vec<BigUint> {
    let phi = totient_table(n_max);
    // c[k] = sum over d | k of d·φ(d)
    let mut c = vec![BigUint::zero(); n_max + 1];
    for (d, &phi_d) in phi.iter().enumerate().skip(1) {
        let term = BigUint::from(d as u64 * phi_d);
        for k in (d..=n_max).step_by(d) {
            c[k] += &term;
        }
    }
    let mut values = vec![BigUint::one()];
    for n in 1..=n_max {
        let sum: BigUint = (1..=n).map(|k| &c[k] * &values[n - k]).sum();
        let (q, r) = sum.div_rem(&BigUint::from(n));
        assert!(
            r.is_zero(),
            "Euler transform division is inexact at n = {n}"
        );
        values.push(q);
    }
    values
}

pub fn count_dc0(n: usize) -> BigUint {
    dc0_table(n).pop().expect("nonempty")
}

/// `|DC(n)| = Σ_{k<=n} |DC_0(k)|`: every convex word is `1^j` followed by a
/// convex word starting with `0` (or empty).
pub fn count_dc(n: usize) -> BigUint {
    dc0_table(n).iter().sum()
}

/// Number of balanced words of length `n`: `1 + Σ_{k=1..n} (n-k+1)·φ(k)`.
pub fn count_balanced(n: usize) -> BigUint {
    let phi = totient_table(n);
    let sum: BigUint = (1..=n)
        .map(|k| BigUint::from((n - k + 1) as u64) * phi[k])
        .sum();
    sum + 1u32
}

/// Number of minimal forbidden words of length `n` of the convex language:
/// `n - 1 - φ(n)` for `n >= 2`.
pub fn count_mfw_dc(n: usize) -> BigUint {
    if n < 2 {
        return BigUint::zero();
    }
    let phi = totient(n as u64).expect("n >= 2") as usize;
    BigUint::from(n - 1 - phi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountKind {
    Dc0,
    Dc,
    Balanced,
    MfwDc,
}

impl CountKind {
    pub fn name(self) -> &'static str {
        match self {
            CountKind::Dc0 => "dc0",
            CountKind::Dc => "dc",
            CountKind::Balanced => "balanced",
            CountKind::MfwDc => "mfw-dc",
        }
    }
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CountKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "dc0" => Ok(CountKind::Dc0),
            "dc" => Ok(CountKind::Dc),
            "balanced" => Ok(CountKind::Balanced),
            "mfw-dc" => Ok(CountKind::MfwDc),
            other => Err(format!("unknown count kind {other:?}")),
        }
    }
}

/// Exact values of one counting sequence for `n = 0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub kind: CountKind,
    pub values: Vec<BigUint>,
}

impl CountTable {
    pub fn build(kind: CountKind, n_max: usize) -> Self {
        let values = match kind {
            CountKind::Dc0 => dc0_table(n_max),
            CountKind::Dc => dc0_table(n_max)
                .into_iter()
                .scan(BigUint::zero(), |acc, x| {
                    *acc += x;
                    Some(acc.clone())
                })
                .collect(),
            CountKind::Balanced => (0..=n_max).map(count_balanced).collect(),
            CountKind::MfwDc => (0..=n_max).map(count_mfw_dc).collect(),
        };
        CountTable { kind, values }
    }
}

/// Prefix of length `len` of the Fibonacci word, the fixed point of
/// `0 -> 01, 1 -> 0`.
pub fn fibonacci_word(len: usize) -> Word {
    let mut s: Vec<u8> = vec![0];
    while s.len() < len {
        s = s
            .iter()
            .flat_map(|&x| if x == 0 { &[0u8, 1][..] } else { &[0u8][..] })
            .copied()
            .collect();
    }
    s.truncate(len);
    Word::from_symbols(s)
}

/// The Christoffel factors `ℓ_i` of the Fibonacci word: `ℓ_1 = 1`,
/// `ℓ_2 = 0`, `ℓ_{2n+1} = ℓ_{2n} ℓ_{2n-1}`, `ℓ_{2n+2} = ℓ_{2n} ℓ_{2n+1}`.
pub fn lyndon_fib(i: usize) -> Result<Word> {
    if i == 0 {
        return Err(Error::NonPositive);
    }
    let mut ell = vec![
        Word::empty(),
        Word::letter_power(1, 1),
        Word::letter_power(0, 1),
    ];
    for k in 3..=i {
        let next = if k % 2 == 1 {
            ell[k - 1].concat(&ell[k - 2])
        } else {
            ell[k - 2].concat(&ell[k - 1])
        };
        ell.push(next);
    }
    Ok(ell.swap_remove(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn totient_examples() {
        assert_eq!(totient(12).unwrap(), 4);
        assert_eq!(totient(1).unwrap(), 1);
        assert_eq!(totient(0), Err(Error::NonPositive));
        let table = totient_table(200);
        for n in 1..=200 {
            let brute = (1..=n).filter(|k: &u64| k.gcd(&n) == 1).count() as u64;
            assert_eq!(table[n as usize], brute);
            assert_eq!(totient(n).unwrap(), brute);
        }
    }

    #[test]
    fn dc0_table_values() {
        assert_eq!(
            dc0_table(12),
            big(&[1, 1, 2, 4, 7, 13, 21, 37, 60, 98, 157, 251, 392])
        );
        assert_eq!(count_dc0(4), BigUint::from(7u32));
    }

    #[test]
    fn dc_counts() {
        assert_eq!(count_dc(0), BigUint::from(1u32));
        assert_eq!(count_dc(2), BigUint::from(4u32));
        assert_eq!(count_dc(12), BigUint::from(1044u32));
        let table = CountTable::build(CountKind::Dc, 30);
        assert!(table.values.windows(2).all(|p| p[0] <= p[1]));
        assert_eq!(table.values[12], count_dc(12));
    }

    #[test]
    fn balanced_counts() {
        assert_eq!(count_balanced(0), BigUint::from(1u32));
        assert_eq!(count_balanced(2), BigUint::from(4u32));
        assert_eq!(
            CountTable::build(CountKind::Balanced, 5).values,
            big(&[1, 2, 4, 8, 14, 24])
        );
    }

    #[test]
    fn mfw_dc_counts() {
        assert_eq!(count_mfw_dc(6), BigUint::from(3u32));
        assert_eq!(count_mfw_dc(5), BigUint::zero());
        assert_eq!(count_mfw_dc(1), BigUint::zero());
    }

    #[test]
    fn large_values_do_not_overflow() {
        let table = dc0_table(400);
        assert!(table[400].bits() > 64);
    }

    #[test]
    fn count_kind_names_round_trip() {
        for kind in [
            CountKind::Dc0,
            CountKind::Dc,
            CountKind::Balanced,
            CountKind::MfwDc,
        ] {
            assert_eq!(kind.name().parse::<CountKind>(), Ok(kind));
        }
        assert!("dc1".parse::<CountKind>().is_err());
    }

    #[test]
    fn fibonacci_examples() {
        assert_eq!(fibonacci_word(13), w("0100101001001"));
        assert_eq!(fibonacci_word(0), w(""));
        assert_eq!(lyndon_fib(5).unwrap(), w("00101"));
        assert_eq!(lyndon_fib(7).unwrap(), w("0010010100101"));
        let l8 = lyndon_fib(8).unwrap();
        assert_eq!(l8, w("00100101").concat(&w("0010010100101")));
        assert_eq!(l8.len(), 21);
        assert_eq!(lyndon_fib(0), Err(Error::NonPositive));

        let (mut f0, mut f1) = (0usize, 1usize);
        for i in 1..=20 {
            (f0, f1) = (f1, f0 + f1);
            assert_eq!(lyndon_fib(i).unwrap().len(), f0, "F_{i}");
        }
    }
}
