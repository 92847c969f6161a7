use proptest::prelude::*;

use dcwords::{
    christoffel_lower, deflation_sites, dominance_le, inflation_sites, is_balanced, is_convex,
    is_dc, join, lyndon_factorization, meet, Direction, LetterOrder, Parikh, Word,
};

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..=1, 0..=max_len).prop_map(Word::from_symbols)
}

/// Random convex word: a non-increasing product of primitive lower
/// Christoffel words, built from random slopes.
fn convex_word() -> impl Strategy<Value = Word> {
    prop::collection::vec((0usize..6, 0usize..6), 1..6).prop_map(|mut pairs| {
        pairs.retain(|&(a, b)| a + b > 0);
        let mut factors: Vec<Word> = pairs
            .into_iter()
            .map(|(a, b)| {
                let p = Parikh::new(a, b);
                let d = p.gcd();
                christoffel_lower(Parikh::new(a / d, b / d)).unwrap()
            })
            .collect();
        factors.sort_by(|x, y| y.cmp(x));
        factors.iter().fold(Word::empty(), |acc, f| acc.concat(f))
    })
}

proptest! {
    #[test]
    fn factorization_reassembles(w in word(300)) {
        for order in [LetterOrder::ZeroFirst, LetterOrder::OneFirst] {
            let f = lyndon_factorization(&w, order);
            prop_assert_eq!(f.concat(), w.clone());
            prop_assert!(f.ranges().all(|(s, e)| s < e));
        }
    }

    #[test]
    fn convexity_symmetries(w in word(200)) {
        let up = is_dc(&w);
        prop_assert_eq!(up, is_convex(&w.reverse(), Direction::Downward));
        prop_assert_eq!(up, is_convex(&w.complement(), Direction::Downward));
        prop_assert_eq!(
            is_balanced(&w),
            up && is_convex(&w, Direction::Downward)
        );
    }

    #[test]
    fn sorted_christoffel_products_are_convex(w in convex_word()) {
        prop_assert!(is_dc(&w));
        for site in deflation_sites(&w).unwrap() {
            let d = w.swapped(site.position);
            prop_assert!(is_dc(&d));
            prop_assert!(dominance_le(&d, &w).unwrap());
        }
        for site in inflation_sites(&w).unwrap() {
            let u = w.swapped(site.position);
            prop_assert!(is_dc(&u));
            prop_assert!(dominance_le(&w, &u).unwrap());
        }
    }

    #[test]
    fn meet_and_join_bound_their_arguments(u in word(40), seed in any::<u64>()) {
        // a random permutation of u has the same Parikh vector
        let mut symbols = u.as_slice().to_vec();
        let n = symbols.len();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            symbols.swap(i, (state >> 33) as usize % (i + 1));
        }
        let v = Word::from_symbols(symbols);
        let (m, j) = (meet(&u, &v).unwrap(), join(&u, &v).unwrap());
        prop_assert_eq!(m.parikh(), u.parikh());
        prop_assert_eq!(j.parikh(), u.parikh());
        for x in [&u, &v] {
            prop_assert!(dominance_le(&m, x).unwrap());
            prop_assert!(dominance_le(x, &j).unwrap());
        }
        if is_dc(&u) && is_dc(&v) {
            prop_assert!(is_dc(&m));
        }
    }
}
