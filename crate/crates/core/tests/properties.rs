use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rexint::automata::{member, member_fast, DEFAULT_PAIR_BUDGET};
use rexint::bench::{gen_random_regex, pair_shapes, random_pair, random_word};
use rexint::canonical::{coercible_types, RunSeq};
use rexint::linear::{common_divisor_exists, dispatch};
use rexint::{parse, product_nonempty, Kind, Letter, Regex};

fn regex_of(kind: usize, size: usize, seed: u64) -> Regex {
    let k = Kind::ALL[kind % Kind::ALL.len()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lo = match k {
        Kind::PlusStar | Kind::StarPlus => 1,
        Kind::ConcatAlt | Kind::AltConcat => 3,
        _ => 2,
    };
    let size = if lo == 1 { 1 } else { size.max(lo) };
    gen_random_regex(&k.descriptor(), size, 4, &mut rng).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn render_parse_round_trip(kind in 0usize..12, size in 1usize..30, seed: u64) {
        let r = regex_of(kind, size, seed);
        prop_assert_eq!(parse(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn coercions_preserve_language(kind in 0usize..12, size in 1usize..12, seed: u64) {
        let r = regex_of(kind, size, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        for (ty, form) in coercible_types(&r) {
            for _ in 0..8 {
                let w = random_word(&r, 3, &mut rng);
                prop_assert!(form.accepts(&w), "{} as {} rejects a member", r, ty.ops_string());
            }
            if let Some(back) = form.to_regex() {
                let w = random_word(&back, 3, &mut rng);
                prop_assert!(member(&w, &r), "{} as {} accepts a non-member", r, ty.ops_string());
            }
        }
    }

    #[test]
    fn membership_paths_agree(kind in 0usize..12, size in 1usize..12, seed: u64, word in prop::collection::vec(0u8..4, 0..14)) {
        let r = regex_of(kind, size, seed);
        let w: Vec<Letter> = word.into_iter().map(|c| Letter(c as u32)).collect();
        prop_assert_eq!(member(&w, &r), member_fast(&w, &r));
    }

    #[test]
    fn intersection_is_symmetric(i in 0usize..289, seed: u64) {
        let shapes = pair_shapes();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = random_pair(&shapes[i % 17], &shapes[i / 17], 24, 3, &mut rng);
        let ab = dispatch(&a, &b).unwrap();
        let ba = dispatch(&b, &a).unwrap();
        prop_assert_eq!(ab.is_empty(), ba.is_empty());
    }

    #[test]
    fn dispatch_matches_baseline(i in 0usize..289, seed: u64) {
        let shapes = pair_shapes();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = random_pair(&shapes[i % 17], &shapes[i / 17], 30, 4, &mut rng);
        let fast = dispatch(&a, &b).unwrap();
        let slow = product_nonempty(&a, &b, DEFAULT_PAIR_BUDGET).unwrap();
        prop_assert_eq!(fast.is_empty(), slow.is_empty(), "{} vs {}", a, b);
        if let Some(w) = fast.witness() {
            prop_assert!(member(w, &a) && member(w, &b));
        }
    }

    #[test]
    fn words_commute_iff_common_divisor(u in prop::collection::vec(0u8..2, 1..10), v in prop::collection::vec(0u8..2, 1..10)) {
        let u: Vec<Letter> = u.into_iter().map(|c| Letter(c as u32)).collect();
        let v: Vec<Letter> = v.into_iter().map(|c| Letter(c as u32)).collect();
        let uv = [u.as_slice(), v.as_slice()].concat();
        let vu = [v.as_slice(), u.as_slice()].concat();
        prop_assert_eq!(uv == vu, common_divisor_exists(&u, &v));
    }

    #[test]
    fn run_encoding_keeps_word(word in prop::collection::vec(0u8..3, 1..20)) {
        let w: Vec<Letter> = word.into_iter().map(|c| Letter(c as u32)).collect();
        prop_assert_eq!(RunSeq::of_word(&w).shortest_word(), w);
    }
}
