//! Random expressions of a requested homogeneous type, random members of
//! a language, and expressions planted to contain a given word.

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::ast::{Op, Regex};
use crate::letter::{Letter, Word};
use crate::types::{Kind, TypeDescriptor};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("no homogeneous expression of type {ty} has {size} leaves")]
    Unsatisfiable { ty: String, size: usize },
    #[error("alphabet must have between 1 and 26 letters")]
    Alphabet,
}

/// The first `k` lowercase letters.
pub fn alphabet(k: usize) -> Vec<Letter> {
    (0..k as u32).map(|i| Letter(u32::from(b'a') + i)).collect()
}

fn pick<R: Rng>(letters: &[Letter], rng: &mut R) -> Letter {
    letters[rng.gen_range(0..letters.len())]
}

fn leaf<R: Rng>(letters: &[Letter], rng: &mut R) -> Regex {
    Regex::Leaf(pick(letters, rng))
}

/// Splits `size` into parts, the first at least `first_min`, each at most
/// `max_part`, with at least two parts.
fn split<R: Rng>(size: usize, first_min: usize, max_part: usize, rng: &mut R) -> Vec<usize> {
    let first = rng.gen_range(first_min..=max_part.max(first_min).min(size - 1));
    let mut parts = vec![first];
    let mut left = size - first;
    while left > 0 {
        let p = rng.gen_range(1..=max_part.min(left));
        parts.push(p);
        left -= p;
    }
    parts.shuffle(rng);
    parts
}

/// A homogeneous expression of type `ty` with exactly `size` leaves.
///
/// Supports letters, the depth-1 types and the twelve depth-2 types.
/// `+*` and `*+` exist only with a single leaf.
pub fn gen_random_regex<R: Rng>(
    ty: &TypeDescriptor,
    size: usize,
    alphabet_size: usize,
    rng: &mut R,
) -> Result<Regex, GenError> {
    if alphabet_size == 0 || alphabet_size > 26 {
        return Err(GenError::Alphabet);
    }
    let sigma = alphabet(alphabet_size);
    let bad = || GenError::Unsatisfiable {
        ty: if ty.depth == 0 {
            "letter".into()
        } else {
            ty.ops_string()
        },
        size,
    };
    if !ty.homogeneous || ty.ops.len() != ty.depth || ty.depth > 2 {
        return Err(bad());
    }
    let leaves =
        |n: usize, rng: &mut R| -> Vec<Regex> { (0..n).map(|_| leaf(&sigma, rng)).collect() };
    let r = match ty.ops.as_slice() {
        [] if size == 1 => leaf(&sigma, rng),
        [Op::Concat] if size >= 2 => Regex::concat(leaves(size, rng)),
        [Op::Alt] if size >= 2 => Regex::alt(leaves(size, rng)),
        [Op::Plus] if size == 1 => Regex::plus(leaf(&sigma, rng)),
        [Op::Star] if size == 1 => Regex::star(leaf(&sigma, rng)),
        [outer, inner] => {
            let kind = Kind::from_ops(*outer, *inner).ok_or_else(bad)?;
            match kind {
                Kind::ConcatAlt | Kind::AltConcat if size >= 3 => {
                    let max_part = if kind == Kind::ConcatAlt {
                        alphabet_size.max(2)
                    } else {
                        6
                    };
                    let parts = split(size, 2, max_part.min(size - 1), rng);
                    let children = parts
                        .into_iter()
                        .map(|p| match p {
                            1 => leaf(&sigma, rng),
                            p if kind == Kind::ConcatAlt => set_node(&sigma, p, rng),
                            p => Regex::concat(leaves(p, rng)),
                        })
                        .collect();
                    if kind == Kind::ConcatAlt {
                        Regex::concat(children)
                    } else {
                        Regex::alt(children)
                    }
                }
                Kind::ConcatPlus | Kind::ConcatStar | Kind::AltPlus | Kind::AltStar
                    if size >= 2 =>
                {
                    let forced = rng.gen_range(0..size);
                    let children = (0..size)
                        .map(|i| {
                            let c = leaf(&sigma, rng);
                            if i == forced || rng.gen_bool(0.5) {
                                if matches!(kind, Kind::ConcatPlus | Kind::AltPlus) {
                                    Regex::plus(c)
                                } else {
                                    Regex::star(c)
                                }
                            } else {
                                c
                            }
                        })
                        .collect();
                    if matches!(kind, Kind::ConcatPlus | Kind::ConcatStar) {
                        Regex::concat(children)
                    } else {
                        Regex::alt(children)
                    }
                }
                Kind::PlusConcat if size >= 2 => Regex::plus(Regex::concat(leaves(size, rng))),
                Kind::StarConcat if size >= 2 => Regex::star(Regex::concat(leaves(size, rng))),
                Kind::PlusAlt if size >= 2 => Regex::plus(set_node(&sigma, size, rng)),
                Kind::StarAlt if size >= 2 => Regex::star(set_node(&sigma, size, rng)),
                Kind::PlusStar if size == 1 => {
                    Regex::Plus(Box::new(Regex::star(leaf(&sigma, rng))))
                }
                Kind::StarPlus if size == 1 => {
                    Regex::Star(Box::new(Regex::plus(leaf(&sigma, rng))))
                }
                _ => return Err(bad()),
            }
        }
        _ => return Err(bad()),
    };
    Ok(r)
}

/// Smallest and largest leaf counts `gen_random_regex` accepts for `kind`.
pub fn size_range(kind: Kind) -> (usize, Option<usize>) {
    match kind {
        Kind::ConcatAlt | Kind::AltConcat => (3, None),
        Kind::PlusStar | Kind::StarPlus => (1, Some(1)),
        _ => (2, None),
    }
}

/// An alternation of `n` letters, distinct while the alphabet allows.
fn set_node<R: Rng>(sigma: &[Letter], n: usize, rng: &mut R) -> Regex {
    let mut letters: Vec<Letter> = if n <= sigma.len() {
        sigma.choose_multiple(rng, n).copied().collect()
    } else {
        (0..n).map(|_| pick(sigma, rng)).collect()
    };
    letters.shuffle(rng);
    Regex::letter_set(&letters)
}

/// A random word of `L(ast)`; each `+` repeats 1..=`max_rep` times and
/// each `*` 0..=`max_rep` times.
pub fn random_word<R: Rng>(ast: &Regex, max_rep: usize, rng: &mut R) -> Word {
    let mut out = Vec::new();
    push_word(ast, max_rep, rng, &mut out);
    out
}

fn push_word<R: Rng>(ast: &Regex, max_rep: usize, rng: &mut R, out: &mut Word) {
    match ast {
        Regex::Leaf(c) => out.push(*c),
        Regex::Concat(cs) => cs.iter().for_each(|c| push_word(c, max_rep, rng, out)),
        Regex::Alt(cs) => push_word(&cs[rng.gen_range(0..cs.len())], max_rep, rng, out),
        Regex::Plus(c) | Regex::Star(c) => {
            let lo = usize::from(matches!(ast, Regex::Plus(_)));
            for _ in 0..rng.gen_range(lo..=max_rep.max(lo)) {
                push_word(c, max_rep, rng, out);
            }
        }
    }
}

fn single_run(word: &[Letter]) -> Option<Letter> {
    let c = *word.first()?;
    word.iter().all(|&x| x == c).then_some(c)
}

/// An expression coercible to `kind` whose language contains `word`, with
/// extra random material. `None` when no expression of that kind can hold
/// the word (e.g. a two-letter word for `|+`).
pub fn gen_containing<R: Rng>(
    kind: Kind,
    word: &[Letter],
    alphabet_size: usize,
    rng: &mut R,
) -> Option<Regex> {
    let sigma = alphabet(alphabet_size.clamp(1, 26));
    let extra = |rng: &mut R| -> Vec<Letter> {
        (0..rng.gen_range(0..3))
            .map(|_| pick(&sigma, rng))
            .collect()
    };
    let r = match kind {
        Kind::ConcatAlt => {
            if word.is_empty() {
                return None;
            }
            Regex::concat(
                word.iter()
                    .map(|&c| {
                        let mut set = vec![c];
                        set.extend(extra(rng));
                        set.shuffle(rng);
                        Regex::letter_set(&set)
                    })
                    .collect(),
            )
        }
        Kind::ConcatPlus => {
            if word.is_empty() {
                return None;
            }
            let mut parts: Vec<Regex> = Vec::new();
            let mut i = 0;
            while i < word.len() {
                let c = word[i];
                let mut j = i;
                while j < word.len() && word[j] == c {
                    j += 1;
                }
                let keep = rng.gen_range(1..=j - i);
                for k in 0..keep {
                    let last = k + 1 == keep;
                    parts.push(if last && (keep < j - i || rng.gen_bool(0.4)) {
                        Regex::plus(Regex::Leaf(c))
                    } else {
                        Regex::Leaf(c)
                    });
                }
                i = j;
            }
            Regex::concat(parts)
        }
        Kind::ConcatStar => {
            let mut parts: Vec<Regex> = Vec::new();
            for &c in word {
                if rng.gen_bool(0.3) {
                    parts.push(Regex::star(Regex::Leaf(pick(&sigma, rng))));
                }
                parts.push(if rng.gen_bool(0.3) {
                    Regex::star(Regex::Leaf(c))
                } else {
                    Regex::Leaf(c)
                });
            }
            parts.push(Regex::star(Regex::Leaf(pick(&sigma, rng))));
            Regex::concat(parts)
        }
        Kind::AltConcat => {
            if word.is_empty() {
                return None;
            }
            let mut words = vec![Regex::word(word)];
            for _ in 0..rng.gen_range(0..3) {
                let len = rng.gen_range(1..=word.len() + 1);
                let w: Word = (0..len).map(|_| pick(&sigma, rng)).collect();
                words.push(Regex::word(&w));
            }
            words.shuffle(rng);
            Regex::alt(words)
        }
        Kind::PlusConcat | Kind::StarConcat => {
            let root = if word.is_empty() {
                if kind == Kind::PlusConcat {
                    return None;
                }
                let len = rng.gen_range(1..=3);
                (0..len).map(|_| pick(&sigma, rng)).collect()
            } else {
                let p = primitive_root_len(word);
                word[..p].to_vec()
            };
            let body = Regex::word(&root);
            if kind == Kind::PlusConcat {
                Regex::plus(body)
            } else {
                Regex::star(body)
            }
        }
        Kind::AltPlus | Kind::AltStar => {
            let c = match single_run(word) {
                Some(c) => c,
                None if word.is_empty() && kind == Kind::AltStar => pick(&sigma, rng),
                None => return None,
            };
            let unary = |x: Regex| {
                if kind == Kind::AltPlus {
                    Regex::plus(x)
                } else {
                    Regex::star(x)
                }
            };
            let mut entries = vec![
                if word.len() == 1 && kind == Kind::AltPlus && rng.gen_bool(0.5) {
                    Regex::Leaf(c)
                } else {
                    unary(Regex::Leaf(c))
                },
            ];
            for x in extra(rng) {
                entries.push(if rng.gen_bool(0.5) {
                    unary(Regex::Leaf(x))
                } else {
                    Regex::Leaf(x)
                });
            }
            entries.shuffle(rng);
            Regex::alt(entries)
        }
        Kind::PlusAlt | Kind::StarAlt => {
            if word.is_empty() && kind == Kind::PlusAlt {
                return None;
            }
            let mut letters: Vec<Letter> = word.to_vec();
            letters.sort();
            letters.dedup();
            letters.extend(extra(rng));
            if letters.is_empty() {
                letters.push(pick(&sigma, rng));
            }
            letters.shuffle(rng);
            let body = Regex::letter_set(&letters);
            if kind == Kind::PlusAlt {
                Regex::plus(body)
            } else {
                Regex::star(body)
            }
        }
        Kind::PlusStar | Kind::StarPlus => {
            let c = match single_run(word) {
                Some(c) => c,
                None if word.is_empty() => pick(&sigma, rng),
                None => return None,
            };
            if kind == Kind::PlusStar {
                Regex::Plus(Box::new(Regex::star(Regex::Leaf(c))))
            } else {
                Regex::Star(Box::new(Regex::plus(Regex::Leaf(c))))
            }
        }
    };
    Some(r)
}

/// Input shapes for randomized pair testing: letters, the depth-1 types
/// and the twelve depth-2 types.
pub fn pair_shapes() -> Vec<TypeDescriptor> {
    let mut v = vec![TypeDescriptor::homogeneous(Vec::new())];
    v.extend(
        [Op::Concat, Op::Alt, Op::Plus, Op::Star].map(|o| TypeDescriptor::homogeneous(vec![o])),
    );
    v.extend(Kind::ALL.map(Kind::descriptor));
    v
}

fn size_bounds(ty: &TypeDescriptor) -> (usize, usize) {
    match ty.ops.as_slice() {
        [] | [Op::Plus] | [Op::Star] => (1, 1),
        [Op::Concat] | [Op::Alt] => (2, usize::MAX),
        _ => match ty.kind().map(size_range) {
            Some((lo, hi)) => (lo, hi.unwrap_or(usize::MAX)),
            None => (1, 1),
        },
    }
}

/// A random pair of the given shapes with at most `max_size` leaves per
/// side. About half of the pairs are planted: the second expression is
/// built around a random word of the first.
pub fn random_pair<R: Rng>(
    ta: &TypeDescriptor,
    tb: &TypeDescriptor,
    max_size: usize,
    alphabet_size: usize,
    rng: &mut R,
) -> (Regex, Regex) {
    let make = |ty: &TypeDescriptor, rng: &mut R| -> Regex {
        let (lo, hi) = size_bounds(ty);
        let size = rng.gen_range(lo..=hi.min(max_size).max(lo));
        gen_random_regex(ty, size, alphabet_size, rng).expect("size within the shape's range")
    };
    let a = make(ta, rng);
    if rng.gen_bool(0.5) {
        if let Some(kb) = tb.kind() {
            let w = random_word(&a, 3, rng);
            if let Some(b) = gen_containing(kb, &w, alphabet_size, rng) {
                if b.size() <= max_size.max(w.len()) + 8 {
                    return (a, b);
                }
            }
        }
    }
    let b = make(tb, rng);
    (a, b)
}

/// Length of the shortest `D` with `word = D^k`.
pub fn primitive_root_len(word: &[Letter]) -> usize {
    let n = word.len();
    (1..=n)
        .find(|&p| n.is_multiple_of(p) && word.chunks(p).all(|c| c == &word[..p]))
        .unwrap_or(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::member;
    use crate::canonical::coercible_kinds;
    use crate::types::classify;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_expressions_have_their_type_and_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for kind in Kind::ALL {
            let (lo, hi) = size_range(kind);
            for size in lo..=hi.unwrap_or(30) {
                for _ in 0..20 {
                    let r = gen_random_regex(&kind.descriptor(), size, 3, &mut rng).unwrap();
                    assert_eq!(r.size(), size);
                    assert_eq!(classify(&r).kind(), Some(kind), "{r}");
                    assert!(coercible_kinds(&r).contains(&kind), "{r}");
                }
            }
            if lo > 1 {
                assert!(gen_random_regex(&kind.descriptor(), lo - 1, 3, &mut rng).is_err());
            }
        }
    }

    #[test]
    fn deterministic_in_seed() {
        let gen = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            gen_random_regex(&Kind::ConcatAlt.descriptor(), 25, 3, &mut rng).unwrap()
        };
        assert_eq!(gen(3), gen(3));
    }

    #[test]
    fn planted_expressions_contain_the_word() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let src = Kind::ALL[rng.gen_range(0..12)];
            let (lo, hi) = size_range(src);
            let size = rng.gen_range(lo..=hi.unwrap_or(12));
            let a = gen_random_regex(&src.descriptor(), size, 3, &mut rng).unwrap();
            let w = random_word(&a, 3, &mut rng);
            assert!(member(&w, &a));
            for kind in Kind::ALL {
                if let Some(b) = gen_containing(kind, &w, 3, &mut rng) {
                    assert!(member(&w, &b), "{b} lacks {w:?}");
                    assert!(coercible_kinds(&b).contains(&kind), "{b} is not {kind}");
                }
            }
        }
    }
}
