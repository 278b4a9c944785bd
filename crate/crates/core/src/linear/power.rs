use super::{better, Algo, Answer};
use crate::canonical::{CanonicalForm, PowerKind, PowerStr, StrDict};
use crate::letter::{Letter, Word};

/// Whether `t1` and `t2` are powers of a common word, tested by the
/// commutation criterion `t1·t2 = t2·t1`.
pub fn common_divisor_exists(t1: &[Letter], t2: &[Letter]) -> bool {
    t1.iter().chain(t2).eq(t2.iter().chain(t1))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn is_power_of(w: &[Letter], t: &[Letter]) -> bool {
    !t.is_empty()
        && !w.is_empty()
        && w.len().is_multiple_of(t.len())
        && w.chunks(t.len()).all(|c| c == t)
}

/// `[T]⁺` against a dictionary: some word must be a positive power of `T`.
pub fn intersect_power_dict(a: &PowerStr, b: &StrDict) -> Answer {
    let mut best: Option<&[Letter]> = None;
    for w in b.words() {
        if better(w, best) && is_power_of(w, &a.word) {
            best = Some(w);
        }
    }
    match best {
        Some(w) => Answer::nonempty(w.to_vec(), Algo::PowerDict),
        None => Answer::empty(Algo::PowerDict),
    }
}

/// `[T1]⁺ ⊓ [T2]⁺`. When the words commute, both are powers of a common
/// primitive root `D` and the intersection is `[D^{lcm}]⁺`, spelled here as
/// `[T1^{|T2|/g}]⁺` with `g = gcd(|T1|, |T2|)`.
pub fn intersect_power_power(a: &PowerStr, b: &PowerStr) -> Answer {
    if !common_divisor_exists(&a.word, &b.word) {
        return Answer::empty(Algo::PowerPower);
    }
    let g = gcd(a.word.len(), b.word.len());
    let period: Word = a
        .word
        .iter()
        .copied()
        .cycle()
        .take(a.word.len() / g * b.word.len())
        .collect();
    let form = PowerStr {
        word: period.clone(),
        kind: PowerKind::Plus,
    };
    Answer::nonempty(period, Algo::PowerPower).with_intersection(CanonicalForm::PowerStr(form))
}

/// `[T]*` against a form of type `∘|`, `∘+`, `|∘`, `+∘` or `*∘`. Two star
/// powers share ε; otherwise the other side is ε-free, so `[T]*` can be
/// replaced by `[T]⁺`.
pub fn intersect_star_reduce(a: &PowerStr, b: &CanonicalForm) -> Option<Answer> {
    let plus = PowerStr {
        word: a.word.clone(),
        kind: PowerKind::Plus,
    };
    Some(match b {
        CanonicalForm::PowerStr(p) if p.kind == PowerKind::Star => {
            Answer::nonempty(Vec::new(), Algo::StarEpsilon)
        }
        CanonicalForm::PowerStr(p) => intersect_power_power(&plus, p),
        CanonicalForm::PosSets(s) => super::intersect_possets_power(s, &plus),
        CanonicalForm::RunSeq(r) => super::intersect_runseq_power(r, &plus),
        CanonicalForm::StrDict(d) => intersect_power_dict(&plus, d),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::PosSets;
    use crate::letter::{l, parse_word, render_word};

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn plus(t: &str) -> PowerStr {
        PowerStr {
            word: w(t),
            kind: PowerKind::Plus,
        }
    }

    fn star(t: &str) -> PowerStr {
        PowerStr {
            word: w(t),
            kind: PowerKind::Star,
        }
    }

    fn witness(a: &Answer) -> Option<String> {
        a.witness().map(render_word)
    }

    #[test]
    fn commutation() {
        assert!(common_divisor_exists(&w("abab"), &w("ab")));
        assert!(!common_divisor_exists(&w("ab"), &w("ba")));
        assert!(common_divisor_exists(&w("aa"), &w("aaa")));
    }

    #[test]
    fn power_pairs() {
        assert_eq!(
            witness(&intersect_power_power(&plus("abab"), &plus("ab"))).as_deref(),
            Some("abab")
        );
        assert!(intersect_power_power(&plus("ab"), &plus("ba")).is_empty());
        let ans = intersect_power_power(&plus("aa"), &plus("aaa"));
        assert_eq!(witness(&ans).as_deref(), Some("aaaaaa"));
        assert_eq!(
            ans.intersection,
            Some(CanonicalForm::PowerStr(plus("aaaaaa")))
        );
    }

    #[test]
    fn power_against_dictionary() {
        let d = |ws: &[&str]| StrDict::from_words(ws.iter().map(|s| w(s)));
        assert_eq!(
            witness(&intersect_power_dict(&plus("ab"), &d(&["abab", "aba"]))).as_deref(),
            Some("abab")
        );
        assert!(intersect_power_dict(&plus("ab"), &d(&["ba"])).is_empty());
        assert_eq!(
            witness(&intersect_power_dict(&plus("a"), &d(&["aaa"]))).as_deref(),
            Some("aaa")
        );
    }

    #[test]
    fn star_reduction() {
        let ans =
            intersect_star_reduce(&star("baab"), &CanonicalForm::PowerStr(star("aab"))).unwrap();
        assert_eq!(ans.witness(), Some(&[][..]));
        let d = CanonicalForm::StrDict(StrDict::from_words([w("abab")]));
        assert_eq!(
            witness(&intersect_star_reduce(&star("ab"), &d).unwrap()).as_deref(),
            Some("abab")
        );
        let p = CanonicalForm::PosSets(PosSets::from_sets(&[vec![l('b')], vec![l('a')]]));
        assert!(intersect_star_reduce(&star("ab"), &p).unwrap().is_empty());
    }
}
