use super::{better, Algo, Answer};
use crate::canonical::{CanonicalForm, PowerStr, Run, RunSeq, StrDict};
use crate::letter::{Letter, Word};

/// Intersection of two runs of the same letter, if nonempty.
fn meet(x: Run, y: Run) -> Option<Run> {
    match (x.open, y.open) {
        (false, false) => (x.len == y.len).then_some(x),
        (true, false) => (y.len >= x.len).then_some(y),
        (false, true) => (x.len >= y.len).then_some(x),
        (true, true) => Some(Run::open(x.letter, x.len.max(y.len))),
    }
}

/// Runwise intersection of two run sequences.
pub fn intersect_runseq_runseq(a: &RunSeq, b: &RunSeq) -> Answer {
    if a.runs.len() != b.runs.len() {
        return Answer::empty(Algo::RunSeqRunSeq);
    }
    let mut runs = Vec::with_capacity(a.runs.len());
    for (&x, &y) in a.runs.iter().zip(&b.runs) {
        if x.letter != y.letter {
            return Answer::empty(Algo::RunSeqRunSeq);
        }
        match meet(x, y) {
            Some(r) => runs.push(r),
            None => return Answer::empty(Algo::RunSeqRunSeq),
        }
    }
    let form = RunSeq { runs };
    Answer::nonempty(form.shortest_word(), Algo::RunSeqRunSeq)
        .with_intersection(CanonicalForm::RunSeq(form))
}

/// Whether `word` matches the run sequence, decomposing it on the fly.
pub(crate) fn runseq_accepts(a: &RunSeq, word: &[Letter]) -> bool {
    let mut i = 0;
    for r in &a.runs {
        let start = i;
        while i < word.len() && word[i] == r.letter {
            i += 1;
        }
        if !r.admits(i - start) {
            return false;
        }
    }
    i == word.len()
}

/// Dictionary words accepted by the run sequence.
pub fn intersect_runseq_dict(a: &RunSeq, b: &StrDict) -> Answer {
    let mut best: Option<&[Letter]> = None;
    for w in b.words() {
        if better(w, best) && runseq_accepts(a, w) {
            best = Some(w);
        }
    }
    match best {
        Some(w) => Answer::nonempty(w.to_vec(), Algo::RunSeqDict),
        None => Answer::empty(Algo::RunSeqDict),
    }
}

/// A run sequence against `[T]⁺`.
///
/// With `T = b_1^{ℓ_1}⋯b_h^{ℓ_h}`, the power `T^j` has `jh` runs when
/// `b_1 ≠ b_h` and `j(h-1)+1` runs otherwise (boundary runs merge into
/// `b_h^{ℓ_h+ℓ_1}`), so the run count of `a` fixes `j`.
pub fn intersect_runseq_power(a: &RunSeq, b: &PowerStr) -> Answer {
    let t = RunSeq::of_word(&b.word).runs;
    let (k, h) = (a.runs.len(), t.len());
    let empty = Answer::empty(Algo::RunSeqPower);
    if h == 0 || h > k {
        return empty;
    }
    let emit = |j: usize| -> Answer {
        let word: Word = b
            .word
            .iter()
            .copied()
            .cycle()
            .take(j * b.word.len())
            .collect();
        Answer::nonempty(word, Algo::RunSeqPower)
    };
    if h == 1 {
        let (c, l) = (t[0].letter, t[0].len);
        let r = a.runs[0];
        if k != 1 || r.letter != c {
            return empty;
        }
        return if r.open {
            emit(r.len.div_ceil(l).max(1))
        } else if r.len.is_multiple_of(l) {
            emit(r.len / l)
        } else {
            empty
        };
    }
    let wraps = t[0].letter == t[h - 1].letter;
    let (j, required): (usize, Box<dyn Fn(usize) -> Run>) = if wraps {
        if (k - 1) % (h - 1) != 0 {
            return empty;
        }
        let merged = Run::closed(t[0].letter, t[h - 1].len + t[0].len);
        (
            (k - 1) / (h - 1),
            Box::new(move |i: usize| {
                if i == 0 {
                    t[0]
                } else if i == k - 1 {
                    t[h - 1]
                } else if i.is_multiple_of(h - 1) {
                    merged
                } else {
                    t[i % (h - 1)]
                }
            }),
        )
    } else {
        if k % h != 0 {
            return empty;
        }
        (k / h, Box::new(move |i: usize| t[i % h]))
    };
    for (i, r) in a.runs.iter().enumerate() {
        let want = required(i);
        if r.letter != want.letter || !r.admits(want.len) {
            return empty;
        }
    }
    emit(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{extract_canonical, PowerKind};
    use crate::letter::{l, parse_word, render_word};
    use crate::parse::parse;
    use crate::types::Kind;

    fn rs(s: &str) -> RunSeq {
        match extract_canonical(&parse(s).unwrap(), Kind::ConcatPlus).unwrap() {
            CanonicalForm::RunSeq(r) => r,
            _ => unreachable!(),
        }
    }

    fn plus(t: &str) -> PowerStr {
        PowerStr {
            word: parse_word(t).unwrap(),
            kind: PowerKind::Plus,
        }
    }

    fn witness(a: &Answer) -> String {
        render_word(a.witness().unwrap())
    }

    #[test]
    fn runwise_rules() {
        let ans = intersect_runseq_runseq(&rs("b+bc+c+a"), &rs("bbbc+ca"));
        assert_eq!(witness(&ans), "bbbcca");
        assert_eq!(
            ans.intersection,
            Some(CanonicalForm::RunSeq(RunSeq {
                runs: vec![
                    Run::closed(l('b'), 3),
                    Run::open(l('c'), 2),
                    Run::closed(l('a'), 1)
                ]
            }))
        );
        assert!(intersect_runseq_runseq(&rs("bb+"), &rs("b")).is_empty());
        assert_eq!(
            intersect_runseq_runseq(&rs("a+"), &rs("a+"))
                .intersection
                .unwrap()
                .to_string(),
            "a+"
        );
    }

    #[test]
    fn dictionary_runs() {
        let a = rs("ab+a+a");
        let d = StrDict::from_words([parse_word("abaa").unwrap(), parse_word("aba").unwrap()]);
        assert_eq!(witness(&intersect_runseq_dict(&a, &d)), "abaa");
        assert!(
            intersect_runseq_dict(&a, &StrDict::from_words([parse_word("ba").unwrap()])).is_empty()
        );
        assert_eq!(
            witness(&intersect_runseq_dict(
                &rs("a"),
                &StrDict::from_words([vec![l('a')]])
            )),
            "a"
        );
    }

    #[test]
    fn power_alignment() {
        assert_eq!(
            witness(&intersect_runseq_power(&rs("a+ba+ab a+"), &plus("aba"))),
            "abaaba"
        );
        // a b² a b² is itself (abb)²
        assert_eq!(
            witness(&intersect_runseq_power(&rs("a+bba+bb"), &plus("abb"))),
            "abbabb"
        );
        assert!(intersect_runseq_power(&rs("a+bba+b"), &plus("abb")).is_empty());
        assert_eq!(
            witness(&intersect_runseq_power(&rs("aa+"), &plus("a"))),
            "aa"
        );
        assert_eq!(
            witness(&intersect_runseq_power(&rs("aaaa"), &plus("aa"))),
            "aaaa"
        );
        assert!(intersect_runseq_power(&rs("aaa"), &plus("aa")).is_empty());
        assert_eq!(
            witness(&intersect_runseq_power(&rs("a+b+"), &plus("ab"))),
            "ab"
        );
        assert_eq!(
            witness(&intersect_runseq_power(&rs("aaa+"), &plus("aa"))),
            "aaaa"
        );
        assert!(intersect_runseq_power(&rs("a+b+a"), &plus("ab")).is_empty());
    }
}
