use super::{Algo, Answer};
use crate::canonical::{CanonicalForm, RunAlt};
use crate::letter::{Letter, LetterTable};

/// For each letter `c`, the shortest run `c^n` (n ≥ 1) in the language of
/// `b`, if any.
fn shortest_runs(b: &CanonicalForm) -> Vec<(Letter, usize)> {
    match b {
        CanonicalForm::PosSets(p) => {
            let h = p.len();
            let cap = p
                .all_letters()
                .iter()
                .map(|c| c.index() + 1)
                .max()
                .unwrap_or(0);
            let mut count = vec![0usize; cap];
            for set in p.sets() {
                for c in set {
                    count[c.index()] += 1;
                }
            }
            let mut out = Vec::new();
            for &c in p.set(0) {
                if count[c.index()] == h {
                    out.push((c, h));
                }
            }
            out
        }
        CanonicalForm::RunSeq(r) => match r.runs.as_slice() {
            [run] => vec![(run.letter, run.len)],
            _ => Vec::new(),
        },
        CanonicalForm::StrDict(d) => d
            .words()
            .filter(|w| w.iter().all(|&c| c == w[0]))
            .map(|w| (w[0], w.len()))
            .collect(),
        CanonicalForm::PowerStr(p) => {
            if p.word.iter().all(|&c| c == p.word[0]) {
                vec![(p.word[0], p.word.len())]
            } else {
                Vec::new()
            }
        }
        CanonicalForm::StarSeq(s) => {
            let mut bare = s.items.iter().filter(|i| !i.1).map(|i| i.0);
            match bare.next() {
                None => s.items.iter().map(|i| (i.0, 1)).collect(),
                Some(first) => {
                    if bare.any(|c| c != first) {
                        Vec::new()
                    } else {
                        let mu = s.items.iter().filter(|i| !i.1).count();
                        vec![(first, mu)]
                    }
                }
            }
        }
        CanonicalForm::RunAlt(r) => r.entries.iter().map(|e| (e.0, 1)).collect(),
        CanonicalForm::AlphaClosure(a) => a.letters.iter().map(|&c| (c, 1)).collect(),
    }
}

/// An alternation of runs `c` / `c⁺` (and ε when allowed) against any form.
///
/// An open entry for `c` matches any run of `c`; a closed entry matches
/// only the single letter. So for each letter, the other side must offer
/// some run (open entry) or a run of length exactly 1 (closed entry).
pub fn intersect_runalt_any(a: &RunAlt, b: &CanonicalForm) -> Answer {
    if a.epsilon && b.nullable() {
        return Answer::nonempty(Vec::new(), Algo::RunAlt);
    }
    let mut present = LetterTable::for_letters(a.entries.iter().map(|e| &e.0));
    let mut open = LetterTable::for_letters(a.entries.iter().map(|e| &e.0));
    for &(c, is_open) in &a.entries {
        present.insert(c);
        if is_open {
            open.insert(c);
        }
    }
    let mut best: Option<(usize, Letter)> = None;
    for (c, len) in shortest_runs(b) {
        let usable = present.contains(c) && (open.contains(c) || len == 1);
        if usable && best.is_none_or(|cur| (len, c) < cur) {
            best = Some((len, c));
        }
    }
    match best {
        Some((len, c)) => Answer::nonempty(vec![c; len], Algo::RunAlt),
        None => Answer::empty(Algo::RunAlt),
    }
}
