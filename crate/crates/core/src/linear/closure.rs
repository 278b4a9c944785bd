use super::{better, Algo, Answer};
use crate::canonical::{AlphaClosure, CanonicalForm};
use crate::letter::{Letter, LetterTable, Word};

/// `Σ_A⁺` or `Σ_A*` against any form: the intersection is nonempty iff the
/// other language has a word over `Σ_A` (ε counts only when both sides
/// are nullable).
pub fn intersect_closure_any(a: &AlphaClosure, b: &CanonicalForm) -> Answer {
    if a.epsilon && b.nullable() {
        return Answer::nonempty(Vec::new(), Algo::Closure);
    }
    let mut sigma = LetterTable::for_letters(&a.letters);
    for &c in &a.letters {
        sigma.insert(c);
    }
    let inside = |c: &Letter| sigma.contains(*c);
    let smallest_inside =
        |letters: &mut dyn Iterator<Item = Letter>| letters.filter(|c| sigma.contains(*c)).min();
    let found: Option<Word> = match b {
        CanonicalForm::PosSets(p) => {
            let mut w = Vec::with_capacity(p.len());
            for set in p.sets() {
                match set.iter().find(|c| inside(c)) {
                    Some(&c) => w.push(c),
                    None => break,
                }
            }
            (w.len() == p.len()).then_some(w)
        }
        CanonicalForm::RunSeq(r) => r
            .runs
            .iter()
            .all(|run| inside(&run.letter))
            .then(|| r.shortest_word()),
        CanonicalForm::StrDict(d) => {
            let mut best: Option<&[Letter]> = None;
            for w in d.words() {
                if better(w, best) && w.iter().all(inside) {
                    best = Some(w);
                }
            }
            best.map(<[Letter]>::to_vec)
        }
        CanonicalForm::PowerStr(p) => p.word.iter().all(inside).then(|| p.word.clone()),
        CanonicalForm::StarSeq(s) => {
            let bare: Word = s.items.iter().filter(|i| !i.1).map(|i| i.0).collect();
            if !bare.iter().all(inside) {
                None
            } else if !bare.is_empty() {
                Some(bare)
            } else {
                // every item is starred and ε alone is not enough
                smallest_inside(&mut s.items.iter().map(|i| i.0)).map(|c| vec![c])
            }
        }
        CanonicalForm::RunAlt(r) => {
            smallest_inside(&mut r.entries.iter().map(|e| e.0)).map(|c| vec![c])
        }
        CanonicalForm::AlphaClosure(o) => {
            smallest_inside(&mut o.letters.iter().copied()).map(|c| vec![c])
        }
    };
    match found {
        Some(w) => Answer::nonempty(w, Algo::Closure),
        None => Answer::empty(Algo::Closure),
    }
}
