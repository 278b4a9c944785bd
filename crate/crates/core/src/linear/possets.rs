use super::{better, Algo, Answer};
use crate::canonical::{CanonicalForm, PosSets, PowerStr, StrDict};
use crate::letter::{Letter, LetterTable};

/// Positionwise intersection of two letter-set sequences.
pub fn intersect_possets_possets(a: &PosSets, b: &PosSets) -> Answer {
    if a.len() != b.len() {
        return Answer::empty(Algo::PosSetsPosSets);
    }
    let mut pairs = Vec::new();
    for i in 0..a.len() {
        let (x, y) = (a.set(i), b.set(i));
        let before = pairs.len();
        let (mut p, mut q) = (0, 0);
        while p < x.len() && q < y.len() {
            match x[p].cmp(&y[q]) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => {
                    pairs.push((i as u32, x[p]));
                    p += 1;
                    q += 1;
                }
            }
        }
        if pairs.len() == before {
            return Answer::empty(Algo::PosSetsPosSets);
        }
    }
    let form = PosSets::from_tagged(a.len(), pairs);
    let witness = form.sets().map(|s| s[0]).collect();
    Answer::nonempty(witness, Algo::PosSetsPosSets).with_intersection(CanonicalForm::PosSets(form))
}

/// Words of the dictionary that fit the letter-set sequence.
pub fn intersect_possets_dict(a: &PosSets, b: &StrDict) -> Answer {
    let k = a.len();
    let mut alive: Vec<usize> = (0..b.len()).filter(|&j| b.word(j).len() == k).collect();
    let mut table = LetterTable::for_letters(a.all_letters());
    for i in 0..k {
        if alive.is_empty() {
            break;
        }
        table.clear();
        for &c in a.set(i) {
            table.insert(c);
        }
        alive.retain(|&j| table.contains(b.word(j)[i]));
    }
    let mut best: Option<&[Letter]> = None;
    for &j in &alive {
        if better(b.word(j), best) {
            best = Some(b.word(j));
        }
    }
    match best {
        Some(w) => Answer::nonempty(w.to_vec(), Algo::PosSetsDict),
        None => Answer::empty(Algo::PosSetsDict),
    }
}

/// A letter-set sequence against `[T]⁺`: only `T^{k/|T|}` can match.
pub fn intersect_possets_power(a: &PosSets, b: &PowerStr) -> Answer {
    let (k, t) = (a.len(), &b.word);
    if t.is_empty() || k % t.len() != 0 {
        return Answer::empty(Algo::PosSetsPower);
    }
    for i in 0..k {
        if !a.set(i).contains(&t[i % t.len()]) {
            return Answer::empty(Algo::PosSetsPower);
        }
    }
    let word: Vec<Letter> = t.iter().copied().cycle().take(k).collect();
    let form = PosSets::from_tagged(
        k,
        word.iter()
            .enumerate()
            .map(|(i, &c)| (i as u32, c))
            .collect(),
    );
    Answer::nonempty(word, Algo::PosSetsPower).with_intersection(CanonicalForm::PosSets(form))
}
