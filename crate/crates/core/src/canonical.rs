//! Algorithm-ready normal forms of homogeneous depth-≤2 expressions and
//! the language-preserving coercions between shapes.
//!
//! A shallow expression can often be read as several depth-2 types at
//! once: the string `aaa` is also the position-set sequence
//! `[a][a][a]`, the run sequence `a³` and the one-word dictionary
//! `[aaa]`. [`coercible_types`] lists every such reading whose canonical
//! form has exactly the language of the input.

use std::fmt;

use thiserror::Error;

use crate::ast::Regex;
use crate::letter::{Letter, Word};
use crate::radix;
use crate::types::{Kind, TypeDescriptor};

/// Sorts each run of equal positions by letter in place.
fn sort_groups(pairs: &mut [(u32, Letter)]) {
    let mut i = 0;
    while i < pairs.len() {
        let mut j = i + 1;
        while j < pairs.len() && pairs[j].0 == pairs[i].0 {
            j += 1;
        }
        if j - i <= 64 {
            let g = &mut pairs[i..j];
            for a in 1..g.len() {
                let mut b = a;
                while b > 0 && g[b - 1].1 > g[b].1 {
                    g.swap(b - 1, b);
                    b -= 1;
                }
            }
        } else {
            let mut g = pairs[i..j].to_vec();
            radix::sort_by_key(&mut g, |p| p.1 .0);
            pairs[i..j].copy_from_slice(&g);
        }
        i = j;
    }
}

/// Concatenation of nonempty letter sets (type `∘|`). Each set is sorted
/// and deduplicated; storage is flat with offsets.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PosSets {
    letters: Vec<Letter>,
    bounds: Vec<usize>,
}

impl PosSets {
    /// Builds from `(position, letter)` pairs; positions must be `< k` and
    /// every position must receive at least one letter.
    pub fn from_tagged(k: usize, mut pairs: Vec<(u32, Letter)>) -> PosSets {
        if pairs.windows(2).all(|w| w[0].0 <= w[1].0) {
            sort_groups(&mut pairs);
        } else {
            radix::sort_by_key(&mut pairs, |p| p.1 .0);
            radix::sort_by_key(&mut pairs, |p| p.0);
        }
        let mut letters = Vec::with_capacity(pairs.len());
        let mut bounds = Vec::with_capacity(k + 1);
        bounds.push(0);
        let mut current = 0u32;
        let mut last: Option<Letter> = None;
        for (pos, c) in pairs {
            while current < pos {
                bounds.push(letters.len());
                current += 1;
                last = None;
            }
            if last != Some(c) {
                letters.push(c);
                last = Some(c);
            }
        }
        while bounds.len() < k + 1 {
            bounds.push(letters.len());
        }
        debug_assert!(bounds.windows(2).all(|w| w[0] < w[1]), "empty position set");
        PosSets { letters, bounds }
    }

    pub fn from_sets(sets: &[Vec<Letter>]) -> PosSets {
        let pairs = sets
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().map(move |&c| (i as u32, c)))
            .collect();
        PosSets::from_tagged(sets.len(), pairs)
    }

    pub fn len(&self) -> usize {
        self.bounds.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn set(&self, i: usize) -> &[Letter] {
        &self.letters[self.bounds[i]..self.bounds[i + 1]]
    }

    pub fn sets(&self) -> impl Iterator<Item = &[Letter]> + '_ {
        (0..self.len()).map(move |i| self.set(i))
    }

    pub fn all_letters(&self) -> &[Letter] {
        &self.letters
    }
}

/// One run `c^len` (closed) or `c^{len+}` = `c^{len-1}c⁺` (open).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Run {
    pub letter: Letter,
    pub len: usize,
    pub open: bool,
}

impl Run {
    pub fn closed(letter: Letter, len: usize) -> Run {
        Run {
            letter,
            len,
            open: false,
        }
    }

    pub fn open(letter: Letter, len: usize) -> Run {
        Run {
            letter,
            len,
            open: true,
        }
    }

    /// Whether `letter^n` matches this run.
    pub fn admits(&self, n: usize) -> bool {
        if self.open {
            n >= self.len
        } else {
            n == self.len
        }
    }
}

/// Maximal runs with adjacent letters distinct (type `∘+`).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RunSeq {
    pub runs: Vec<Run>,
}

impl RunSeq {
    /// Merges adjacent same-letter runs using `c⁺cˡ ≡ cˡc⁺` and
    /// `(c⁺)ˡ ≡ c^{ℓ-1}c⁺`.
    pub fn from_runs(runs: impl IntoIterator<Item = Run>) -> RunSeq {
        let mut out: Vec<Run> = Vec::new();
        for r in runs {
            match out.last_mut() {
                Some(last) if last.letter == r.letter => {
                    last.len += r.len;
                    last.open |= r.open;
                }
                _ => out.push(r),
            }
        }
        RunSeq { runs: out }
    }

    /// Run decomposition of a word (all runs closed).
    pub fn of_word(word: &[Letter]) -> RunSeq {
        RunSeq::from_runs(word.iter().map(|&c| Run::closed(c, 1)))
    }

    pub fn shortest_word(&self) -> Word {
        let mut w = Vec::new();
        for r in &self.runs {
            w.extend(std::iter::repeat_n(r.letter, r.len));
        }
        w
    }
}

impl fmt::Display for RunSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.runs {
            write!(f, "{}", r.letter)?;
            if r.len > 1 {
                write!(f, "{}", r.len)?;
            }
            if r.open {
                f.write_str("+")?;
            }
        }
        Ok(())
    }
}

/// Finite dictionary of nonempty words (type `|∘`), flat storage.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct StrDict {
    letters: Vec<Letter>,
    bounds: Vec<usize>,
}

impl StrDict {
    pub fn new() -> StrDict {
        StrDict {
            letters: Vec::new(),
            bounds: vec![0],
        }
    }

    pub fn from_words<W: AsRef<[Letter]>>(words: impl IntoIterator<Item = W>) -> StrDict {
        let mut d = StrDict::new();
        for w in words {
            d.push(w.as_ref());
        }
        d
    }

    pub fn push(&mut self, word: &[Letter]) {
        assert!(!word.is_empty(), "dictionary words are nonempty");
        self.letters.extend_from_slice(word);
        self.bounds.push(self.letters.len());
    }

    pub fn len(&self) -> usize {
        self.bounds.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn word(&self, i: usize) -> &[Letter] {
        &self.letters[self.bounds[i]..self.bounds[i + 1]]
    }

    pub fn words(&self) -> impl Iterator<Item = &[Letter]> + '_ {
        (0..self.len()).map(move |i| self.word(i))
    }

    pub fn all_letters(&self) -> &[Letter] {
        &self.letters
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PowerKind {
    Plus,
    Star,
}

/// `[T]⁺` or `[T]*` for a nonempty word `T` (types `+∘`, `*∘`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerStr {
    pub word: Word,
    pub kind: PowerKind,
}

/// Letters, each optionally starred (type `∘*`).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct StarSeq {
    pub items: Vec<(Letter, bool)>,
}

/// Alternation of single-letter runs `c` (closed) or `c⁺` (open), plus ε
/// when `epsilon` (types `|+`, `|*`). One entry per letter; an open entry
/// absorbs a closed one for the same letter.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RunAlt {
    pub entries: Vec<(Letter, bool)>,
    pub epsilon: bool,
}

impl RunAlt {
    pub fn new(raw: Vec<(Letter, bool)>, epsilon: bool) -> RunAlt {
        let mut raw = raw;
        radix::sort_by_key(&mut raw, |e| e.0 .0);
        let mut entries: Vec<(Letter, bool)> = Vec::with_capacity(raw.len());
        for (c, open) in raw {
            match entries.last_mut() {
                Some(last) if last.0 == c => last.1 |= open,
                _ => entries.push((c, open)),
            }
        }
        RunAlt { entries, epsilon }
    }
}

/// `Σ_A⁺` or `Σ_A*` (types `+|`, `*|`, and `(c⁺)*`, `(c*)⁺`). Letters
/// sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlphaClosure {
    pub letters: Vec<Letter>,
    pub epsilon: bool,
}

impl AlphaClosure {
    pub fn new(letters: Vec<Letter>, epsilon: bool) -> AlphaClosure {
        AlphaClosure {
            letters: sorted_set(letters),
            epsilon,
        }
    }
}

pub(crate) fn sorted_set(mut letters: Vec<Letter>) -> Vec<Letter> {
    radix::sort_by_key(&mut letters, |c| c.0);
    letters.dedup();
    letters
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CanonicalForm {
    PosSets(PosSets),
    RunSeq(RunSeq),
    StrDict(StrDict),
    PowerStr(PowerStr),
    StarSeq(StarSeq),
    RunAlt(RunAlt),
    AlphaClosure(AlphaClosure),
}

/// Coarse tag of a form; `PowerStr` is split by its operator because the
/// two variants route differently.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FormTag {
    PosSets,
    RunSeq,
    StrDict,
    PowerPlus,
    PowerStar,
    StarSeq,
    RunAlt,
    AlphaClosure,
}

impl FormTag {
    pub fn of_kind(kind: Kind) -> FormTag {
        match kind {
            Kind::ConcatAlt => FormTag::PosSets,
            Kind::ConcatPlus => FormTag::RunSeq,
            Kind::ConcatStar => FormTag::StarSeq,
            Kind::AltConcat => FormTag::StrDict,
            Kind::PlusConcat => FormTag::PowerPlus,
            Kind::StarConcat => FormTag::PowerStar,
            Kind::AltPlus | Kind::AltStar => FormTag::RunAlt,
            Kind::PlusAlt | Kind::StarAlt | Kind::PlusStar | Kind::StarPlus => {
                FormTag::AlphaClosure
            }
        }
    }
}

impl CanonicalForm {
    pub fn tag(&self) -> FormTag {
        match self {
            CanonicalForm::PosSets(_) => FormTag::PosSets,
            CanonicalForm::RunSeq(_) => FormTag::RunSeq,
            CanonicalForm::StrDict(_) => FormTag::StrDict,
            CanonicalForm::PowerStr(p) => match p.kind {
                PowerKind::Plus => FormTag::PowerPlus,
                PowerKind::Star => FormTag::PowerStar,
            },
            CanonicalForm::StarSeq(_) => FormTag::StarSeq,
            CanonicalForm::RunAlt(_) => FormTag::RunAlt,
            CanonicalForm::AlphaClosure(_) => FormTag::AlphaClosure,
        }
    }

    /// Whether ε belongs to the language.
    pub fn nullable(&self) -> bool {
        match self {
            CanonicalForm::PosSets(_) | CanonicalForm::RunSeq(_) | CanonicalForm::StrDict(_) => {
                false
            }
            CanonicalForm::PowerStr(p) => p.kind == PowerKind::Star,
            CanonicalForm::StarSeq(s) => s.items.iter().all(|&(_, starred)| starred),
            CanonicalForm::RunAlt(r) => r.epsilon,
            CanonicalForm::AlphaClosure(a) => a.epsilon,
        }
    }

    /// An expression with the same language, or `None` when the form has
    /// no letter-built spelling (an ε-only `RunAlt` with no open entry, or
    /// an empty set).
    pub fn to_regex(&self) -> Option<Regex> {
        match self {
            CanonicalForm::PosSets(p) => {
                if p.is_empty() {
                    return None;
                }
                Some(Regex::concat(p.sets().map(Regex::letter_set).collect()))
            }
            CanonicalForm::RunSeq(r) => {
                if r.runs.is_empty() {
                    return None;
                }
                let mut parts = Vec::new();
                for run in &r.runs {
                    let closed = if run.open { run.len - 1 } else { run.len };
                    parts.extend(std::iter::repeat_n(Regex::Leaf(run.letter), closed));
                    if run.open {
                        parts.push(Regex::plus(Regex::Leaf(run.letter)));
                    }
                }
                Some(Regex::concat(parts))
            }
            CanonicalForm::StrDict(d) => {
                if d.is_empty() {
                    return None;
                }
                Some(Regex::alt(d.words().map(Regex::word).collect()))
            }
            CanonicalForm::PowerStr(p) => {
                let w = Regex::word(&p.word);
                Some(match p.kind {
                    PowerKind::Plus => Regex::plus(w),
                    PowerKind::Star => Regex::star(w),
                })
            }
            CanonicalForm::StarSeq(s) => {
                if s.items.is_empty() {
                    return None;
                }
                Some(Regex::concat(
                    s.items
                        .iter()
                        .map(|&(c, starred)| {
                            if starred {
                                Regex::star(Regex::Leaf(c))
                            } else {
                                Regex::Leaf(c)
                            }
                        })
                        .collect(),
                ))
            }
            CanonicalForm::RunAlt(r) => {
                if r.entries.is_empty() || (r.epsilon && !r.entries.iter().any(|e| e.1)) {
                    return None;
                }
                Some(Regex::alt(
                    r.entries
                        .iter()
                        .map(|&(c, open)| match (open, r.epsilon) {
                            (false, _) => Regex::Leaf(c),
                            (true, false) => Regex::plus(Regex::Leaf(c)),
                            (true, true) => Regex::star(Regex::Leaf(c)),
                        })
                        .collect(),
                ))
            }
            CanonicalForm::AlphaClosure(a) => {
                if a.letters.is_empty() {
                    return None;
                }
                let set = Regex::letter_set(&a.letters);
                Some(if a.epsilon {
                    Regex::star(set)
                } else {
                    Regex::plus(set)
                })
            }
        }
    }

    /// Membership test without building an automaton.
    pub fn accepts(&self, word: &[Letter]) -> bool {
        match self {
            CanonicalForm::PosSets(p) => {
                word.len() == p.len()
                    && word
                        .iter()
                        .enumerate()
                        .all(|(i, c)| p.set(i).binary_search(c).is_ok())
            }
            CanonicalForm::RunSeq(r) => {
                let mut i = 0;
                for run in &r.runs {
                    let start = i;
                    while i < word.len() && word[i] == run.letter {
                        i += 1;
                    }
                    if !run.admits(i - start) {
                        return false;
                    }
                }
                i == word.len()
            }
            CanonicalForm::StrDict(d) => d.words().any(|w| w == word),
            CanonicalForm::PowerStr(p) => {
                if word.is_empty() {
                    return p.kind == PowerKind::Star;
                }
                word.len().is_multiple_of(p.word.len())
                    && word.chunks(p.word.len()).all(|c| c == p.word.as_slice())
            }
            CanonicalForm::StarSeq(s) => {
                // reach[i]: some prefix of the items up to i matches the word read so far
                let k = s.items.len();
                let mut reach = vec![false; k + 1];
                reach[0] = true;
                let close = |reach: &mut Vec<bool>| {
                    for i in 0..k {
                        if reach[i] && s.items[i].1 {
                            reach[i + 1] = true;
                        }
                    }
                };
                close(&mut reach);
                for &c in word {
                    let mut next = vec![false; k + 1];
                    for i in 0..k {
                        if reach[i] && s.items[i].0 == c {
                            if s.items[i].1 {
                                next[i] = true;
                            }
                            next[i + 1] = true;
                        }
                    }
                    close(&mut next);
                    reach = next;
                }
                reach[k]
            }
            CanonicalForm::RunAlt(r) => match word.first() {
                None => r.epsilon,
                Some(&c) => {
                    word.iter().all(|&x| x == c)
                        && r.entries
                            .iter()
                            .any(|&(e, open)| e == c && (open || word.len() == 1))
                }
            },
            CanonicalForm::AlphaClosure(a) => {
                (a.epsilon || !word.is_empty())
                    && word.iter().all(|c| a.letters.binary_search(c).is_ok())
            }
        }
    }

    /// All letters mentioned by the form.
    pub fn letters(&self) -> Vec<Letter> {
        match self {
            CanonicalForm::PosSets(p) => p.all_letters().to_vec(),
            CanonicalForm::RunSeq(r) => r.runs.iter().map(|r| r.letter).collect(),
            CanonicalForm::StrDict(d) => d.all_letters().to_vec(),
            CanonicalForm::PowerStr(p) => p.word.clone(),
            CanonicalForm::StarSeq(s) => s.items.iter().map(|i| i.0).collect(),
            CanonicalForm::RunAlt(r) => r.entries.iter().map(|e| e.0).collect(),
            CanonicalForm::AlphaClosure(a) => a.letters.clone(),
        }
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalForm::RunSeq(r) => write!(f, "{r}"),
            other => match other.to_regex() {
                Some(r) => write!(f, "{r}"),
                None => f.write_str("<empty>"),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("expression cannot be read as type {target}")]
pub struct NotCoercible {
    pub target: Kind,
}

/// Structural shape of a normalized expression, as far as the depth-≤2
/// coercions care.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Shape {
    Letter,
    Word,
    LetterSet,
    ConcatAlt,
    ConcatPlus,
    ConcatStar,
    AltConcat,
    AltPlus,
    AltStar,
    PlusLetter,
    /// `c*`, `(c⁺)*` and `(c*)⁺` all denote `c*`.
    StarLetter,
    PlusWord,
    StarWord,
    PlusSet,
    StarSet,
    Other,
}

fn is_leaf(r: &Regex) -> bool {
    matches!(r, Regex::Leaf(_))
}

fn all_leaves(cs: &[Regex]) -> bool {
    cs.iter().all(is_leaf)
}

fn is_unary_leaf(r: &Regex, plus: bool) -> bool {
    match (r, plus) {
        (Regex::Plus(c), true) | (Regex::Star(c), false) => is_leaf(c),
        _ => false,
    }
}

fn star_letter(r: &Regex) -> Option<Letter> {
    match r {
        Regex::Star(c) => match c.as_ref() {
            Regex::Leaf(x) => Some(*x),
            Regex::Plus(inner) => inner.as_leaf(),
            _ => None,
        },
        Regex::Plus(c) => match c.as_ref() {
            Regex::Star(inner) => inner.as_leaf(),
            _ => None,
        },
        _ => None,
    }
}

fn shape(ast: &Regex) -> Shape {
    match ast {
        Regex::Leaf(_) => Shape::Letter,
        Regex::Concat(cs) => {
            if all_leaves(cs) {
                Shape::Word
            } else if cs
                .iter()
                .all(|c| is_leaf(c) || matches!(c, Regex::Alt(g) if all_leaves(g)))
            {
                Shape::ConcatAlt
            } else if cs.iter().all(|c| is_leaf(c) || is_unary_leaf(c, true)) {
                Shape::ConcatPlus
            } else if cs.iter().all(|c| is_leaf(c) || is_unary_leaf(c, false)) {
                Shape::ConcatStar
            } else {
                Shape::Other
            }
        }
        Regex::Alt(cs) => {
            if all_leaves(cs) {
                Shape::LetterSet
            } else if cs
                .iter()
                .all(|c| is_leaf(c) || matches!(c, Regex::Concat(g) if all_leaves(g)))
            {
                Shape::AltConcat
            } else if cs.iter().all(|c| is_leaf(c) || is_unary_leaf(c, true)) {
                Shape::AltPlus
            } else if cs.iter().all(|c| is_leaf(c) || is_unary_leaf(c, false)) {
                Shape::AltStar
            } else {
                Shape::Other
            }
        }
        Regex::Plus(c) | Regex::Star(c) => {
            let plus = matches!(ast, Regex::Plus(_));
            if star_letter(ast).is_some() {
                return Shape::StarLetter;
            }
            match (c.as_ref(), plus) {
                (Regex::Leaf(_), true) => Shape::PlusLetter,
                (Regex::Leaf(_), false) => Shape::StarLetter,
                (Regex::Concat(g), true) if all_leaves(g) => Shape::PlusWord,
                (Regex::Concat(g), false) if all_leaves(g) => Shape::StarWord,
                (Regex::Alt(g), true) if all_leaves(g) => Shape::PlusSet,
                (Regex::Alt(g), false) if all_leaves(g) => Shape::StarSet,
                _ => Shape::Other,
            }
        }
    }
}

/// Depth-2 kinds the expression can be read as without changing its
/// language. Empty for non-homogeneous or deeper expressions.
pub fn coercible_kinds(ast: &Regex) -> Vec<Kind> {
    use Kind::*;
    let kinds: &[Kind] = match shape(ast) {
        Shape::Letter => &[ConcatAlt, ConcatPlus, ConcatStar, AltConcat, AltPlus],
        Shape::Word => &[ConcatAlt, ConcatPlus, ConcatStar, AltConcat],
        Shape::LetterSet => &[ConcatAlt, AltConcat, AltPlus],
        Shape::ConcatAlt => &[ConcatAlt],
        Shape::ConcatPlus => &[ConcatPlus],
        Shape::ConcatStar => &[ConcatStar],
        Shape::AltConcat => &[AltConcat],
        Shape::AltPlus => &[AltPlus],
        Shape::AltStar => &[AltStar],
        Shape::PlusLetter => &[ConcatPlus, PlusConcat, AltPlus, PlusAlt],
        Shape::StarLetter => match ast {
            Regex::Star(c) if matches!(**c, Regex::Plus(_)) => {
                &[StarPlus, ConcatStar, StarConcat, AltStar, StarAlt]
            }
            Regex::Plus(_) => &[PlusStar, ConcatStar, StarConcat, AltStar, StarAlt],
            _ => &[ConcatStar, StarConcat, AltStar, StarAlt],
        },
        Shape::PlusWord => &[PlusConcat],
        Shape::StarWord => &[StarConcat],
        Shape::PlusSet => &[PlusAlt],
        Shape::StarSet => &[StarAlt],
        Shape::Other => &[],
    };
    kinds.to_vec()
}

/// Every depth-2 reading of the expression with its canonical form.
pub fn coercible_types(ast: &Regex) -> Vec<(TypeDescriptor, CanonicalForm)> {
    coercible_kinds(ast)
        .into_iter()
        .map(|k| {
            let form = extract_coercible(ast, k);
            (k.descriptor(), form)
        })
        .collect()
}

/// Canonical form of `ast` read as `target`.
pub fn extract_canonical(ast: &Regex, target: Kind) -> Result<CanonicalForm, NotCoercible> {
    if !coercible_kinds(ast).contains(&target) {
        return Err(NotCoercible { target });
    }
    Ok(extract_coercible(ast, target))
}

/// `extract_canonical` for a kind already known to be coercible.
pub(crate) fn extract_coercible(ast: &Regex, target: Kind) -> CanonicalForm {
    let positions: &[Regex] = match ast {
        Regex::Concat(cs) => cs,
        other => std::slice::from_ref(other),
    };
    let form = match target {
        Kind::ConcatAlt => {
            let mut pairs = Vec::with_capacity(ast.size());
            for (i, p) in positions.iter().enumerate() {
                match p {
                    Regex::Leaf(c) => pairs.push((i as u32, *c)),
                    Regex::Alt(g) => {
                        pairs.extend(g.iter().filter_map(Regex::as_leaf).map(|c| (i as u32, c)))
                    }
                    _ => unreachable!(),
                }
            }
            CanonicalForm::PosSets(PosSets::from_tagged(positions.len(), pairs))
        }
        Kind::ConcatPlus => {
            CanonicalForm::RunSeq(RunSeq::from_runs(positions.iter().map(|p| match p {
                Regex::Leaf(c) => Run::closed(*c, 1),
                Regex::Plus(c) => Run::open(c.as_leaf().expect("plus of leaf"), 1),
                _ => unreachable!(),
            })))
        }
        Kind::ConcatStar => CanonicalForm::StarSeq(StarSeq {
            items: positions
                .iter()
                .map(|p| match p {
                    Regex::Leaf(c) => (*c, false),
                    other => (star_letter(other).expect("starred leaf"), true),
                })
                .collect(),
        }),
        Kind::AltConcat => {
            let mut d = StrDict::new();
            match ast {
                Regex::Alt(cs) => {
                    for c in cs {
                        match c {
                            Regex::Leaf(x) => d.push(&[*x]),
                            other => d.push(&other.leaves()),
                        }
                    }
                }
                other => d.push(&other.leaves()),
            }
            CanonicalForm::StrDict(d)
        }
        Kind::AltPlus | Kind::AltStar => {
            let epsilon = target == Kind::AltStar;
            let entries = match ast {
                Regex::Alt(cs) => cs
                    .iter()
                    .map(|c| match c {
                        Regex::Leaf(x) => (*x, false),
                        Regex::Plus(x) | Regex::Star(x) => (x.as_leaf().expect("unary leaf"), true),
                        _ => unreachable!(),
                    })
                    .collect(),
                Regex::Leaf(x) => vec![(*x, false)],
                other => match star_letter(other) {
                    Some(c) => vec![(c, true)],
                    None => vec![(other.children()[0].as_leaf().expect("plus of leaf"), true)],
                },
            };
            CanonicalForm::RunAlt(RunAlt::new(entries, epsilon))
        }
        Kind::PlusConcat | Kind::StarConcat => {
            let kind = if target == Kind::PlusConcat {
                PowerKind::Plus
            } else {
                PowerKind::Star
            };
            let word = match star_letter(ast) {
                Some(c) => vec![c],
                None => ast.children()[0].leaves(),
            };
            CanonicalForm::PowerStr(PowerStr { word, kind })
        }
        Kind::PlusAlt | Kind::StarAlt | Kind::PlusStar | Kind::StarPlus => {
            let epsilon = target != Kind::PlusAlt;
            let letters = match star_letter(ast) {
                Some(c) => vec![c],
                None => ast.children()[0].leaves(),
            };
            CanonicalForm::AlphaClosure(AlphaClosure::new(letters, epsilon))
        }
    };
    form
}

/// Shortest word of the form (lexicographically smallest among shortest,
/// by letter id).
pub fn shortest_word(form: &CanonicalForm) -> Word {
    match form {
        CanonicalForm::PosSets(p) => p.sets().map(|s| s[0]).collect(),
        CanonicalForm::RunSeq(r) => r.shortest_word(),
        CanonicalForm::StrDict(d) => {
            let mut best: Option<&[Letter]> = None;
            for w in d.words() {
                best = match best {
                    Some(b) if (b.len(), b) <= (w.len(), w) => Some(b),
                    _ => Some(w),
                };
            }
            best.map(<[Letter]>::to_vec).unwrap_or_default()
        }
        CanonicalForm::PowerStr(p) => match p.kind {
            PowerKind::Plus => p.word.clone(),
            PowerKind::Star => Vec::new(),
        },
        CanonicalForm::StarSeq(s) => s.items.iter().filter(|i| !i.1).map(|i| i.0).collect(),
        CanonicalForm::RunAlt(r) => {
            if r.epsilon {
                Vec::new()
            } else {
                r.entries.first().map(|e| vec![e.0]).unwrap_or_default()
            }
        }
        CanonicalForm::AlphaClosure(a) => {
            if a.epsilon {
                Vec::new()
            } else {
                a.letters.first().map(|&c| vec![c]).unwrap_or_default()
            }
        }
    }
}
