//! Regular expression trees over the operators concatenation, alternation,
//! Kleene plus and Kleene star.

use std::fmt::{self, Write};

use crate::letter::{write_letters, Letter};

/// Operator labelling an inner node.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Op {
    Concat,
    Alt,
    Plus,
    Star,
}

impl Op {
    pub fn symbol(self) -> char {
        match self {
            Op::Concat => '∘',
            Op::Alt => '|',
            Op::Plus => '+',
            Op::Star => '*',
        }
    }

    pub fn from_symbol(c: char) -> Option<Op> {
        match c {
            '∘' | '.' => Some(Op::Concat),
            '|' => Some(Op::Alt),
            '+' => Some(Op::Plus),
            '*' => Some(Op::Star),
            _ => None,
        }
    }
}

/// A regular expression tree with letter leaves.
///
/// Values built through [`Regex::concat`], [`Regex::alt`], [`Regex::plus`]
/// and [`Regex::star`] are normalized: n-ary nodes have at least two
/// children, a concatenation never has a concatenation child, an
/// alternation never has an alternation child, and `(x+)+`, `(x*)*` are
/// merged. `(x+)*` and `(x*)+` are kept as written.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Regex {
    Leaf(Letter),
    Concat(Vec<Regex>),
    Alt(Vec<Regex>),
    Plus(Box<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn leaf(c: Letter) -> Regex {
        Regex::Leaf(c)
    }

    /// Normalizing concatenation. Panics on an empty list.
    pub fn concat(parts: Vec<Regex>) -> Regex {
        Self::nary(parts, Op::Concat)
    }

    /// Normalizing alternation. Panics on an empty list.
    pub fn alt(parts: Vec<Regex>) -> Regex {
        Self::nary(parts, Op::Alt)
    }

    fn nary(parts: Vec<Regex>, op: Op) -> Regex {
        assert!(!parts.is_empty(), "n-ary node needs at least one child");
        let mut flat = Vec::with_capacity(parts.len());
        for p in parts {
            match (op, p) {
                (Op::Concat, Regex::Concat(cs)) | (Op::Alt, Regex::Alt(cs)) => flat.extend(cs),
                (_, p) => flat.push(p),
            }
        }
        if flat.len() == 1 {
            return flat.pop().unwrap();
        }
        match op {
            Op::Concat => Regex::Concat(flat),
            _ => Regex::Alt(flat),
        }
    }

    pub fn plus(inner: Regex) -> Regex {
        match inner {
            p @ Regex::Plus(_) => p,
            other => Regex::Plus(Box::new(other)),
        }
    }

    pub fn star(inner: Regex) -> Regex {
        match inner {
            s @ Regex::Star(_) => s,
            other => Regex::Star(Box::new(other)),
        }
    }

    /// A concatenation of single letters (a single leaf for length 1).
    pub fn word(letters: &[Letter]) -> Regex {
        Regex::concat(letters.iter().map(|&c| Regex::Leaf(c)).collect())
    }

    /// A set of letters as an alternation.
    pub fn letter_set(letters: &[Letter]) -> Regex {
        Regex::alt(letters.iter().map(|&c| Regex::Leaf(c)).collect())
    }

    pub fn op(&self) -> Option<Op> {
        match self {
            Regex::Leaf(_) => None,
            Regex::Concat(_) => Some(Op::Concat),
            Regex::Alt(_) => Some(Op::Alt),
            Regex::Plus(_) => Some(Op::Plus),
            Regex::Star(_) => Some(Op::Star),
        }
    }

    pub fn children(&self) -> &[Regex] {
        match self {
            Regex::Leaf(_) => &[],
            Regex::Concat(cs) | Regex::Alt(cs) => cs,
            Regex::Plus(c) | Regex::Star(c) => std::slice::from_ref(c.as_ref()),
        }
    }

    pub fn as_leaf(&self) -> Option<Letter> {
        match self {
            Regex::Leaf(c) => Some(*c),
            _ => None,
        }
    }

    /// Number of leaves.
    pub fn size(&self) -> usize {
        let mut n = 0;
        self.for_each_leaf(|_| n += 1);
        n
    }

    /// Visits leaves left to right.
    pub fn for_each_leaf(&self, mut f: impl FnMut(Letter)) {
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            match node {
                Regex::Leaf(c) => f(*c),
                _ => stack.extend(node.children().iter().rev()),
            }
        }
    }

    pub fn leaves(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        self.for_each_leaf(|c| out.push(c));
        out
    }

    /// Largest letter id occurring in the expression.
    pub fn max_letter(&self) -> Letter {
        let mut m = Letter(0);
        self.for_each_leaf(|c| m = m.max(c));
        m
    }

    /// True if the tree satisfies the normalization invariants.
    pub fn is_normalized(&self) -> bool {
        match self {
            Regex::Leaf(_) => true,
            Regex::Concat(cs) => {
                cs.len() >= 2
                    && cs
                        .iter()
                        .all(|c| !matches!(c, Regex::Concat(_)) && c.is_normalized())
            }
            Regex::Alt(cs) => {
                cs.len() >= 2
                    && cs
                        .iter()
                        .all(|c| !matches!(c, Regex::Alt(_)) && c.is_normalized())
            }
            Regex::Plus(c) => !matches!(**c, Regex::Plus(_)) && c.is_normalized(),
            Regex::Star(c) => !matches!(**c, Regex::Star(_)) && c.is_normalized(),
        }
    }

    /// Text in the concrete grammar; parses back to an identical tree.
    pub fn render(&self) -> String {
        self.to_string()
    }

    fn write_node(&self, f: &mut fmt::Formatter<'_>, prev_raw: &mut bool) -> fmt::Result {
        match self {
            Regex::Leaf(c) => {
                // a raw `#id` must not run into a following digit or raw letter
                if *prev_raw && (c.display_char().is_none_or(|ch| ch.is_ascii_digit())) {
                    f.write_char(' ')?;
                }
                write_letters(f, std::slice::from_ref(c))?;
                *prev_raw = c.display_char().is_none();
                Ok(())
            }
            Regex::Concat(cs) => {
                for c in cs {
                    c.write_node(f, prev_raw)?;
                }
                Ok(())
            }
            Regex::Alt(cs) => {
                f.write_char('[')?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_char('|')?;
                    }
                    *prev_raw = false;
                    c.write_node(f, prev_raw)?;
                }
                *prev_raw = false;
                f.write_char(']')
            }
            Regex::Plus(c) | Regex::Star(c) => {
                let postfix = if matches!(self, Regex::Plus(_)) {
                    '+'
                } else {
                    '*'
                };
                if matches!(**c, Regex::Concat(_)) {
                    f.write_char('(')?;
                    *prev_raw = false;
                    c.write_node(f, prev_raw)?;
                    f.write_char(')')?;
                } else {
                    c.write_node(f, prev_raw)?;
                }
                *prev_raw = false;
                f.write_char(postfix)
            }
        }
    }
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut prev_raw = false;
        self.write_node(f, &mut prev_raw)
    }
}
