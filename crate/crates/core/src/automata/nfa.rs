use crate::ast::Regex;
use crate::letter::Letter;

/// ε-free position automaton. State 0 is the start state; state `i ≥ 1`
/// is the `i`-th leaf in left-to-right order. Every transition into state
/// `i` carries the letter of leaf `i`.
#[derive(Clone, Debug)]
pub struct Nfa {
    labels: Vec<Letter>,
    accepting: Vec<bool>,
    /// Adjacency in CSR layout, each row sorted by (letter, target).
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Nfa {
    pub fn state_count(&self) -> usize {
        self.labels.len()
    }

    pub fn start(&self) -> u32 {
        0
    }

    pub fn is_accepting(&self, s: u32) -> bool {
        self.accepting[s as usize]
    }

    /// Letter read when entering `s` (unspecified for the start state).
    pub fn label(&self, s: u32) -> Letter {
        self.labels[s as usize]
    }

    /// Successors of `s`, sorted by letter then state id.
    pub fn successors(&self, s: u32) -> &[u32] {
        &self.targets[self.offsets[s as usize]..self.offsets[s as usize + 1]]
    }

    pub fn transition_count(&self) -> usize {
        self.targets.len()
    }

    /// Iterates `(from, letter, to)` triples.
    pub fn transitions(&self) -> impl Iterator<Item = (u32, Letter, u32)> + '_ {
        (0..self.state_count() as u32).flat_map(move |s| {
            self.successors(s)
                .iter()
                .map(move |&t| (s, self.label(t), t))
        })
    }

    pub fn is_deterministic(&self) -> bool {
        (0..self.state_count() as u32).all(|s| {
            self.successors(s)
                .windows(2)
                .all(|w| self.label(w[0]) != self.label(w[1]))
        })
    }

    pub fn accepts(&self, word: &[Letter]) -> bool {
        let mut current = vec![0u32];
        let mut seen = vec![usize::MAX; self.state_count()];
        for (step, &c) in word.iter().enumerate() {
            let mut next = Vec::new();
            for &s in &current {
                let succ = self.successors(s);
                let from = succ.partition_point(|&t| self.label(t) < c);
                for &t in &succ[from..] {
                    if self.label(t) != c {
                        break;
                    }
                    if seen[t as usize] != step {
                        seen[t as usize] = step;
                        next.push(t);
                    }
                }
            }
            if next.is_empty() {
                return false;
            }
            current = next;
        }
        current.iter().any(|&s| self.is_accepting(s))
    }
}

struct Info {
    nullable: bool,
    first: Vec<u32>,
    last: Vec<u32>,
}

struct Builder {
    labels: Vec<Letter>,
    follow: Vec<Vec<u32>>,
}

impl Builder {
    fn link(&mut self, from: &[u32], to: &[u32]) {
        for &p in from {
            self.follow[p as usize].extend_from_slice(to);
        }
    }

    fn visit(&mut self, node: &Regex) -> Info {
        match node {
            Regex::Leaf(c) => {
                self.labels.push(*c);
                self.follow.push(Vec::new());
                let id = (self.labels.len() - 1) as u32;
                Info {
                    nullable: false,
                    first: vec![id],
                    last: vec![id],
                }
            }
            Regex::Concat(cs) => {
                let mut acc = self.visit(&cs[0]);
                for c in &cs[1..] {
                    let next = self.visit(c);
                    self.link(&acc.last, &next.first);
                    if acc.nullable {
                        acc.first.extend_from_slice(&next.first);
                    }
                    if next.nullable {
                        acc.last.extend_from_slice(&next.last);
                    } else {
                        acc.last = next.last;
                    }
                    acc.nullable &= next.nullable;
                }
                acc
            }
            Regex::Alt(cs) => {
                let mut acc = Info {
                    nullable: false,
                    first: Vec::new(),
                    last: Vec::new(),
                };
                for c in cs {
                    let i = self.visit(c);
                    acc.nullable |= i.nullable;
                    acc.first.extend(i.first);
                    acc.last.extend(i.last);
                }
                acc
            }
            Regex::Plus(c) | Regex::Star(c) => {
                let mut i = self.visit(c);
                let first = i.first.clone();
                self.link(&i.last, &first);
                if matches!(node, Regex::Star(_)) {
                    i.nullable = true;
                }
                i
            }
        }
    }
}

/// Builds the position automaton of `ast`: one state per leaf plus the
/// start state.
pub fn glushkov(ast: &Regex) -> Nfa {
    let size = ast.size();
    let mut b = Builder {
        labels: Vec::with_capacity(size + 1),
        follow: Vec::with_capacity(size + 1),
    };
    // start state placeholder; its label is never read
    b.labels.push(Letter(0));
    b.follow.push(Vec::new());
    let info = b.visit(ast);
    b.follow[0] = info.first;
    let n = b.labels.len();
    let mut accepting = vec![false; n];
    for &p in &info.last {
        accepting[p as usize] = true;
    }
    accepting[0] = info.nullable;
    let mut offsets = Vec::with_capacity(n + 1);
    let mut targets = Vec::new();
    offsets.push(0);
    for mut row in b.follow {
        row.sort_unstable_by_key(|&t| (b.labels[t as usize], t));
        row.dedup();
        targets.extend_from_slice(&row);
        offsets.push(targets.len());
    }
    Nfa {
        labels: b.labels,
        accepting,
        offsets,
        targets,
    }
}

/// Whether `word` belongs to the language of `ast`.
pub fn member(word: &[Letter], ast: &Regex) -> bool {
    glushkov(ast).accepts(word)
}

/// Membership through the canonical form when the expression has one,
/// falling back to the automaton. Avoids the quadratic follow sets of
/// large `[..]⁺`-style expressions.
pub fn member_fast(word: &[Letter], ast: &Regex) -> bool {
    match crate::canonical::coercible_kinds(ast).first() {
        Some(&k) => crate::canonical::extract_coercible(ast, k).accepts(word),
        None => member(word, ast),
    }
}
