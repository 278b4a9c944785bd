use std::collections::HashSet;
use std::collections::VecDeque;

use thiserror::Error;

use super::nfa::{glushkov, Nfa};
use crate::ast::Regex;
use crate::letter::Letter;
use crate::linear::{Algo, Answer};

/// Default cap on discovered state pairs.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000_000;

/// Largest `|Q_A|·|Q_B|` tracked with a dense bitset.
const DENSE_LIMIT: u64 = 1 << 31;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("product exploration exceeded the budget of {budget} state pairs")]
    BudgetExceeded { budget: usize },
}

enum Visited {
    Dense { bits: Vec<u64>, width: u64 },
    Sparse(HashSet<u64>),
}

impl Visited {
    fn new(na: usize, nb: usize) -> Visited {
        let total = na as u64 * nb as u64;
        if total <= DENSE_LIMIT {
            Visited::Dense {
                bits: vec![0; total.div_ceil(64) as usize],
                width: nb as u64,
            }
        } else {
            Visited::Sparse(HashSet::new())
        }
    }

    /// Marks the pair; true when it was unseen.
    fn insert(&mut self, p: u32, q: u32) -> bool {
        match self {
            Visited::Dense { bits, width } => {
                let i = p as u64 * *width + q as u64;
                let (w, b) = ((i / 64) as usize, i % 64);
                let fresh = bits[w] & (1 << b) == 0;
                bits[w] |= 1 << b;
                fresh
            }
            Visited::Sparse(set) => set.insert(((p as u64) << 32) | q as u64),
        }
    }
}

struct Node {
    p: u32,
    q: u32,
    parent: u32,
    letter: Letter,
}

/// Breadth-first search of the product of the two position automata.
/// Returns the shortest common word (lexicographically smallest by letter
/// id among the shortest), or `Empty`.
pub fn product_nonempty(a: &Regex, b: &Regex, budget: usize) -> Result<Answer, ProductError> {
    product_nonempty_nfa(&glushkov(a), &glushkov(b), budget)
}

pub fn product_nonempty_nfa(a: &Nfa, b: &Nfa, budget: usize) -> Result<Answer, ProductError> {
    let mut visited = Visited::new(a.state_count(), b.state_count());
    let mut nodes = vec![Node {
        p: a.start(),
        q: b.start(),
        parent: u32::MAX,
        letter: Letter(0),
    }];
    visited.insert(a.start(), b.start());
    let mut queue = VecDeque::from([0u32]);
    let found = |nodes: &Vec<Node>, idx: u32| -> Answer {
        let mut word = Vec::new();
        let mut i = idx;
        while nodes[i as usize].parent != u32::MAX {
            word.push(nodes[i as usize].letter);
            i = nodes[i as usize].parent;
        }
        word.reverse();
        Answer::nonempty(word, Algo::Baseline)
    };
    if a.is_accepting(a.start()) && b.is_accepting(b.start()) {
        return Ok(found(&nodes, 0));
    }
    while let Some(idx) = queue.pop_front() {
        let (p, q) = (nodes[idx as usize].p, nodes[idx as usize].q);
        let (sa, sb) = (a.successors(p), b.successors(q));
        let (mut i, mut j) = (0, 0);
        while i < sa.len() && j < sb.len() {
            let (ca, cb) = (a.label(sa[i]), b.label(sb[j]));
            if ca < cb {
                i += 1;
                continue;
            }
            if cb < ca {
                j += 1;
                continue;
            }
            let i_end = i + sa[i..].iter().take_while(|&&t| a.label(t) == ca).count();
            let j_end = j + sb[j..].iter().take_while(|&&t| b.label(t) == ca).count();
            for &t1 in &sa[i..i_end] {
                for &t2 in &sb[j..j_end] {
                    if !visited.insert(t1, t2) {
                        continue;
                    }
                    if nodes.len() >= budget {
                        return Err(ProductError::BudgetExceeded { budget });
                    }
                    nodes.push(Node {
                        p: t1,
                        q: t2,
                        parent: idx,
                        letter: ca,
                    });
                    let new = (nodes.len() - 1) as u32;
                    if a.is_accepting(t1) && b.is_accepting(t2) {
                        return Ok(found(&nodes, new));
                    }
                    queue.push_back(new);
                }
            }
            i = i_end;
            j = j_end;
        }
    }
    Ok(Answer::empty(Algo::Baseline))
}
