use std::collections::BTreeSet;

use thiserror::Error;

use super::nfa::glushkov;
use crate::ast::Regex;
use crate::letter::Word;

/// Default cap on the number of prefixes explored by [`enumerate_language`].
pub const DEFAULT_ENUMERATION_BUDGET: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("language enumeration exceeded the budget of {budget} prefixes")]
pub struct EnumerateError {
    pub budget: usize,
}

/// All words of `L(ast)` of length at most `max_len`.
pub fn enumerate_language(
    ast: &Regex,
    max_len: usize,
    budget: usize,
) -> Result<BTreeSet<Word>, EnumerateError> {
    let nfa = glushkov(ast);
    let mut out = BTreeSet::new();
    // every position state can reach acceptance, so nonempty state sets are
    // exactly the prefixes of words in the language
    let mut frontier: Vec<(Word, Vec<u32>)> = vec![(Vec::new(), vec![nfa.start()])];
    let mut explored = 0usize;
    for len in 0..=max_len {
        let mut next = Vec::new();
        for (word, states) in &frontier {
            if states.iter().any(|&s| nfa.is_accepting(s)) {
                out.insert(word.clone());
            }
            if len == max_len {
                continue;
            }
            let mut moves: Vec<u32> = states
                .iter()
                .flat_map(|&s| nfa.successors(s).iter().copied())
                .collect();
            moves.sort_unstable_by_key(|&t| (nfa.label(t), t));
            moves.dedup();
            let mut i = 0;
            while i < moves.len() {
                let c = nfa.label(moves[i]);
                let j = i + moves[i..]
                    .iter()
                    .take_while(|&&t| nfa.label(t) == c)
                    .count();
                explored += 1;
                if explored > budget {
                    return Err(EnumerateError { budget });
                }
                let mut w = word.clone();
                w.push(c);
                next.push((w, moves[i..j].to_vec()));
                i = j;
            }
        }
        frontier = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::render_word;
    use crate::parse::parse;

    fn words(s: &str, n: usize) -> Vec<String> {
        enumerate_language(&parse(s).unwrap(), n, DEFAULT_ENUMERATION_BUDGET)
            .unwrap()
            .iter()
            .map(|w| render_word(w))
            .collect()
    }

    #[test]
    fn small_languages() {
        assert_eq!(words("a+b", 3), vec!["aab", "ab"]);
        assert_eq!(words("[a|b][b|c]", 2), vec!["ab", "ac", "bb", "bc"]);
        assert_eq!(words("b+bc+c+a", 5), vec!["bbcca"]);
        assert_eq!(words("a*", 2), vec!["<epsilon>", "a", "aa"]);
    }

    #[test]
    fn budget() {
        let r = parse("[a|b|c]*").unwrap();
        assert!(enumerate_language(&r, 12, 1000).is_err());
    }
}
