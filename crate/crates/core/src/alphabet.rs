//! Letters of an expression classified by their enclosing unary operators.

use crate::ast::Regex;
use crate::canonical::sorted_set;
use crate::letter::Letter;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlphabetInfo {
    pub alph: Vec<Letter>,
    /// Letters with a `+` ancestor.
    pub plus_letters: Vec<Letter>,
    /// Letters with a `*` ancestor.
    pub star_letters: Vec<Letter>,
    /// Letters occurring somewhere with no unary ancestor.
    pub bare_letters: Vec<Letter>,
    pub nullable: bool,
}

pub fn alphabet_info(ast: &Regex) -> AlphabetInfo {
    let mut alph = Vec::new();
    let mut plus = Vec::new();
    let mut star = Vec::new();
    let mut bare = Vec::new();
    let mut stack: Vec<(&Regex, bool, bool)> = vec![(ast, false, false)];
    while let Some((node, under_plus, under_star)) = stack.pop() {
        match node {
            Regex::Leaf(c) => {
                alph.push(*c);
                if under_plus {
                    plus.push(*c);
                }
                if under_star {
                    star.push(*c);
                }
                if !under_plus && !under_star {
                    bare.push(*c);
                }
            }
            Regex::Plus(c) => stack.push((c, true, under_star)),
            Regex::Star(c) => stack.push((c, under_plus, true)),
            Regex::Concat(cs) | Regex::Alt(cs) => {
                stack.extend(cs.iter().map(|c| (c, under_plus, under_star)))
            }
        }
    }
    AlphabetInfo {
        alph: sorted_set(alph),
        plus_letters: sorted_set(plus),
        star_letters: sorted_set(star),
        bare_letters: sorted_set(bare),
        nullable: nullable(ast),
    }
}

/// Whether ε belongs to the language of `ast`.
pub fn nullable(ast: &Regex) -> bool {
    match ast {
        Regex::Leaf(_) => false,
        Regex::Star(_) => true,
        Regex::Plus(c) => nullable(c),
        Regex::Concat(cs) => cs.iter().all(nullable),
        Regex::Alt(cs) => cs.iter().any(nullable),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::l;
    use crate::parse::parse;

    fn set(s: &str) -> Vec<Letter> {
        s.chars().map(l).collect()
    }

    #[test]
    fn star_sequence_letters() {
        let info = alphabet_info(&parse("ab*a*b").unwrap());
        assert_eq!(info.bare_letters, set("ab"));
        assert_eq!(info.star_letters, set("ab"));
        assert!(info.plus_letters.is_empty());
        assert!(!info.nullable);
    }

    #[test]
    fn run_alternation_letters() {
        let info = alphabet_info(&parse("[a+|b+|c]").unwrap());
        assert_eq!(info.plus_letters, set("ab"));
        assert_eq!(info.bare_letters, set("c"));
        assert_eq!(info.alph, set("abc"));
    }

    #[test]
    fn nullability() {
        assert!(alphabet_info(&parse("(baab)*").unwrap()).nullable);
        assert!(nullable(&parse("(a*)+").unwrap()));
        assert!(nullable(&parse("[a|b*]c*").unwrap()));
        assert!(!nullable(&parse("[a|b*]c").unwrap()));
    }
}
