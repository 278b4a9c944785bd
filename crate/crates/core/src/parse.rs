//! Recursive-descent parser for the regexp text grammar:
//!
//! ```text
//! regex  := factor+
//! factor := atom ('+' | '*')*
//! atom   := letter | '[' regex ('|' regex)* ']' | '(' regex ('|' regex)* ')'
//! letter := [A-Za-z0-9] | '$' | '#' [0-9]+
//! ```
//!
//! Whitespace between tokens is ignored. Positions in errors are 0-based
//! character offsets into the input.

use thiserror::Error;

use crate::ast::Regex;
use crate::letter::{is_printable_letter, Letter, Word, MAX_LETTER_ID};

/// Bracket/parenthesis nesting accepted by the parser.
pub const MAX_NESTING: usize = 64;
/// Longest run of postfix operators on a single atom.
pub const MAX_POSTFIX_CHAIN: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected character {found:?} at position {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("unexpected end of input at position {pos}, expected {expected}")]
    UnexpectedEnd { pos: usize, expected: &'static str },
    #[error("unbalanced {open:?} opened at position {pos}")]
    Unbalanced { pos: usize, open: char },
    #[error("letter id out of range at position {pos}")]
    LetterOutOfRange { pos: usize },
    #[error("nesting too deep at position {pos}")]
    TooDeep { pos: usize },
}

impl ParseError {
    /// Character offset the error refers to.
    pub fn position(&self) -> usize {
        match *self {
            ParseError::Empty => 0,
            ParseError::Unexpected { pos, .. }
            | ParseError::UnexpectedEnd { pos, .. }
            | ParseError::Unbalanced { pos, .. }
            | ParseError::LetterOutOfRange { pos }
            | ParseError::TooDeep { pos } => pos,
        }
    }
}

/// Parses one regular expression into a normalized tree.
pub fn parse(text: &str) -> Result<Regex, ParseError> {
    let mut p = Parser::new(text);
    p.skip_ws();
    if p.at_end() {
        return Err(ParseError::Empty);
    }
    let r = p.regex(0)?;
    p.skip_ws();
    match p.peek() {
        None => Ok(r),
        Some(c) => Err(ParseError::Unexpected {
            pos: p.pos,
            found: c,
        }),
    }
}

/// Parses a bare sequence of letters.
pub(crate) fn parse_letters(text: &str) -> Result<Word, ParseError> {
    let mut p = Parser::new(text);
    let mut out = Vec::new();
    loop {
        p.skip_ws();
        match p.peek() {
            None => return Ok(out),
            Some(_) => out.push(p.letter()?),
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn regex(&mut self, depth: usize) -> Result<Regex, ParseError> {
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') | Some(']') | Some('|') => break,
                Some(_) => factors.push(self.factor(depth)?),
            }
        }
        if factors.is_empty() {
            return match self.peek() {
                None => Err(ParseError::UnexpectedEnd {
                    pos: self.pos,
                    expected: "an expression",
                }),
                Some(c) => Err(ParseError::Unexpected {
                    pos: self.pos,
                    found: c,
                }),
            };
        }
        Ok(Regex::concat(factors))
    }

    fn factor(&mut self, depth: usize) -> Result<Regex, ParseError> {
        let mut r = self.atom(depth)?;
        let mut chain = 0;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => r = Regex::plus(r),
                Some('*') => r = Regex::star(r),
                _ => return Ok(r),
            }
            chain += 1;
            if chain > MAX_POSTFIX_CHAIN {
                return Err(ParseError::TooDeep { pos: self.pos });
            }
            self.pos += 1;
        }
    }

    fn atom(&mut self, depth: usize) -> Result<Regex, ParseError> {
        match self.peek() {
            Some(open @ ('[' | '(')) => {
                if depth >= MAX_NESTING {
                    return Err(ParseError::TooDeep { pos: self.pos });
                }
                let close = if open == '[' { ']' } else { ')' };
                let open_pos = self.pos;
                self.pos += 1;
                let mut alts = vec![self.regex(depth + 1)?];
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some('|') => {
                            self.pos += 1;
                            alts.push(self.regex(depth + 1)?);
                        }
                        Some(c) if c == close => {
                            self.pos += 1;
                            return Ok(Regex::alt(alts));
                        }
                        None => {
                            return Err(ParseError::Unbalanced {
                                pos: open_pos,
                                open,
                            })
                        }
                        Some(c) => {
                            return Err(ParseError::Unexpected {
                                pos: self.pos,
                                found: c,
                            })
                        }
                    }
                }
            }
            Some(_) => Ok(Regex::Leaf(self.letter()?)),
            None => Err(ParseError::UnexpectedEnd {
                pos: self.pos,
                expected: "a letter",
            }),
        }
    }

    fn letter(&mut self) -> Result<Letter, ParseError> {
        let start = self.pos;
        match self.peek() {
            Some('#') => {
                self.pos += 1;
                let digits_start = self.pos;
                let mut id: u64 = 0;
                while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
                    id = id * 10 + u64::from(d);
                    if id > u64::from(MAX_LETTER_ID) {
                        return Err(ParseError::LetterOutOfRange { pos: start });
                    }
                    self.pos += 1;
                }
                if self.pos == digits_start {
                    return match self.peek() {
                        None => Err(ParseError::UnexpectedEnd {
                            pos: self.pos,
                            expected: "digits after '#'",
                        }),
                        Some(c) => Err(ParseError::Unexpected {
                            pos: self.pos,
                            found: c,
                        }),
                    };
                }
                Ok(Letter(id as u32))
            }
            Some(c) if is_printable_letter(c) => {
                self.pos += 1;
                Ok(Letter(c as u32))
            }
            Some(c) => Err(ParseError::Unexpected {
                pos: start,
                found: c,
            }),
            None => Err(ParseError::UnexpectedEnd {
                pos: start,
                expected: "a letter",
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::l;

    fn leaf(c: char) -> Regex {
        Regex::Leaf(l(c))
    }
    fn plus(r: Regex) -> Regex {
        Regex::Plus(Box::new(r))
    }

    #[test]
    fn concat_of_plus_runs() {
        let r = parse("b+bc+c+a").unwrap();
        assert_eq!(
            r,
            Regex::Concat(vec![
                plus(leaf('b')),
                leaf('b'),
                plus(leaf('c')),
                plus(leaf('c')),
                leaf('a')
            ])
        );
    }

    #[test]
    fn concat_of_sets() {
        let r = parse("[a|b]bc[a|b|c]").unwrap();
        assert_eq!(
            r,
            Regex::Concat(vec![
                Regex::Alt(vec![leaf('a'), leaf('b')]),
                leaf('b'),
                leaf('c'),
                Regex::Alt(vec![leaf('a'), leaf('b'), leaf('c')]),
            ])
        );
    }

    #[test]
    fn single_letter() {
        assert_eq!(parse("a").unwrap(), leaf('a'));
        assert_eq!(parse("  #300 ").unwrap(), Regex::Leaf(Letter(300)));
    }

    #[test]
    fn parens_group_and_alternate() {
        assert_eq!(
            parse("(ab)").unwrap(),
            Regex::Concat(vec![leaf('a'), leaf('b')])
        );
        assert_eq!(
            parse("(a|b)").unwrap(),
            Regex::Alt(vec![leaf('a'), leaf('b')])
        );
        assert_eq!(
            parse("[a|[b|c]]").unwrap(),
            Regex::Alt(vec![leaf('a'), leaf('b'), leaf('c')])
        );
        assert_eq!(parse("(a+)+").unwrap(), plus(leaf('a')));
        // kept intact: collapse to a* only happens during canonicalization
        assert_eq!(
            parse("(a+)*").unwrap(),
            Regex::Star(Box::new(plus(leaf('a'))))
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse(""), Err(ParseError::Empty));
        assert_eq!(parse("   "), Err(ParseError::Empty));
        assert_eq!(
            parse("[a|b"),
            Err(ParseError::Unbalanced { pos: 0, open: '[' })
        );
        assert_eq!(
            parse("ab)"),
            Err(ParseError::Unexpected { pos: 2, found: ')' })
        );
        assert_eq!(
            parse("a|b"),
            Err(ParseError::Unexpected { pos: 1, found: '|' })
        );
        assert_eq!(
            parse("[a|]"),
            Err(ParseError::Unexpected { pos: 3, found: ']' })
        );
        assert_eq!(
            parse("+a"),
            Err(ParseError::Unexpected { pos: 0, found: '+' })
        );
        assert_eq!(
            parse("a?"),
            Err(ParseError::Unexpected { pos: 1, found: '?' })
        );
        assert_eq!(
            parse("#"),
            Err(ParseError::UnexpectedEnd {
                pos: 1,
                expected: "digits after '#'"
            })
        );
        assert_eq!(
            parse("#99999999999"),
            Err(ParseError::LetterOutOfRange { pos: 0 })
        );
        assert!(matches!(
            parse(&"(".repeat(100)),
            Err(ParseError::TooDeep { .. })
        ));
        assert!(matches!(
            parse(&format!("a{}", "+*".repeat(20))),
            Err(ParseError::TooDeep { .. })
        ));
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(parse(" b + b\n c ").unwrap(), parse("b+bc").unwrap());
    }

    #[test]
    fn render_then_parse_is_identity_on_raw_letters() {
        let r = Regex::Concat(vec![
            Regex::Leaf(Letter(300)),
            leaf('5'),
            Regex::Leaf(Letter(7)),
            plus(Regex::Leaf(Letter(8))),
        ]);
        assert_eq!(parse(&r.render()).unwrap(), r);
    }
}
