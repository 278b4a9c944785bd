//! Letters of the integer alphabet, words over it, and the stamped
//! direct-address table used for O(1) letter-set membership.

use std::fmt;

/// Largest letter id accepted by the parser. Keeps direct-address tables
/// polynomial in the input size.
pub const MAX_LETTER_ID: u32 = (1 << 24) - 1;

/// A letter of the integer alphabet.
///
/// Printable letters (`A-Z`, `a-z`, `0-9`, `$`) use their ASCII code as id,
/// so `display -> id -> display` is the identity for them. Every other id
/// is written `#<id>`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(pub u32);

impl Letter {
    pub fn from_char(c: char) -> Option<Letter> {
        if is_printable_letter(c) {
            Some(Letter(c as u32))
        } else {
            None
        }
    }

    pub fn id(self) -> u32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The printable character for this letter, if it has one.
    pub fn display_char(self) -> Option<char> {
        char::from_u32(self.0).filter(|&c| is_printable_letter(c))
    }
}

pub(crate) fn is_printable_letter(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '$'
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.display_char() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "#{}", self.0),
        }
    }
}

/// Shorthand for building letters in tests and gadgets.
pub fn l(c: char) -> Letter {
    Letter::from_char(c).expect("printable letter")
}

/// A word over the alphabet; the empty vector is ε.
pub type Word = Vec<Letter>;

/// Token used for the empty word in text output.
pub const EPSILON_TOKEN: &str = "<epsilon>";

/// Writes a sequence of letters so that it parses back to the same letters.
/// A `#<id>` letter followed by a digit letter gets a separating space.
pub(crate) fn write_letters(f: &mut impl fmt::Write, letters: &[Letter]) -> fmt::Result {
    let mut prev_raw = false;
    for &c in letters {
        match c.display_char() {
            Some(ch) => {
                if prev_raw && ch.is_ascii_digit() {
                    f.write_char(' ')?;
                }
                f.write_char(ch)?;
                prev_raw = false;
            }
            None => {
                if prev_raw {
                    f.write_char(' ')?;
                }
                write!(f, "#{}", c.0)?;
                prev_raw = true;
            }
        }
    }
    Ok(())
}

/// Renders a word, using [`EPSILON_TOKEN`] for the empty word.
pub fn render_word(word: &[Letter]) -> String {
    if word.is_empty() {
        return EPSILON_TOKEN.to_string();
    }
    let mut s = String::with_capacity(word.len());
    write_letters(&mut s, word).expect("writing to a String cannot fail");
    s
}

/// Parses a word written with the letter syntax of the regexp grammar.
/// Whitespace is ignored; [`EPSILON_TOKEN`] (or an empty string) is ε.
pub fn parse_word(text: &str) -> Result<Word, crate::parse::ParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == EPSILON_TOKEN {
        return Ok(Vec::new());
    }
    crate::parse::parse_letters(trimmed)
}

/// Direct-address letter table with lazy stamping: `clear` is O(1), so one
/// table can be reused for many sets without reinitialization.
#[derive(Clone, Debug)]
pub struct LetterTable {
    stamps: Vec<u32>,
    current: u32,
}

impl LetterTable {
    /// Table able to hold every letter with id `< capacity`.
    pub fn new(capacity: usize) -> Self {
        LetterTable {
            stamps: vec![0; capacity],
            current: 1,
        }
    }

    /// Table sized for every letter appearing in `letters`.
    pub fn for_letters<'a>(letters: impl IntoIterator<Item = &'a Letter>) -> Self {
        let cap = letters
            .into_iter()
            .map(|c| c.index() + 1)
            .max()
            .unwrap_or(0);
        Self::new(cap)
    }

    pub fn ensure_capacity(&mut self, capacity: usize) {
        if self.stamps.len() < capacity {
            self.stamps.resize(capacity, 0);
        }
    }

    pub fn clear(&mut self) {
        self.current = self.current.wrapping_add(1);
        if self.current == 0 {
            self.stamps.iter_mut().for_each(|s| *s = 0);
            self.current = 1;
        }
    }

    /// Marks `c`; returns `true` if it was not already marked.
    pub fn insert(&mut self, c: Letter) -> bool {
        let i = c.index();
        if i >= self.stamps.len() {
            self.stamps.resize(i + 1, 0);
        }
        let fresh = self.stamps[i] != self.current;
        self.stamps[i] = self.current;
        fresh
    }

    pub fn contains(&self, c: Letter) -> bool {
        self.stamps
            .get(c.index())
            .is_some_and(|&s| s == self.current)
    }
}
