//! Intersection testing for regular expressions.
//!
//! Two expressions are parsed into [`Regex`] trees, classified by their
//! homogeneous type, and routed either to a dedicated linear-time
//! algorithm (see [`linear`]) or to the product-automaton baseline in
//! [`automata`]. The [`ov`] module builds the Orthogonal Vectors gadget
//! reduction that makes the `∘+` / `∘|` pair hard.

pub mod alphabet;
pub mod ast;
pub mod automata;
pub mod bench;
pub mod canonical;
pub mod cli;
pub mod letter;
pub mod linear;
pub mod ov;
pub mod parse;
mod radix;
pub mod types;

pub use alphabet::{alphabet_info, nullable, AlphabetInfo};
pub use ast::{Op, Regex};
pub use automata::{enumerate_language, glushkov, member, product_nonempty, Nfa, ProductError};
pub use canonical::{coercible_kinds, coercible_types, extract_canonical, CanonicalForm};
pub use letter::{parse_word, render_word, Letter, Word};
pub use linear::{dispatch, Algo, Answer, Verdict};
pub use parse::{parse, ParseError};
pub use types::{classify, Kind, TypeDescriptor};
