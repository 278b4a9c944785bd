//! Position automata: the quadratic product baseline and the membership
//! and enumeration oracles used throughout the tests.

mod enumerate;
mod nfa;
mod product;

pub use enumerate::{enumerate_language, EnumerateError, DEFAULT_ENUMERATION_BUDGET};
pub use nfa::{glushkov, member, member_fast, Nfa};
pub use product::{product_nonempty, product_nonempty_nfa, ProductError, DEFAULT_PAIR_BUDGET};
