use thiserror::Error;

use crate::canonical::{Run, RunSeq};
use crate::letter::{Letter, Word};

pub const X: Letter = Letter(b'x' as u32);
pub const Y: Letter = Letter(b'y' as u32);
pub const DOLLAR: Letter = Letter(b'$' as u32);

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("row must start and end with {expected}")]
    Boundary { expected: u8 },
    #[error("dimension {d} must be odd and at least 5")]
    Dimension { d: usize },
}

fn coord_letter(k: usize) -> Letter {
    if k % 2 == 1 {
        Y
    } else {
        X
    }
}

/// `C_A(v, k)` for 1-based coordinate `k`: `ccc⁺` for a 1, `c⁺` for a 0,
/// with `c = y` on odd coordinates and `x` on even ones.
pub fn coord_gadget_a(v: bool, k: usize) -> Run {
    Run::open(coord_letter(k), if v { 3 } else { 1 })
}

/// `C_B(v, k)`: `c` for a 1, `ccc` for a 0.
pub fn coord_gadget_b(v: bool, k: usize) -> Word {
    vec![coord_letter(k); if v { 1 } else { 3 }]
}

/// `a_i⊥`: concatenated `C_A` gadgets of `α`.
pub fn vector_gadget_a(alpha: &[bool]) -> Result<RunSeq, GadgetError> {
    if alpha.first() != Some(&true) || alpha.last() != Some(&true) {
        return Err(GadgetError::Boundary { expected: 1 });
    }
    Ok(RunSeq::from_runs(
        alpha
            .iter()
            .enumerate()
            .map(|(i, &v)| coord_gadget_a(v, i + 1)),
    ))
}

/// `b_j`: concatenated `C_B` gadgets of `β`, wrapped in `yyy…yyy` when
/// `j` (1-based) is even.
pub fn vector_gadget_b(beta: &[bool], j: usize) -> Result<Word, GadgetError> {
    if beta.first() != Some(&false) || beta.last() != Some(&false) {
        return Err(GadgetError::Boundary { expected: 0 });
    }
    let mut w = Vec::with_capacity(3 * beta.len() + 6);
    if j.is_multiple_of(2) {
        w.extend([Y; 3]);
    }
    for (i, &v) in beta.iter().enumerate() {
        w.extend(coord_gadget_b(v, i + 1));
    }
    if j.is_multiple_of(2) {
        w.extend([Y; 3]);
    }
    Ok(w)
}

/// The fixed gadgets for dimension `d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GadgetSet {
    pub d: usize,
    /// `(y⁺x⁺)^{⌊d/2⌋} y⁺`
    pub a0: RunSeq,
    /// `y⁶ x⁺ (y⁺x⁺)^{⌊d/2⌋-1} y⁶`
    pub a_even: RunSeq,
    /// `(y³[x|y]³)^{⌊d/2⌋} y³`
    pub b0: Vec<Vec<Letter>>,
    /// `y⁶ x (yx)^{⌊d/2⌋-1} y⁶`
    pub b_even: Word,
    /// `y³ x (yx)^{⌊d/2⌋-1} y³`
    pub b_odd: Word,
    pub b0_dollar: Vec<Vec<Letter>>,
    pub b_even_dollar: Vec<Vec<Letter>>,
    pub b_odd_dollar: Vec<Vec<Letter>>,
}

fn singletons(w: &[Letter]) -> Vec<Vec<Letter>> {
    w.iter().map(|&c| vec![c]).collect()
}

fn with_dollar(mut sets: Vec<Vec<Letter>>) -> Vec<Vec<Letter>> {
    sets.push(vec![Y, DOLLAR]);
    sets
}

pub fn special_gadgets(d: usize) -> Result<GadgetSet, GadgetError> {
    if d.is_multiple_of(2) || d < 5 {
        return Err(GadgetError::Dimension { d });
    }
    let h = d / 2;
    let mut a0 = Vec::new();
    for _ in 0..h {
        a0.extend([Run::open(Y, 1), Run::open(X, 1)]);
    }
    a0.push(Run::open(Y, 1));
    let mut a_even = vec![Run::closed(Y, 6), Run::open(X, 1)];
    for _ in 1..h {
        a_even.extend([Run::open(Y, 1), Run::open(X, 1)]);
    }
    a_even.push(Run::closed(Y, 6));

    let mut b0 = Vec::new();
    for _ in 0..h {
        b0.extend(std::iter::repeat_n(vec![Y], 3));
        b0.extend(std::iter::repeat_n(vec![X, Y], 3));
    }
    b0.extend(std::iter::repeat_n(vec![Y], 3));
    let alternating = |edge: usize| -> Word {
        let mut w = vec![Y; edge];
        w.push(X);
        for _ in 1..h {
            w.extend([Y, X]);
        }
        w.extend(std::iter::repeat_n(Y, edge));
        w
    };
    let (b_even, b_odd) = (alternating(6), alternating(3));
    Ok(GadgetSet {
        d,
        a0: RunSeq::from_runs(a0),
        a_even: RunSeq::from_runs(a_even),
        b0_dollar: with_dollar(b0.clone()),
        b_even_dollar: with_dollar(singletons(&b_even)),
        b_odd_dollar: with_dollar(singletons(&b_odd)),
        b0,
        b_even,
        b_odd,
    })
}

/// Exponent notation for a letter-set sequence: equal adjacent sets are
/// grouped, so `yyy[x|y][x|y][x|y]` prints as `y3[x|y]3`. Sets print in
/// the order given.
pub fn compact_possets(sets: &[Vec<Letter>]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < sets.len() {
        let s = &sets[i];
        let j = i + sets[i..].iter().take_while(|t| *t == s).count();
        if s.len() == 1 {
            out.push_str(&s[0].to_string());
        } else {
            let parts: Vec<String> = s.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("[{}]", parts.join("|")));
        }
        if j - i > 1 {
            out.push_str(&(j - i).to_string());
        }
        i = j;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::render_word;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    #[test]
    fn coordinate_tables() {
        assert_eq!(coord_gadget_a(true, 1), Run::open(Y, 3));
        assert_eq!(coord_gadget_b(true, 1), vec![Y]);
        assert_eq!(coord_gadget_a(false, 2), Run::open(X, 1));
        assert_eq!(coord_gadget_b(false, 2), vec![X, X, X]);
        assert_eq!(coord_gadget_a(false, 1), Run::open(Y, 1));
        assert_eq!(coord_gadget_b(false, 1), vec![Y, Y, Y]);
    }

    #[test]
    fn example_vector_gadgets() {
        assert_eq!(
            vector_gadget_a(&bits("10011")).unwrap().to_string(),
            "y3+x+y+x3+y3+"
        );
        assert_eq!(
            vector_gadget_a(&bits("11001")).unwrap().to_string(),
            "y3+x3+y+x+y3+"
        );
        assert_eq!(
            vector_gadget_a(&bits("11111")).unwrap().to_string(),
            "y3+x3+y3+x3+y3+"
        );
        assert_eq!(
            render_word(&vector_gadget_b(&bits("00010"), 1).unwrap()),
            "yyyxxxyyyxyyy"
        );
        assert_eq!(
            render_word(&vector_gadget_b(&bits("01010"), 2).unwrap()),
            "yyyyyyxyyyxyyyyyy"
        );
        assert_eq!(
            vector_gadget_a(&bits("00011")),
            Err(GadgetError::Boundary { expected: 1 })
        );
        assert_eq!(
            vector_gadget_b(&bits("10010"), 1),
            Err(GadgetError::Boundary { expected: 0 })
        );
    }

    #[test]
    fn special_gadgets_d5() {
        let g = special_gadgets(5).unwrap();
        assert_eq!(g.a0.to_string(), "y+x+y+x+y+");
        assert_eq!(g.a_even.to_string(), "y6x+y+x+y6");
        assert_eq!(compact_possets(&g.b0), "y3[x|y]3y3[x|y]3y3");
        assert_eq!(compact_possets(&g.b0_dollar), "y3[x|y]3y3[x|y]3y3[y|$]");
        assert_eq!(compact_possets(&g.b_even_dollar), "y6xyxy6[y|$]");
        assert_eq!(compact_possets(&g.b_odd_dollar), "y3xyxy3[y|$]");
        assert_eq!(render_word(&g.b_even), "yyyyyyxyxyyyyyy");
        assert_eq!(special_gadgets(6), Err(GadgetError::Dimension { d: 6 }));
        assert_eq!(special_gadgets(3), Err(GadgetError::Dimension { d: 3 }));
    }
}
