use super::gadgets::{special_gadgets, vector_gadget_a, vector_gadget_b, GadgetSet};
use super::instance::orthogonal;
use super::normalize::NormalizedOvInstance;
use crate::ast::Regex;
use crate::automata::product_nonempty;
use crate::canonical::{CanonicalForm, RunSeq};
use crate::letter::{Letter, Word};

/// One checked gadget relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationCheck {
    pub item: u8,
    pub description: String,
    pub expected_nonempty: bool,
    pub got_nonempty: Option<bool>,
    pub pass: bool,
}

fn runs_regex(r: &RunSeq) -> Regex {
    CanonicalForm::RunSeq(r.clone())
        .to_regex()
        .expect("gadgets are never empty")
}

/// `b0^k · middle · b0^h` as a `∘|` expression.
fn framed(g: &GadgetSet, k: usize, middle: &[Vec<Letter>], h: usize) -> Regex {
    let mut sets: Vec<Vec<Letter>> = Vec::new();
    for _ in 0..k {
        sets.extend(g.b0.iter().cloned());
    }
    sets.extend(middle.iter().cloned());
    for _ in 0..h {
        sets.extend(g.b0.iter().cloned());
    }
    Regex::concat(sets.iter().map(|s| Regex::letter_set(s)).collect())
}

fn singles(w: &[Letter]) -> Vec<Vec<Letter>> {
    w.iter().map(|&c| vec![c]).collect()
}

/// Checks the pairwise gadget relations on a normalized instance:
///
/// 1. `a0 ⊓ b0^k b_j ≠ ∅`
/// 2. `a_i ⊓ b0^k ≠ ∅` for `k ≥ 1`, `i` in `0..=M`
/// 3. `a_i ⊓ b0^k b_j ≠ ∅` iff `α_i ⊥ β_j`
/// 4. `a0` meets `b0^k b_even b0^h` and `b0^k b_odd b0^h`, no `a_i` does
/// 5. `a_even` meets `b_even` but neither `b0` nor `b_odd`
/// 6. `a_even ⊓ b_p ≠ ∅` iff `p` is even
/// 7. no `a_i` meets `x b0 y` for two single-vector gadgets `x`, `y`
///
/// `k` and `h` range over `0..=k_max`.
pub fn gadget_relation_suite(
    norm: &NormalizedOvInstance,
    k_max: usize,
    budget: usize,
) -> Vec<RelationCheck> {
    let g = special_gadgets(norm.d()).expect("normalized dimension is odd and at least 5");
    let a_i: Vec<RunSeq> = norm
        .inst
        .a
        .iter()
        .map(|r| vector_gadget_a(r).expect("A boundary"))
        .collect();
    let b_j: Vec<Word> = norm
        .inst
        .b
        .iter()
        .enumerate()
        .map(|(j, r)| vector_gadget_b(r, j + 1).expect("B boundary"))
        .collect();
    let a0 = runs_regex(&g.a0);
    let a_even = runs_regex(&g.a_even);
    let a_rx: Vec<Regex> = a_i.iter().map(runs_regex).collect();
    let mut out = Vec::new();
    let mut check = |item: u8, description: String, a: &Regex, b: &Regex, expected: bool| {
        let got = product_nonempty(a, b, budget)
            .ok()
            .map(|ans| !ans.is_empty());
        out.push(RelationCheck {
            item,
            description,
            expected_nonempty: expected,
            got_nonempty: got,
            pass: got == Some(expected),
        });
    };

    for k in 0..=k_max {
        for (j, b) in b_j.iter().enumerate() {
            let rhs = framed(&g, k, &singles(b), 0);
            check(1, format!("a0 vs b0^{k} b{}", j + 1), &a0, &rhs, true);
        }
    }
    for k in 1..=k_max.max(1) {
        let rhs = framed(&g, k, &[], 0);
        check(2, format!("a0 vs b0^{k}"), &a0, &rhs, true);
        for (i, a) in a_rx.iter().enumerate() {
            check(2, format!("a{} vs b0^{k}", i + 1), a, &rhs, true);
        }
    }
    for k in 0..=k_max {
        for (j, b) in b_j.iter().enumerate() {
            let rhs = framed(&g, k, &singles(b), 0);
            for (i, a) in a_rx.iter().enumerate() {
                let expected = orthogonal(&norm.inst.a[i], &norm.inst.b[j]);
                check(
                    3,
                    format!("a{} vs b0^{k} b{}", i + 1, j + 1),
                    a,
                    &rhs,
                    expected,
                );
            }
        }
    }
    for k in 0..=k_max {
        for h in 0..=k_max {
            for (name, w) in [("b_even", &g.b_even), ("b_odd", &g.b_odd)] {
                let rhs = framed(&g, k, &singles(w), h);
                check(4, format!("a0 vs b0^{k} {name} b0^{h}"), &a0, &rhs, true);
                for (i, a) in a_rx.iter().enumerate() {
                    check(
                        4,
                        format!("a{} vs b0^{k} {name} b0^{h}", i + 1),
                        a,
                        &rhs,
                        false,
                    );
                }
            }
        }
    }
    check(
        5,
        "a_even vs b_even".into(),
        &a_even,
        &Regex::word(&g.b_even),
        true,
    );
    check(
        5,
        "a_even vs b0".into(),
        &a_even,
        &framed(&g, 1, &[], 0),
        false,
    );
    check(
        5,
        "a_even vs b_odd".into(),
        &a_even,
        &Regex::word(&g.b_odd),
        false,
    );
    for (j, b) in b_j.iter().enumerate() {
        let p = j + 1;
        check(
            6,
            format!("a_even vs b{p}"),
            &a_even,
            &Regex::word(b),
            p % 2 == 0,
        );
    }
    let n = b_j.len();
    let mut singles_pool: Vec<(String, &Word)> =
        vec![("b1".into(), &b_j[0]), (format!("b{n}"), &b_j[n - 1])];
    singles_pool.push(("b_even".into(), &g.b_even));
    singles_pool.push(("b_odd".into(), &g.b_odd));
    for (xn, x) in &singles_pool {
        for (yn, y) in &singles_pool {
            let mut middle = singles(x);
            middle.extend(g.b0.iter().cloned());
            middle.extend(singles(y));
            let rhs = framed(&g, 0, &middle, 0);
            check(7, format!("a0 vs {xn} b0 {yn}"), &a0, &rhs, false);
            for (i, a) in a_rx.iter().enumerate() {
                check(7, format!("a{} vs {xn} b0 {yn}", i + 1), a, &rhs, false);
            }
        }
    }
    out
}
