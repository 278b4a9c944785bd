use super::gadgets::{special_gadgets, vector_gadget_a, vector_gadget_b, DOLLAR};
use super::normalize::{AssumptionViolation, NormalizedOvInstance};
use crate::ast::Regex;
use crate::canonical::{CanonicalForm, Run, RunSeq};
use crate::letter::Letter;

/// The two expressions of the reduction with their fragments.
#[derive(Clone, Debug)]
pub struct Reduction {
    /// `A = A_pre · A⊥ · A_suf`, type `∘+`.
    pub a: Regex,
    /// `B = B_pre · B⊥ · B_suf`, type `∘|`.
    pub b: Regex,
    pub a_runs: RunSeq,
    pub b_sets: Vec<Vec<Letter>>,
    pub audit: ReductionAudit,
}

/// Sizes and dollar counts of a built reduction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionAudit {
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub size_a: usize,
    pub size_b: usize,
    /// `$` in every word of `L(A)`.
    pub a_dollars: usize,
    /// `$` in every word of `L(A⊥)`.
    pub a_perp_dollars: usize,
    /// Positions of `B⊥` that are exactly `$`, and those that may be `$`.
    pub b_perp_dollars: (usize, usize),
    pub b_dollars: (usize, usize),
    /// `a_i⊥` in run notation, in order.
    pub a_gadgets: Vec<String>,
}

fn dollar_counts(sets: &[Vec<Letter>]) -> (usize, usize) {
    let forced = sets.iter().filter(|s| s.as_slice() == [DOLLAR]).count();
    let optional = sets
        .iter()
        .filter(|s| s.len() > 1 && s.contains(&DOLLAR))
        .count();
    (forced, forced + optional)
}

/// Builds `A` and `B` from a normalized instance.
pub fn build_reduction(norm: &NormalizedOvInstance) -> Result<Reduction, AssumptionViolation> {
    norm.check_assumptions()?;
    let (m, n, d) = (norm.m(), norm.n(), norm.d());
    let g = special_gadgets(d).expect("normalized dimension is odd and at least 5");
    let dollar = Run::closed(DOLLAR, 1);
    let reps = 2 * m + n;
    let blocks = (2 * m + n - 2) / 4;

    let a_gadgets: Vec<RunSeq> = norm
        .inst
        .a
        .iter()
        .map(|alpha| vector_gadget_a(alpha).expect("A rows start and end with 1"))
        .collect();
    let mut a_perp: Vec<Run> = Vec::new();
    for (i, gadget) in a_gadgets.iter().enumerate() {
        if i > 0 {
            a_perp.push(dollar);
            a_perp.extend(&g.a0.runs);
            a_perp.push(dollar);
        }
        a_perp.extend(&gadget.runs);
    }
    let mut runs: Vec<Run> = Vec::new();
    for _ in 0..reps {
        runs.extend(&g.a0.runs);
    }
    for _ in 0..n - 1 {
        runs.extend(&g.a0.runs);
        runs.push(dollar);
    }
    runs.extend(&g.a_even.runs);
    runs.push(dollar);
    runs.extend(&a_perp);
    runs.push(dollar);
    runs.extend(&g.a_even.runs);
    for _ in 0..n - 1 {
        runs.push(dollar);
        runs.extend(&g.a0.runs);
    }
    for _ in 0..reps {
        runs.extend(&g.a0.runs);
    }
    let a_runs = RunSeq::from_runs(runs.iter().copied());

    let singles = |w: &[Letter]| -> Vec<Vec<Letter>> { w.iter().map(|&c| vec![c]).collect() };
    let mut block: Vec<Vec<Letter>> = Vec::new();
    block.extend(g.b0_dollar.iter().cloned());
    block.extend(g.b_odd_dollar.iter().cloned());
    block.extend(g.b0_dollar.iter().cloned());
    block.extend(g.b_even_dollar.iter().cloned());
    let mut b_perp: Vec<Vec<Letter>> = Vec::new();
    for (j, beta) in norm.inst.b.iter().enumerate() {
        b_perp.extend(g.b0_dollar.iter().cloned());
        b_perp.extend(singles(
            &vector_gadget_b(beta, j + 1).expect("B rows start and end with 0"),
        ));
        b_perp.push(vec![DOLLAR]);
    }
    let mut sets: Vec<Vec<Letter>> = Vec::new();
    for _ in 0..reps {
        sets.extend(g.b0.iter().cloned());
    }
    for _ in 0..blocks {
        sets.extend(block.iter().cloned());
    }
    sets.extend(b_perp.iter().cloned());
    for _ in 0..blocks {
        sets.extend(block.iter().cloned());
    }
    for _ in 0..reps {
        sets.extend(g.b0.iter().cloned());
    }

    let a = CanonicalForm::RunSeq(a_runs.clone())
        .to_regex()
        .expect("nonempty run sequence");
    let b = Regex::concat(sets.iter().map(|s| Regex::letter_set(s)).collect());
    let count_dollars = |rs: &[Run]| {
        rs.iter()
            .filter(|r| r.letter == DOLLAR)
            .map(|r| r.len)
            .sum()
    };
    let audit = ReductionAudit {
        m,
        n,
        d,
        size_a: a.size(),
        size_b: b.size(),
        a_dollars: count_dollars(&a_runs.runs),
        a_perp_dollars: count_dollars(&a_perp),
        b_perp_dollars: dollar_counts(&b_perp),
        b_dollars: dollar_counts(&sets),
        a_gadgets: a_gadgets.iter().map(|r| r.to_string()).collect(),
    };
    Ok(Reduction {
        a,
        b,
        a_runs,
        b_sets: sets,
        audit,
    })
}
