use std::fmt;

use super::{Algo, Answer};
use crate::ast::Regex;
use crate::automata::{product_nonempty, ProductError, DEFAULT_PAIR_BUDGET};
use crate::canonical::{coercible_kinds, extract_coercible, CanonicalForm, FormTag};
use crate::types::{classify, Kind, TypeDescriptor};

#[derive(Clone, Copy, Debug)]
pub struct DispatchOptions {
    pub force_baseline: bool,
    /// State-pair budget for the product baseline.
    pub budget: usize,
}

impl Default for DispatchOptions {
    fn default() -> Self {
        DispatchOptions {
            force_baseline: false,
            budget: DEFAULT_PAIR_BUDGET,
        }
    }
}

/// How a pair of expressions is decided.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    /// A linear algorithm on the two expressions read as `left`/`right`.
    Linear {
        algo: Algo,
        left: Kind,
        right: Kind,
        star_reduced: bool,
    },
    Baseline,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Linear {
                algo,
                star_reduced: true,
                ..
            } => write!(f, "star-reduce/{algo}"),
            Route::Linear { algo, .. } => write!(f, "{algo}"),
            Route::Baseline => f.write_str("baseline"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairRoute {
    pub left: TypeDescriptor,
    pub right: TypeDescriptor,
    pub route: Route,
}

/// Routing table over form tags, lower rank first. The boolean asks for
/// the operands to be swapped so the algorithm sees its expected order.
fn rank(a: FormTag, b: FormTag) -> Option<(u8, Algo, bool, bool)> {
    use FormTag::*;
    let plain = |x: FormTag, y: FormTag| -> Option<(u8, Algo)> {
        Some(match (x, y) {
            (AlphaClosure, AlphaClosure) => (0, Algo::Closure),
            (AlphaClosure, _) => (1, Algo::Closure),
            (RunAlt, RunAlt) => (2, Algo::RunAlt),
            (RunAlt, _) => (3, Algo::RunAlt),
            (PowerStar, PowerStar) => (4, Algo::StarEpsilon),
            (PosSets, PosSets) => (6, Algo::PosSetsPosSets),
            (RunSeq, RunSeq) => (7, Algo::RunSeqRunSeq),
            (PowerPlus, PowerPlus) => (8, Algo::PowerPower),
            (PosSets, StrDict) => (9, Algo::PosSetsDict),
            (PosSets, PowerPlus) => (10, Algo::PosSetsPower),
            (RunSeq, StrDict) => (11, Algo::RunSeqDict),
            (RunSeq, PowerPlus) => (12, Algo::RunSeqPower),
            (StrDict, StrDict) => (13, Algo::DictDict),
            (PowerPlus, StrDict) => (14, Algo::PowerDict),
            _ => return None,
        })
    };
    let star = |x: FormTag, y: FormTag| -> Option<(u8, Algo)> {
        if x != PowerStar || !matches!(y, PosSets | RunSeq | StrDict | PowerPlus) {
            return None;
        }
        let inner = plain(PowerPlus, y).or_else(|| plain(y, PowerPlus))?.1;
        Some((5, inner))
    };
    if let Some((r, algo)) = plain(a, b) {
        return Some((r, algo, false, false));
    }
    if let Some((r, algo)) = plain(b, a) {
        return Some((r, algo, true, false));
    }
    if let Some((r, algo)) = star(a, b) {
        return Some((r, algo, false, true));
    }
    if let Some((r, algo)) = star(b, a) {
        return Some((r, algo, true, true));
    }
    None
}

struct Plan {
    algo: Algo,
    left: Kind,
    right: Kind,
    swap: bool,
    star_reduced: bool,
}

fn plan(a: &Regex, b: &Regex) -> Option<Plan> {
    let (ka, kb) = (coercible_kinds(a), coercible_kinds(b));
    let mut best: Option<(u8, Plan)> = None;
    for &x in &ka {
        for &y in &kb {
            if let Some((r, algo, swap, star_reduced)) =
                rank(FormTag::of_kind(x), FormTag::of_kind(y))
            {
                if best.as_ref().is_none_or(|(br, _)| r < *br) {
                    best = Some((
                        r,
                        Plan {
                            algo,
                            left: x,
                            right: y,
                            swap,
                            star_reduced,
                        },
                    ));
                }
            }
        }
    }
    best.map(|(_, p)| p)
}

/// The route `dispatch` takes for this pair.
pub fn route(a: &Regex, b: &Regex) -> PairRoute {
    let route = match plan(a, b) {
        Some(p) => Route::Linear {
            algo: p.algo,
            left: p.left,
            right: p.right,
            star_reduced: p.star_reduced,
        },
        None => Route::Baseline,
    };
    PairRoute {
        left: classify(a),
        right: classify(b),
        route,
    }
}

/// Decides `L(a) ∩ L(b) ≠ ∅` with default options.
pub fn dispatch(a: &Regex, b: &Regex) -> Result<Answer, ProductError> {
    dispatch_with(a, b, &DispatchOptions::default())
}

pub fn dispatch_with(a: &Regex, b: &Regex, opts: &DispatchOptions) -> Result<Answer, ProductError> {
    if opts.force_baseline {
        return product_nonempty(a, b, opts.budget);
    }
    let Some(p) = plan(a, b) else {
        return product_nonempty(a, b, opts.budget);
    };
    let fa = extract_coercible(a, p.left);
    let fb = extract_coercible(b, p.right);
    let (x, y) = if p.swap { (fb, fa) } else { (fa, fb) };
    Ok(run(p.algo, p.star_reduced, &x, &y))
}

/// Runs a linear algorithm on forms already in its expected order.
pub(crate) fn run(algo: Algo, star_reduced: bool, x: &CanonicalForm, y: &CanonicalForm) -> Answer {
    use CanonicalForm as F;
    if star_reduced {
        let F::PowerStr(p) = x else {
            unreachable!("star reduction needs a power")
        };
        return super::intersect_star_reduce(p, y).expect("star reduction applies");
    }
    match (algo, x, y) {
        (Algo::Closure, F::AlphaClosure(c), other) => super::intersect_closure_any(c, other),
        (Algo::RunAlt, F::RunAlt(r), other) => super::intersect_runalt_any(r, other),
        (Algo::StarEpsilon, F::PowerStr(_), F::PowerStr(_)) => {
            Answer::nonempty(Vec::new(), Algo::StarEpsilon)
        }
        (Algo::PosSetsPosSets, F::PosSets(s), F::PosSets(t)) => {
            super::intersect_possets_possets(s, t)
        }
        (Algo::RunSeqRunSeq, F::RunSeq(s), F::RunSeq(t)) => super::intersect_runseq_runseq(s, t),
        (Algo::PowerPower, F::PowerStr(s), F::PowerStr(t)) => super::intersect_power_power(s, t),
        (Algo::PosSetsDict, F::PosSets(s), F::StrDict(d)) => super::intersect_possets_dict(s, d),
        (Algo::PosSetsPower, F::PosSets(s), F::PowerStr(t)) => super::intersect_possets_power(s, t),
        (Algo::RunSeqDict, F::RunSeq(s), F::StrDict(d)) => super::intersect_runseq_dict(s, d),
        (Algo::RunSeqPower, F::RunSeq(s), F::PowerStr(t)) => super::intersect_runseq_power(s, t),
        (Algo::DictDict, F::StrDict(s), F::StrDict(t)) => super::intersect_dict_dict(s, t),
        (Algo::PowerDict, F::PowerStr(t), F::StrDict(d)) => super::intersect_power_dict(t, d),
        (algo, x, y) => unreachable!("no {algo} algorithm for {:?} and {:?}", x.tag(), y.tag()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::render_word;
    use crate::parse::parse;

    fn p(s: &str) -> Regex {
        parse(s).unwrap()
    }

    fn answer(a: &str, b: &str) -> Answer {
        dispatch(&p(a), &p(b)).unwrap()
    }

    #[test]
    fn hard_pair_goes_to_baseline() {
        assert_eq!(
            route(&p("ab+a+a"), &p("[a|b]bc[a|b|c]")).route,
            Route::Baseline
        );
        assert_eq!(answer("ab+a+a", "[a|b]bc[a|b|c]").algo, Algo::Baseline);
    }

    #[test]
    fn strings_ride_coercions() {
        let ans = answer("abba", "[a|b][b|c]");
        assert_eq!(ans.algo, Algo::PosSetsPosSets);
        assert!(ans.is_empty());
    }

    #[test]
    fn star_sequence_is_red_even_against_strings() {
        assert_eq!(route(&p("ab*a*b"), &p("aabb")).route, Route::Baseline);
        // L(ab*a*b) = a b^i a^j b never ends in bb
        assert!(answer("ab*a*b", "aabb").is_empty());
        assert!(!answer("ab*a*b", "abab").is_empty());
    }

    #[test]
    fn star_routes() {
        let ans = answer("(baab)*", "(aab)*");
        assert_eq!(ans.algo, Algo::StarEpsilon);
        assert_eq!(ans.witness(), Some(&[][..]));
        let r = route(&p("(ab)*"), &p("[abab|ba]")).route;
        assert_eq!(r.to_string(), "star-reduce/power-dict");
        assert_eq!(
            render_word(answer("(ab)*", "[abab|ba]").witness().unwrap()),
            "abab"
        );
    }

    #[test]
    fn closure_and_runalt_take_priority() {
        assert_eq!(answer("[a|b]+", "[a+|b]").algo, Algo::Closure);
        assert_eq!(answer("[a+|b]", "[a|c]b").algo, Algo::RunAlt);
        assert_eq!(answer("c", "[a*|b*|c]").algo, Algo::RunAlt);
    }

    #[test]
    fn non_homogeneous_goes_to_baseline() {
        assert_eq!(answer("a+b[c|a]", "ab+a").algo, Algo::Baseline);
    }

    #[test]
    fn forced_baseline() {
        let opts = DispatchOptions {
            force_baseline: true,
            ..Default::default()
        };
        assert_eq!(
            dispatch_with(&p("ab"), &p("ab"), &opts).unwrap().algo,
            Algo::Baseline
        );
    }
}
