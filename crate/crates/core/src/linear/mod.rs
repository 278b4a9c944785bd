//! Linear-time intersection tests for pairs of canonical forms, and the
//! dispatcher that routes a pair of expressions to one of them or to the
//! product baseline.

mod closure;
mod dict;
mod dispatch;
mod possets;
mod power;
mod runalt;
mod runseq;

use std::fmt;

pub use closure::intersect_closure_any;
pub use dict::intersect_dict_dict;
pub use dispatch::{dispatch, dispatch_with, route, DispatchOptions, PairRoute, Route};
pub use possets::{intersect_possets_dict, intersect_possets_possets, intersect_possets_power};
pub use power::{
    common_divisor_exists, intersect_power_dict, intersect_power_power, intersect_star_reduce,
};
pub use runalt::intersect_runalt_any;
pub use runseq::{intersect_runseq_dict, intersect_runseq_power, intersect_runseq_runseq};

use crate::canonical::CanonicalForm;
use crate::letter::{Letter, Word};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Empty,
    NonEmpty(Word),
}

/// Algorithm that produced an answer.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Algo {
    PosSetsPosSets,
    PosSetsDict,
    PosSetsPower,
    RunSeqRunSeq,
    RunSeqDict,
    RunSeqPower,
    DictDict,
    PowerDict,
    PowerPower,
    StarEpsilon,
    Closure,
    RunAlt,
    Baseline,
}

impl Algo {
    pub const LINEAR: [Algo; 12] = [
        Algo::PosSetsPosSets,
        Algo::PosSetsDict,
        Algo::PosSetsPower,
        Algo::RunSeqRunSeq,
        Algo::RunSeqDict,
        Algo::RunSeqPower,
        Algo::DictDict,
        Algo::PowerDict,
        Algo::PowerPower,
        Algo::StarEpsilon,
        Algo::Closure,
        Algo::RunAlt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algo::PosSetsPosSets => "possets-possets",
            Algo::PosSetsDict => "possets-dict",
            Algo::PosSetsPower => "possets-power",
            Algo::RunSeqRunSeq => "runseq-runseq",
            Algo::RunSeqDict => "runseq-dict",
            Algo::RunSeqPower => "runseq-power",
            Algo::DictDict => "dict-dict",
            Algo::PowerDict => "power-dict",
            Algo::PowerPower => "power-power",
            Algo::StarEpsilon => "star-epsilon",
            Algo::Closure => "closure",
            Algo::RunAlt => "runalt",
            Algo::Baseline => "baseline",
        }
    }

    pub fn from_name(s: &str) -> Option<Algo> {
        Algo::LINEAR
            .into_iter()
            .chain([Algo::Baseline])
            .find(|a| a.name() == s)
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Answer {
    pub verdict: Verdict,
    /// Full intersection, for the routes that construct it.
    pub intersection: Option<CanonicalForm>,
    pub algo: Algo,
}

impl Answer {
    pub fn empty(algo: Algo) -> Answer {
        Answer {
            verdict: Verdict::Empty,
            intersection: None,
            algo,
        }
    }

    pub fn nonempty(word: Word, algo: Algo) -> Answer {
        Answer {
            verdict: Verdict::NonEmpty(word),
            intersection: None,
            algo,
        }
    }

    pub fn with_intersection(mut self, form: CanonicalForm) -> Answer {
        self.intersection = Some(form);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.verdict == Verdict::Empty
    }

    pub fn witness(&self) -> Option<&[Letter]> {
        match &self.verdict {
            Verdict::Empty => None,
            Verdict::NonEmpty(w) => Some(w),
        }
    }
}

/// Shortest, then lexicographically smallest.
pub(crate) fn better(candidate: &[Letter], best: Option<&[Letter]>) -> bool {
    match best {
        None => true,
        Some(b) => (candidate.len(), candidate) < (b.len(), b),
    }
}
