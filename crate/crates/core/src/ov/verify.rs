use std::fmt;

use super::instance::{ov_bruteforce, OvInstance};
use super::normalize::{prepare_instance, AssumptionViolation, Normalized};
use super::reduction::build_reduction;
use crate::automata::{product_nonempty, ProductError};
use crate::letter::Word;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerifyStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for VerifyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyStatus::Pass => "PASS",
            VerifyStatus::Fail => "FAIL",
            VerifyStatus::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Outcome of checking the reduction on one instance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    pub status: VerifyStatus,
    /// First orthogonal pair of the input, 0-based.
    pub pair: Option<(usize, usize)>,
    /// Verdict of the intersection; `None` when not computed.
    pub nonempty: Option<bool>,
    pub witness: Option<Word>,
    pub trivial: bool,
    pub size_a: usize,
    pub size_b: usize,
}

/// Prepares the instance, builds the reduction, and compares the intersection
/// verdict with brute force.
pub fn verify_reduction(
    inst: &OvInstance,
    budget: usize,
) -> Result<VerifyReport, AssumptionViolation> {
    let pair = ov_bruteforce(inst);
    let norm = match prepare_instance(inst)? {
        Normalized::Trivial { orthogonal, .. } => {
            let status = if orthogonal == pair.is_some() {
                VerifyStatus::Pass
            } else {
                VerifyStatus::Fail
            };
            return Ok(VerifyReport {
                status,
                pair,
                nonempty: Some(orthogonal),
                witness: None,
                trivial: true,
                size_a: 0,
                size_b: 0,
            });
        }
        Normalized::Instance(n) => n,
    };
    let red = build_reduction(&norm)?;
    let mut report = VerifyReport {
        status: VerifyStatus::Inconclusive,
        pair,
        nonempty: None,
        witness: None,
        trivial: false,
        size_a: red.audit.size_a,
        size_b: red.audit.size_b,
    };
    match product_nonempty(&red.a, &red.b, budget) {
        Ok(ans) => {
            let nonempty = !ans.is_empty();
            report.nonempty = Some(nonempty);
            report.witness = ans.witness().map(<[_]>::to_vec);
            report.status = if nonempty == pair.is_some() {
                VerifyStatus::Pass
            } else {
                VerifyStatus::Fail
            };
        }
        Err(ProductError::BudgetExceeded { .. }) => {}
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{member, DEFAULT_PAIR_BUDGET};
    use crate::ov::normalize::Normalized;
    use crate::ov::reduction::build_reduction;

    #[test]
    fn small_instance_with_a_pair() {
        let inst = OvInstance::from_bits(&["10011", "11001"], &["00010", "01010"]);
        let r = verify_reduction(&inst, DEFAULT_PAIR_BUDGET).unwrap();
        assert_eq!(r.status, VerifyStatus::Pass);
        assert_eq!(r.nonempty, Some(true));
        let Normalized::Instance(norm) = prepare_instance(&inst).unwrap() else {
            unreachable!()
        };
        let red = build_reduction(&norm).unwrap();
        let w = r.witness.unwrap();
        assert!(member(&w, &red.a) && member(&w, &red.b));
    }

    #[test]
    fn small_instance_without_a_pair() {
        let inst = OvInstance::from_bits(&["110", "011"], &["010", "110"]);
        assert_eq!(ov_bruteforce(&inst), None);
        let r = verify_reduction(&inst, DEFAULT_PAIR_BUDGET).unwrap();
        assert_eq!(r.status, VerifyStatus::Pass);
        assert_eq!(r.nonempty, Some(false));
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let inst = OvInstance::from_bits(&["110", "011"], &["010", "110"]);
        let r = verify_reduction(&inst, 10).unwrap();
        assert_eq!(r.status, VerifyStatus::Inconclusive);
    }
}
