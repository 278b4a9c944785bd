use thiserror::Error;

use super::instance::{orthogonal, OvInstance};

/// An instance satisfying the six structural assumptions the gadget
/// reduction needs, with provenance back to the input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalizedOvInstance {
    pub inst: OvInstance,
    /// Original index of each `α`; `None` for sentinel rows.
    pub a_origin: Vec<Option<usize>>,
    /// Original index of each `β`.
    pub b_origin: Vec<usize>,
    /// Coordinate holding 0 in original `α` rows and 1 in every `β`;
    /// `None` when the input was used unchanged.
    pub sentinel_coord: Option<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Normalized {
    /// Decided without building gadgets. `pair` is an orthogonal pair of
    /// the input (0-based) when the answer is yes.
    Trivial {
        orthogonal: bool,
        pair: Option<(usize, usize)>,
    },
    Instance(NormalizedOvInstance),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AssumptionViolation {
    #[error("need M odd, N even, M < N and N divisible by 4 (M={m}, N={n})")]
    Counts { m: usize, n: usize },
    #[error("dimension {d} is not odd and at least 5")]
    Dimension { d: usize },
    #[error("row {row} of {set} has wrong boundary bits")]
    Boundary { set: char, row: usize },
    #[error("row {row} of {set} is one of the excluded vectors")]
    Excluded { set: char, row: usize },
    #[error("row {row} of A is orthogonal to some row of B but must not be")]
    BoundaryRowOrthogonal { row: usize },
    #[error("rows {row} and {} of B are not an adjacent duplicate pair", row + 1)]
    Parity { row: usize },
}

impl NormalizedOvInstance {
    /// The instance itself, when it already satisfies every assumption.
    pub fn as_is(inst: &OvInstance) -> Option<NormalizedOvInstance> {
        let norm = NormalizedOvInstance {
            inst: inst.clone(),
            a_origin: (0..inst.m()).map(Some).collect(),
            b_origin: (0..inst.n()).collect(),
            sentinel_coord: None,
        };
        norm.check_assumptions().ok().map(|()| norm)
    }

    /// True when the rows were rewritten rather than taken as given.
    pub fn rewritten(&self) -> bool {
        self.sentinel_coord.is_some()
    }

    pub fn m(&self) -> usize {
        self.inst.m()
    }

    pub fn n(&self) -> usize {
        self.inst.n()
    }

    pub fn d(&self) -> usize {
        self.inst.d
    }

    /// Checks every assumption. The parity assumption is checked through
    /// its structural cause: `β` rows come in adjacent equal pairs
    /// starting at an odd (1-based) index, so any orthogonal pair has a
    /// same-parity partner.
    pub fn check_assumptions(&self) -> Result<(), AssumptionViolation> {
        let (m, n, d) = (self.m(), self.n(), self.d());
        if m % 2 == 0 || n % 4 != 0 || m >= n {
            return Err(AssumptionViolation::Counts { m, n });
        }
        if d % 2 == 0 || d < 5 {
            return Err(AssumptionViolation::Dimension { d });
        }
        for (set, rows, edge) in [('A', &self.inst.a, true), ('B', &self.inst.b, false)] {
            for (row, r) in rows.iter().enumerate() {
                if r[0] != edge || r[d - 1] != edge {
                    return Err(AssumptionViolation::Boundary { set, row });
                }
                let inner_all = |v: bool| r[1..d - 1].iter().all(|&x| x == v);
                let excluded = r.iter().all(|&x| x)
                    || r.iter().all(|&x| !x)
                    || (r[0] && r[d - 1] && inner_all(false))
                    || (!r[0] && !r[d - 1] && inner_all(true));
                if excluded {
                    return Err(AssumptionViolation::Excluded { set, row });
                }
            }
        }
        for row in [0, m - 1] {
            if self
                .inst
                .b
                .iter()
                .any(|beta| orthogonal(&self.inst.a[row], beta))
            {
                return Err(AssumptionViolation::BoundaryRowOrthogonal { row });
            }
        }
        for row in (0..n).step_by(2) {
            if self.inst.b[row] != self.inst.b[row + 1] {
                return Err(AssumptionViolation::Parity { row });
            }
        }
        Ok(())
    }
}

/// Uses the instance unchanged when it already meets every assumption,
/// otherwise normalizes it.
pub fn prepare_instance(inst: &OvInstance) -> Result<Normalized, AssumptionViolation> {
    match NormalizedOvInstance::as_is(inst) {
        Some(n) => Ok(Normalized::Instance(n)),
        None => normalize_instance(inst),
    }
}

/// Brings an instance into the shape the reduction needs, or decides it
/// outright.
///
/// Steps: drop zero rows (an immediate yes) and all-ones rows (never
/// orthogonal to a nonzero row); add a coordinate that is 0 in `A` and 1
/// in `B`; pad to odd `d`; wrap `α ↦ 1α1`, `β ↦ 0β0`; add sentinel `A`
/// rows with 1s at both ends and at the new coordinate; duplicate every
/// `β` next to itself; pad counts. None of these changes any dot product
/// between original rows, and sentinels meet every `β` in the new
/// coordinate.
pub fn normalize_instance(inst: &OvInstance) -> Result<Normalized, AssumptionViolation> {
    if let Some(i) = inst.a.iter().position(|r| r.iter().all(|&x| !x)) {
        return Ok(Normalized::Trivial {
            orthogonal: true,
            pair: Some((i, 0)),
        });
    }
    if let Some(j) = inst.b.iter().position(|r| r.iter().all(|&x| !x)) {
        return Ok(Normalized::Trivial {
            orthogonal: true,
            pair: Some((0, j)),
        });
    }
    let keep = |rows: &[Vec<bool>]| -> Vec<(usize, Vec<bool>)> {
        rows.iter()
            .enumerate()
            .filter(|(_, r)| !r.iter().all(|&x| x))
            .map(|(i, r)| (i, r.clone()))
            .collect()
    };
    let (a0, b0) = (keep(&inst.a), keep(&inst.b));
    if a0.is_empty() || b0.is_empty() {
        return Ok(Normalized::Trivial {
            orthogonal: false,
            pair: None,
        });
    }

    let mut d = inst.d + 1;
    let pad_even = d.is_multiple_of(2);
    if pad_even {
        d += 1;
    }
    let full_d = d + 2;
    // original coordinates sit at 1..=inst.d, the sentinel right after
    let sentinel_coord = inst.d + 1;
    let widen = |r: &[bool], edge: bool, sentinel: bool| -> Vec<bool> {
        let mut out = Vec::with_capacity(full_d);
        out.push(edge);
        out.extend_from_slice(r);
        out.push(sentinel);
        if pad_even {
            out.push(false);
        }
        out.push(edge);
        out
    };
    let mut sentinel_row = vec![false; full_d];
    sentinel_row[0] = true;
    sentinel_row[sentinel_coord] = true;
    sentinel_row[full_d - 1] = true;

    let mut a = vec![sentinel_row.clone()];
    let mut a_origin = vec![None];
    for (i, r) in &a0 {
        a.push(widen(r, true, false));
        a_origin.push(Some(*i));
    }
    a.push(sentinel_row.clone());
    a_origin.push(None);
    if a.len() % 2 == 0 {
        a.push(sentinel_row);
        a_origin.push(None);
    }

    let mut b = Vec::with_capacity(2 * b0.len() + 4);
    let mut b_origin = Vec::with_capacity(2 * b0.len() + 4);
    for (j, r) in &b0 {
        let row = widen(r, false, true);
        b.push(row.clone());
        b.push(row);
        b_origin.extend([*j, *j]);
    }
    let mut next = 0;
    while b.len() % 4 != 0 || b.len() <= a.len() {
        let row = b[2 * next].clone();
        let origin = b_origin[2 * next];
        b.push(row.clone());
        b.push(row);
        b_origin.extend([origin, origin]);
        next += 1;
    }

    let norm = NormalizedOvInstance {
        inst: OvInstance { d: full_d, a, b },
        a_origin,
        b_origin,
        sentinel_coord: Some(sentinel_coord),
    };
    norm.check_assumptions()?;
    Ok(Normalized::Instance(norm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ov::instance::{ov_bruteforce, random_instance, Plant};
    use rand::{Rng, SeedableRng};

    fn normalized(inst: &OvInstance) -> NormalizedOvInstance {
        match normalize_instance(inst).unwrap() {
            Normalized::Instance(n) => n,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_rows_decide_immediately() {
        let inst = OvInstance::from_bits(&["1011", "1110"], &["0110", "0000"]);
        assert_eq!(
            normalize_instance(&inst).unwrap(),
            Normalized::Trivial {
                orthogonal: true,
                pair: Some((0, 1))
            }
        );
    }

    #[test]
    fn all_ones_rows_are_dropped() {
        let inst = OvInstance::from_bits(&["111"], &["011", "110"]);
        assert_eq!(
            normalize_instance(&inst).unwrap(),
            Normalized::Trivial {
                orthogonal: false,
                pair: None
            }
        );
    }

    #[test]
    fn generic_instance_shape() {
        let inst = OvInstance::from_bits(&["1010", "0110"], &["0101", "1001", "0011"]);
        let n = normalized(&inst);
        assert_eq!(n.m() % 2, 1);
        assert_eq!(n.n() % 4, 0);
        assert!(n.m() < n.n());
        assert_eq!(n.d() % 2, 1);
        assert!(n.a_origin[0].is_none() && n.a_origin[n.m() - 1].is_none());
        n.check_assumptions().unwrap();
    }

    #[test]
    fn answer_is_preserved_and_sentinels_never_orthogonal() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let (m, nb, d) = (
                rng.gen_range(1..=6),
                rng.gen_range(1..=6),
                rng.gen_range(1..=5),
            );
            let inst = random_instance(m, nb, d, Plant::Free, &mut rng);
            let expected = ov_bruteforce(&inst).is_some();
            match normalize_instance(&inst).unwrap() {
                Normalized::Trivial { orthogonal, pair } => {
                    assert_eq!(orthogonal, expected);
                    if let Some((i, j)) = pair {
                        assert!(crate::ov::orthogonal(&inst.a[i], &inst.b[j]));
                    }
                }
                Normalized::Instance(n) => {
                    assert_eq!(ov_bruteforce(&n.inst).is_some(), expected);
                    for (i, alpha) in n.inst.a.iter().enumerate() {
                        let orth = n
                            .inst
                            .b
                            .iter()
                            .any(|beta| crate::ov::orthogonal(alpha, beta));
                        if n.a_origin[i].is_none() {
                            assert!(!orth);
                        }
                    }
                }
            }
        }
    }
}
