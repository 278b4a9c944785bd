//! The gadget reduction as a family of hard `∘+` / `∘|` pairs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ast::Regex;
use crate::ov::{build_reduction, normalize_instance, Normalized, OvInstance};

/// Dimension before normalization; normalization brings it to 9.
pub const HARD_DIMENSION: usize = 5;

#[derive(Clone, Debug)]
pub struct HardInstance {
    pub a: Regex,
    pub b: Regex,
    pub inst: OvInstance,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("hard family needs size at least {min}, got {n}")]
pub struct TooSmall {
    pub n: usize,
    pub min: usize,
}

/// `t` rows on each side, all sharing a 1 in coordinate 0, so no pair is
/// orthogonal.
fn instance(t: usize, rng: &mut ChaCha8Rng) -> OvInstance {
    let row = |rng: &mut ChaCha8Rng| -> Vec<bool> {
        loop {
            let mut r: Vec<bool> = (0..HARD_DIMENSION).map(|_| rng.gen_bool(0.5)).collect();
            r[0] = true;
            if !r.iter().all(|&x| x) {
                return r;
            }
        }
    };
    let a = (0..t).map(|_| row(rng)).collect();
    let b = (0..t).map(|_| row(rng)).collect();
    OvInstance::new(a, b)
}

fn build(t: usize, seed: u64) -> HardInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (t as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let inst = instance(t, &mut rng);
    let Normalized::Instance(norm) = normalize_instance(&inst).expect("normalization holds") else {
        unreachable!("rows are neither zero nor all ones")
    };
    let red = build_reduction(&norm).expect("normalized instance satisfies the assumptions");
    HardInstance {
        a: red.a,
        b: red.b,
        inst,
    }
}

/// A no-pair reduction instance whose `A` side has about `n` leaves.
pub fn gen_hard_family(n: usize, seed: u64) -> Result<HardInstance, TooSmall> {
    let smallest = build(1, seed);
    if n < smallest.a.size() {
        return Err(TooSmall {
            n,
            min: smallest.a.size(),
        });
    }
    let mut prev = smallest;
    for t in 2.. {
        let next = build(t, seed);
        if next.a.size() >= n {
            return Ok(if next.a.size() - n <= n - prev.a.size() {
                next
            } else {
                prev
            });
        }
        prev = next;
    }
    unreachable!()
}
