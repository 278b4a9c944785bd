use std::fmt;

use rand::Rng;
use thiserror::Error;

/// Sets `A` (rows `α_i`) and `B` (rows `β_j`) of `d`-bit vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OvInstance {
    pub d: usize,
    pub a: Vec<Vec<bool>>,
    pub b: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OvParseError {
    #[error("missing header line `M N d`")]
    MissingHeader,
    #[error("line {line}: header must be three positive integers `M N d`")]
    BadHeader { line: usize },
    #[error("line {line}: expected a row of {expected} bits, found {found:?}")]
    BadRow {
        line: usize,
        expected: usize,
        found: String,
    },
    #[error("expected {expected} rows after the header, found {found}")]
    RowCount { expected: usize, found: usize },
}

impl OvInstance {
    pub fn new(a: Vec<Vec<bool>>, b: Vec<Vec<bool>>) -> OvInstance {
        let d = a.first().or(b.first()).map_or(0, Vec::len);
        assert!(
            a.iter().chain(&b).all(|r| r.len() == d),
            "rows of unequal length"
        );
        OvInstance { d, a, b }
    }

    /// Builds from `0`/`1` strings.
    pub fn from_bits(a: &[&str], b: &[&str]) -> OvInstance {
        let row = |s: &&str| s.chars().map(|c| c == '1').collect();
        OvInstance::new(a.iter().map(row).collect(), b.iter().map(row).collect())
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    /// Parses the text format: header `M N d`, then `M` rows for `A` and
    /// `N` rows for `B`. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<OvInstance, OvParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(OvParseError::MissingHeader)?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| OvParseError::BadHeader { line: hline })?;
        let &[m, n, d] = nums.as_slice() else {
            return Err(OvParseError::BadHeader { line: hline });
        };
        let total = m
            .checked_add(n)
            .ok_or(OvParseError::BadHeader { line: hline })?;
        if m == 0 || n == 0 || d == 0 {
            return Err(OvParseError::BadHeader { line: hline });
        }
        let mut rows = Vec::new();
        for (line, text) in lines {
            if text.len() != d || !text.bytes().all(|c| c == b'0' || c == b'1') {
                return Err(OvParseError::BadRow {
                    line,
                    expected: d,
                    found: text.to_string(),
                });
            }
            rows.push(text.bytes().map(|c| c == b'1').collect::<Vec<bool>>());
        }
        if rows.len() != total {
            return Err(OvParseError::RowCount {
                expected: total,
                found: rows.len(),
            });
        }
        let b = rows.split_off(m);
        Ok(OvInstance { d, a: rows, b })
    }
}

fn write_row(f: &mut fmt::Formatter<'_>, row: &[bool]) -> fmt::Result {
    for &bit in row {
        f.write_str(if bit { "1" } else { "0" })?;
    }
    writeln!(f)
}

impl fmt::Display for OvInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.m(), self.n(), self.d)?;
        for row in self.a.iter().chain(&self.b) {
            write_row(f, row)?;
        }
        Ok(())
    }
}

pub fn orthogonal(alpha: &[bool], beta: &[bool]) -> bool {
    alpha.iter().zip(beta).all(|(&x, &y)| !(x && y))
}

/// Lexicographically first orthogonal pair `(i, j)`, 0-based.
pub fn ov_bruteforce(inst: &OvInstance) -> Option<(usize, usize)> {
    for (i, alpha) in inst.a.iter().enumerate() {
        for (j, beta) in inst.b.iter().enumerate() {
            if orthogonal(alpha, beta) {
                return Some((i, j));
            }
        }
    }
    None
}

/// How [`random_instance`] controls the answer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Plant {
    /// Make one random pair orthogonal.
    Pair,
    /// Resample until brute force finds no pair, falling back to a shared
    /// all-ones coordinate after a bounded number of attempts.
    NoPair,
    /// Plain random bits.
    Free,
}

pub fn random_instance<R: Rng>(
    m: usize,
    n: usize,
    d: usize,
    plant: Plant,
    rng: &mut R,
) -> OvInstance {
    let row = |rng: &mut R, p: f64| -> Vec<bool> { (0..d).map(|_| rng.gen_bool(p)).collect() };
    match plant {
        Plant::Free => OvInstance::new(
            (0..m).map(|_| row(rng, 0.5)).collect(),
            (0..n).map(|_| row(rng, 0.5)).collect(),
        ),
        Plant::Pair => {
            let mut inst = OvInstance::new(
                (0..m).map(|_| row(rng, 0.5)).collect(),
                (0..n).map(|_| row(rng, 0.5)).collect(),
            );
            let (i, j) = (rng.gen_range(0..m), rng.gen_range(0..n));
            let alpha = inst.a[i].clone();
            for (bit, &a) in inst.b[j].iter_mut().zip(&alpha) {
                if a {
                    *bit = false;
                }
            }
            inst
        }
        Plant::NoPair => {
            for _ in 0..1000 {
                let inst = OvInstance::new(
                    (0..m).map(|_| row(rng, 0.65)).collect(),
                    (0..n).map(|_| row(rng, 0.65)).collect(),
                );
                if ov_bruteforce(&inst).is_none() {
                    return inst;
                }
            }
            let c = rng.gen_range(0..d);
            let mut inst = OvInstance::new(
                (0..m).map(|_| row(rng, 0.5)).collect(),
                (0..n).map(|_| row(rng, 0.5)).collect(),
            );
            for r in inst.a.iter_mut().chain(inst.b.iter_mut()) {
                r[c] = true;
            }
            inst
        }
    }
}
