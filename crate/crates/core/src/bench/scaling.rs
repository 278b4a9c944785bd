//! Timed runs over geometric size ladders and log-log slope fits.

use std::fmt;
use std::io::{self, Write};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hard::gen_hard_family;
use crate::ast::Regex;
use crate::automata::member_fast;
use crate::canonical::{CanonicalForm, Run, RunSeq};
use crate::letter::{l, Letter, Word};
use crate::linear::{dispatch_with, route, Algo, Answer, DispatchOptions, Route};

pub const CSV_HEADER: &str = "route,size_m,size_n,trial,seconds,verdict,seed";

/// A benchmarked route: one linear algorithm, the star reduction in front
/// of the power/dictionary algorithm, or the product baseline on the hard
/// family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BenchRoute {
    Linear(Algo),
    StarReduce,
    Baseline,
}

impl BenchRoute {
    pub fn all() -> Vec<BenchRoute> {
        let mut v: Vec<BenchRoute> = Algo::LINEAR
            .iter()
            .map(|&a| BenchRoute::Linear(a))
            .collect();
        v.push(BenchRoute::StarReduce);
        v.push(BenchRoute::Baseline);
        v
    }

    pub fn linear() -> Vec<BenchRoute> {
        BenchRoute::all()
            .into_iter()
            .filter(|r| *r != BenchRoute::Baseline)
            .collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            BenchRoute::Linear(a) => a.name(),
            BenchRoute::StarReduce => "star-reduce",
            BenchRoute::Baseline => "baseline",
        }
    }

    pub fn from_name(s: &str) -> Option<BenchRoute> {
        BenchRoute::all().into_iter().find(|r| r.name() == s)
    }

    fn expects(self, r: Route) -> bool {
        match (self, r) {
            (
                BenchRoute::Linear(a),
                Route::Linear {
                    algo,
                    star_reduced: false,
                    ..
                },
            ) => a == algo,
            (
                BenchRoute::StarReduce,
                Route::Linear {
                    star_reduced: true, ..
                },
            ) => true,
            (BenchRoute::Baseline, Route::Baseline) => true,
            _ => false,
        }
    }
}

impl fmt::Display for BenchRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One measured point.
#[derive(Clone, PartialEq, Debug)]
pub struct BenchRecord {
    pub route: BenchRoute,
    pub size_m: usize,
    pub size_n: usize,
    /// Number of timed trials behind `seconds`.
    pub trials: usize,
    /// Median seconds per run.
    pub seconds: f64,
    pub nonempty: bool,
    pub seed: u64,
}

#[derive(Clone, PartialEq, Debug)]
pub struct ScalingReport {
    pub route: BenchRoute,
    pub slope: f64,
    pub ci: (f64, f64),
    pub points: Vec<BenchRecord>,
    pub discarded: usize,
}

/// `count` sizes from `lo` to `hi`, evenly spaced on a log scale.
pub fn geometric_sizes(lo: usize, hi: usize, count: usize) -> Vec<usize> {
    assert!(count >= 2 && lo >= 1 && hi > lo);
    let (a, b) = ((lo as f64).ln(), (hi as f64).ln());
    (0..count)
        .map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp().round() as usize)
        .collect()
}

/// Least-squares slope of `ln y` on `ln x`, with a 95% interval.
pub fn fit_slope(points: &[(f64, f64)]) -> (f64, (f64, f64)) {
    let n = points.len();
    assert!(n >= 2, "need two points to fit a slope");
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n as f64;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n as f64;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    if n == 2 {
        return (slope, (slope, slope));
    }
    let ssr: f64 = logs
        .iter()
        .map(|p| (p.1 - my - slope * (p.0 - mx)).powi(2))
        .sum();
    let se = (ssr / (n - 2) as f64 / sxx).sqrt();
    const T975: [f64; 10] = [12.71, 4.30, 3.18, 2.78, 2.57, 2.45, 2.36, 2.31, 2.26, 2.23];
    let t = T975.get(n - 3).copied().unwrap_or(2.0);
    (slope, (slope - t * se, slope + t * se))
}

const SIGMA: [char; 4] = ['a', 'b', 'c', 'd'];

fn letter<R: Rng>(rng: &mut R) -> Letter {
    l(SIGMA[rng.gen_range(0..SIGMA.len())])
}

fn other_than<R: Rng>(c: Letter, rng: &mut R) -> Letter {
    loop {
        let x = letter(rng);
        if x != c {
            return x;
        }
    }
}

fn random_word<R: Rng>(len: usize, rng: &mut R) -> Word {
    (0..len).map(|_| letter(rng)).collect()
}

fn sets_regex(sets: &[Vec<Letter>]) -> Regex {
    Regex::concat(sets.iter().map(|s| Regex::letter_set(s)).collect())
}

fn dict_regex(words: &[Word]) -> Regex {
    Regex::alt(words.iter().map(|w| Regex::word(w)).collect())
}

fn runs_regex(runs: Vec<Run>) -> Regex {
    CanonicalForm::RunSeq(RunSeq::from_runs(runs))
        .to_regex()
        .expect("nonempty runs")
}

/// Runs over alternating `a`/`b` with about `n` leaves in total.
fn random_runs<R: Rng>(n: usize, rng: &mut R) -> Vec<Run> {
    let mut runs = Vec::new();
    let mut total = 0;
    let mut c = l('a');
    while total < n {
        let len = rng.gen_range(1..=3);
        runs.push(Run {
            letter: c,
            len,
            open: rng.gen_bool(0.4),
        });
        total += len;
        c = if c == l('a') { l('b') } else { l('a') };
    }
    runs
}

/// A word of the run sequence, stretching open runs a little.
fn word_of_runs<R: Rng>(runs: &[Run], rng: &mut R) -> Word {
    let mut w = Vec::new();
    for r in runs {
        let len = r.len + if r.open { rng.gen_range(0..=2) } else { 0 };
        w.extend(std::iter::repeat_n(r.letter, len));
    }
    w
}

/// Words of random length in `lens` until about `n` leaves, then `planted`.
fn padded_dict<R: Rng>(
    n: usize,
    lens: std::ops::RangeInclusive<usize>,
    planted: Word,
    rng: &mut R,
) -> Vec<Word> {
    let mut words = Vec::new();
    let mut total = planted.len();
    while total < n {
        let w = random_word(rng.gen_range(lens.clone()), rng);
        total += w.len();
        words.push(w);
    }
    words.push(planted);
    words
}

/// Builds an input pair of about `n` leaves per side that the dispatcher
/// sends down `route`. Planted pairs make every linear run scan its whole
/// input before answering.
pub fn route_instance<R: Rng>(route: BenchRoute, n: usize, rng: &mut R) -> (Regex, Regex) {
    let n = n.max(16);
    let half = n / 2;
    match route {
        BenchRoute::Baseline => {
            let h = gen_hard_family(n, rng.gen()).expect("size above the hard family minimum");
            (h.a, h.b)
        }
        BenchRoute::StarReduce => {
            let t = random_word(16, rng);
            let planted = t.repeat(rng.gen_range(2..6));
            let dict = padded_dict(n, 8..=64, planted, rng);
            (Regex::star(Regex::word(&t)), dict_regex(&dict))
        }
        BenchRoute::Linear(algo) => match algo {
            Algo::PosSetsPosSets => {
                let (mut sa, mut sb) = (Vec::with_capacity(half), Vec::with_capacity(half));
                for _ in 0..half {
                    let c = letter(rng);
                    sa.push(vec![c, other_than(c, rng)]);
                    sb.push(vec![other_than(c, rng), c]);
                }
                (sets_regex(&sa), sets_regex(&sb))
            }
            Algo::PosSetsDict => {
                let sets: Vec<Vec<Letter>> = (0..half)
                    .map(|_| {
                        let c = letter(rng);
                        vec![c, other_than(c, rng)]
                    })
                    .collect();
                let good: Word = sets.iter().map(|s| s[rng.gen_range(0..2)]).collect();
                let mut bad = good.clone();
                let last = sets[half - 1].clone();
                bad[half - 1] = SIGMA
                    .iter()
                    .map(|&c| l(c))
                    .find(|c| !last.contains(c))
                    .unwrap();
                (sets_regex(&sets), dict_regex(&[bad, good]))
            }
            Algo::PosSetsPower => {
                let period = (half / 2).max(1);
                let t = random_word(period, rng);
                let sets: Vec<Vec<Letter>> = (0..2 * period)
                    .map(|i| {
                        let c = t[i % period];
                        vec![other_than(c, rng), c]
                    })
                    .collect();
                (sets_regex(&sets), Regex::plus(Regex::word(&t)))
            }
            Algo::RunSeqRunSeq => {
                let ra = random_runs(n, rng);
                let rb: Vec<Run> = ra
                    .iter()
                    .map(|r| {
                        let open = rng.gen_bool(0.4);
                        let len = match (r.open, open) {
                            (true, true) => rng.gen_range(1..=3),
                            (true, false) => r.len + rng.gen_range(0..=2),
                            (false, true) => rng.gen_range(1..=r.len),
                            (false, false) => r.len,
                        };
                        Run {
                            letter: r.letter,
                            len,
                            open,
                        }
                    })
                    .collect();
                (runs_regex(ra), runs_regex(rb))
            }
            Algo::RunSeqDict => {
                let runs = random_runs(half, rng);
                let good = word_of_runs(&runs, rng);
                let mut bad = good.clone();
                let last = bad.len() - 1;
                bad[last] = l('c');
                (runs_regex(runs), dict_regex(&[bad, good]))
            }
            Algo::RunSeqPower => {
                let t = random_word((n / 10).max(2), rng);
                let word = t.repeat(10);
                let runs: Vec<Run> = RunSeq::of_word(&word)
                    .runs
                    .into_iter()
                    .map(|r| Run {
                        open: rng.gen_bool(0.3),
                        ..r
                    })
                    .collect();
                (runs_regex(runs), Regex::plus(Regex::word(&t)))
            }
            Algo::DictDict => {
                let planted = random_word(20, rng);
                let mut da = padded_dict(n, 16..=24, planted.clone(), rng);
                let mut db = padded_dict(n, 16..=24, planted, rng);
                da.shuffle(rng);
                db.shuffle(rng);
                (dict_regex(&da), dict_regex(&db))
            }
            Algo::PowerDict => {
                let t = random_word(16, rng);
                let planted = t.repeat(rng.gen_range(2..6));
                let dict = padded_dict(n, 8..=64, planted, rng);
                (Regex::plus(Regex::word(&t)), dict_regex(&dict))
            }
            Algo::PowerPower => {
                let d = loop {
                    let d = random_word((n / 5).max(2), rng);
                    if super::primitive_root_len(&d) == d.len() {
                        break d;
                    }
                };
                (
                    Regex::plus(Regex::word(&d.repeat(2))),
                    Regex::plus(Regex::word(&d.repeat(3))),
                )
            }
            Algo::StarEpsilon => (
                Regex::star(Regex::word(&random_word(n, rng))),
                Regex::star(Regex::word(&random_word(n, rng))),
            ),
            Algo::Closure => {
                let sets: Vec<Vec<Letter>> = (0..half)
                    .map(|_| {
                        let c = l(SIGMA[rng.gen_range(0..3)]);
                        vec![l('d'), c]
                    })
                    .collect();
                let closure = Regex::plus(Regex::letter_set(&[l('a'), l('b'), l('c')]));
                (closure, sets_regex(&sets))
            }
            Algo::RunAlt => {
                let sets: Vec<Vec<Letter>> = (0..half)
                    .map(|_| vec![other_than(l('a'), rng), l('a')])
                    .collect();
                let alt = Regex::alt(vec![
                    Regex::plus(Regex::Leaf(l('a'))),
                    Regex::Leaf(l('b')),
                    Regex::plus(Regex::Leaf(l('c'))),
                ]);
                (alt, sets_regex(&sets))
            }
            Algo::Baseline => unreachable!("the baseline is benchmarked on the hard family"),
        },
    }
}

fn check_witness(ans: &Answer, a: &Regex, b: &Regex) {
    if let Some(w) = ans.witness() {
        assert!(
            member_fast(w, a) && member_fast(w, b),
            "unsound witness from {}",
            ans.algo
        );
    }
}

/// Bytes written between trials to push the inputs out of every cache
/// level, so that small and large inputs both start cold.
const EVICT_BYTES: usize = 256 << 20;

fn evict(buf: &mut [u64], round: u64) {
    for (i, x) in buf.iter_mut().enumerate().step_by(8) {
        *x = x.wrapping_add(round ^ i as u64);
    }
    std::hint::black_box(&buf[buf.len() - 1]);
}

fn timed_run(a: &Regex, b: &Regex, opts: &DispatchOptions, buf: &mut [u64], round: u64) -> f64 {
    evict(buf, round);
    let start = Instant::now();
    std::hint::black_box(dispatch_with(a, b, opts).expect("budget suffices"));
    start.elapsed().as_secs_f64()
}

/// Times `route` at every size and fits the log-log slope of median time
/// against total input size. Each size gets one warm-up run, then the
/// cold-cache trials go round-robin over the sizes so that a slow spell
/// on the machine hits every size alike.
pub fn run_scaling(
    route_id: BenchRoute,
    sizes: &[usize],
    trials: usize,
    seed: u64,
) -> ScalingReport {
    let opts = DispatchOptions::default();
    let trials = trials.max(1);
    let mut buf = vec![0u64; EVICT_BYTES / 8];
    let mut cases = Vec::with_capacity(sizes.len());
    for (i, &n) in sizes.iter().enumerate() {
        let point_seed = seed.wrapping_add(i as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(point_seed);
        let (a, b) = route_instance(route_id, n, &mut rng);
        let taken = route(&a, &b).route;
        assert!(
            route_id.expects(taken),
            "{route_id} instance was routed to {taken}"
        );
        let ans = dispatch_with(&a, &b, &opts).expect("budget suffices for benchmark sizes");
        check_witness(&ans, &a, &b);
        cases.push((n, point_seed, a, b, !ans.is_empty()));
    }
    let mut samples = vec![Vec::with_capacity(trials); cases.len()];
    for t in 0..trials {
        for (k, (_, _, a, b, _)) in cases.iter().enumerate() {
            samples[k].push(timed_run(
                a,
                b,
                &opts,
                &mut buf,
                (t * cases.len() + k) as u64,
            ));
        }
    }
    let mut points = Vec::new();
    let mut discarded = 0;
    for ((n, point_seed, a, b, nonempty), mut times) in cases.into_iter().zip(samples) {
        times.sort_by(f64::total_cmp);
        let seconds = times[times.len() / 2];
        if seconds < 1e-6 {
            eprintln!("warning: {route_id} at size {n} ran below clock resolution; point dropped");
            discarded += 1;
            continue;
        }
        points.push(BenchRecord {
            route: route_id,
            size_m: a.size(),
            size_n: b.size(),
            trials,
            seconds,
            nonempty,
            seed: point_seed,
        });
    }
    let xy: Vec<(f64, f64)> = points
        .iter()
        .map(|p| ((p.size_m + p.size_n) as f64, p.seconds))
        .collect();
    let (slope, ci) = if xy.len() >= 2 {
        fit_slope(&xy)
    } else {
        (f64::NAN, (f64::NAN, f64::NAN))
    };
    ScalingReport {
        route: route_id,
        slope,
        ci,
        points,
        discarded,
    }
}

/// Writes the header and one row per measured point.
pub fn write_csv<W: Write>(out: &mut W, reports: &[ScalingReport]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in reports {
        for p in &r.points {
            writeln!(
                out,
                "{},{},{},{},{:.9},{},{}",
                p.route,
                p.size_m,
                p.size_n,
                p.trials,
                p.seconds,
                if p.nonempty { "NONEMPTY" } else { "EMPTY" },
                p.seed
            )?;
        }
    }
    Ok(())
}
