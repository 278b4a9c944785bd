//! Command-line interface. Output is one `key=value` line per result.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::ast::Regex;
use crate::automata::{member, product_nonempty, ProductError, DEFAULT_PAIR_BUDGET};
use crate::bench::{geometric_sizes, pair_shapes, random_pair, run_scaling, write_csv, BenchRoute};
use crate::canonical::coercible_kinds;
use crate::letter::{parse_word, render_word};
use crate::linear::{dispatch_with, route, Answer, DispatchOptions};
use crate::ov::{
    build_reduction, prepare_instance, random_instance, verify_reduction, AssumptionViolation,
    Normalized, OvInstance, Plant, VerifyStatus,
};
use crate::parse::parse;
use crate::types::classify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_ASSUMPTION: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "rexint",
    version,
    about = "Intersection testing for homogeneous regular expressions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Skip the linear algorithms and use the product automaton.
    #[arg(long, global = true)]
    pub force_baseline: bool,
    /// Check the witness against both inputs and report it.
    #[arg(long, global = true)]
    pub witness: bool,
    /// Exit 0 for NONEMPTY/true and 1 for EMPTY/false.
    #[arg(long, global = true)]
    pub exitcode: bool,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Maximum number of product state pairs.
    #[arg(long, global = true, default_value_t = DEFAULT_PAIR_BUDGET)]
    pub budget: usize,
    /// Write benchmark measurements to this CSV file.
    #[arg(long, global = true)]
    pub csv: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the type of an expression and the types it can be read as.
    Classify { file: PathBuf },
    /// Decide whether two expressions share a word.
    Intersect { a: PathBuf, b: PathBuf },
    /// Test a word against an expression.
    Member { word: String, file: PathBuf },
    /// Build the two expressions of the Orthogonal Vectors reduction.
    Reduce {
        ov: PathBuf,
        out_a: PathBuf,
        out_b: PathBuf,
    },
    /// Check the reduction against brute force on instance files.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Print a random Orthogonal Vectors instance.
    Genov {
        m: usize,
        n: usize,
        d: usize,
        #[arg(long, value_enum, num_args = 0..=1, default_value_t = PlantArg::Free, default_missing_value = "pair")]
        plant: PlantArg,
    },
    /// Measure runtime scaling per route and fit log-log slopes.
    Bench {
        /// Comma-separated route names; all routes when omitted.
        #[arg(long, value_delimiter = ',')]
        routes: Vec<String>,
        /// Comma-separated sizes; a default ladder per route when omitted.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
    /// Compare the dispatcher with the product automaton on random pairs.
    Selftest {
        #[arg(long, default_value_t = 10_000)]
        count: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum PlantArg {
    Pair,
    None,
    Free,
}

struct Failure(i32, String);

type CmdResult = Result<i32, Failure>;

fn error(msg: impl Into<String>) -> Failure {
    Failure(EXIT_ERROR, msg.into())
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Classify { file } => cmd_classify(file, out),
        Command::Intersect { a, b } => cmd_intersect(cli, a, b, out),
        Command::Member { word, file } => cmd_member(cli, word, file, out),
        Command::Reduce { ov, out_a, out_b } => cmd_reduce(ov, out_a, out_b, out),
        Command::Verify { files } => cmd_verify(cli, files, out),
        Command::Genov { m, n, d, plant } => cmd_genov(cli, *m, *n, *d, *plant, out),
        Command::Bench {
            routes,
            sizes,
            trials,
        } => cmd_bench(cli, routes, sizes, *trials, out),
        Command::Selftest { count } => cmd_selftest(cli, *count, out),
    }
}

fn emit(out: &mut dyn Write, line: impl AsRef<str>) -> Result<(), Failure> {
    writeln!(out, "{}", line.as_ref()).map_err(|e| error(format!("cannot write output: {e}")))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| error(format!("cannot read {}: {e}", path.display())))
}

/// 1-based line and column of a character offset.
fn locate(text: &str, pos: usize) -> (usize, usize) {
    let (mut line, mut col) = (1, 1);
    for c in text.chars().take(pos) {
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    (line, col)
}

fn read_regex(path: &Path) -> Result<Regex, Failure> {
    let text = read(path)?;
    parse(&text).map_err(|e| {
        let (line, col) = locate(&text, e.position());
        error(format!("{}:{line}:{col}: {e}", path.display()))
    })
}

fn read_ov(path: &Path) -> Result<OvInstance, Failure> {
    OvInstance::parse(&read(path)?).map_err(|e| error(format!("{}: {e}", path.display())))
}

fn budget_failure(e: ProductError) -> Failure {
    Failure(EXIT_BUDGET, e.to_string())
}

fn assumption_failure(e: AssumptionViolation) -> Failure {
    Failure(EXIT_ASSUMPTION, format!("reduction assumption failed: {e}"))
}

fn cmd_classify(file: &Path, out: &mut dyn Write) -> CmdResult {
    let r = read_regex(file)?;
    emit(out, classify(&r).to_string())?;
    let kinds: Vec<String> = coercible_kinds(&r).iter().map(|k| k.symbol()).collect();
    let list = if kinds.is_empty() {
        "none".to_string()
    } else {
        kinds.join(",")
    };
    emit(out, format!("coercions={list}"))?;
    Ok(EXIT_OK)
}

fn cmd_intersect(cli: &Cli, a_path: &Path, b_path: &Path, out: &mut dyn Write) -> CmdResult {
    let (a, b) = (read_regex(a_path)?, read_regex(b_path)?);
    let opts = DispatchOptions {
        force_baseline: cli.force_baseline,
        budget: cli.budget,
    };
    let taken = if cli.force_baseline {
        "baseline".to_string()
    } else {
        route(&a, &b).route.to_string()
    };
    let start = Instant::now();
    let ans: Answer = dispatch_with(&a, &b, &opts).map_err(budget_failure)?;
    let seconds = start.elapsed().as_secs_f64();
    let mut line = match ans.witness() {
        Some(w) => format!("NONEMPTY witness={}", render_word(w)),
        None => "EMPTY".to_string(),
    };
    line.push_str(&format!(
        " algo={} route={taken} size_a={} size_b={} seconds={seconds:.6}",
        ans.algo,
        a.size(),
        b.size()
    ));
    if cli.witness {
        if let Some(w) = ans.witness() {
            line.push_str(&format!(
                " witness_valid={}",
                member(w, &a) && member(w, &b)
            ));
        }
    }
    emit(out, line)?;
    Ok(if cli.exitcode && ans.is_empty() {
        EXIT_NO
    } else {
        EXIT_OK
    })
}

fn cmd_member(cli: &Cli, word: &str, file: &Path, out: &mut dyn Write) -> CmdResult {
    let r = read_regex(file)?;
    let w = parse_word(word).map_err(|e| error(format!("word: {e}")))?;
    let yes = member(&w, &r);
    emit(out, format!("member={yes}"))?;
    Ok(if cli.exitcode && !yes {
        EXIT_NO
    } else {
        EXIT_OK
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| error(format!("cannot write {}: {e}", path.display())))
}

fn cmd_reduce(ov: &Path, out_a: &Path, out_b: &Path, out: &mut dyn Write) -> CmdResult {
    let inst = read_ov(ov)?;
    let norm = match prepare_instance(&inst).map_err(assumption_failure)? {
        Normalized::Instance(n) => n,
        Normalized::Trivial { orthogonal, pair } => {
            // decided outright: emit a tiny pair with the same answer
            write_file(out_a, "x\n")?;
            write_file(out_b, if orthogonal { "x\n" } else { "y\n" })?;
            let pair = pair.map_or("none".to_string(), |(i, j)| format!("{},{}", i + 1, j + 1));
            emit(
                out,
                format!("trivial=true orthogonal={orthogonal} pair={pair}"),
            )?;
            return Ok(EXIT_OK);
        }
    };
    let normalized = norm.rewritten();
    let red = build_reduction(&norm).map_err(assumption_failure)?;
    write_file(out_a, &format!("{}\n", red.a))?;
    write_file(out_b, &format!("{}\n", red.b))?;
    let au = &red.audit;
    emit(
        out,
        format!(
            "m={} n={} d={} normalized={normalized} size_a={} size_b={} a_dollars={} a_perp_dollars={} b_perp_dollars={}..{} b_dollars={}..{}",
            au.m, au.n, au.d, au.size_a, au.size_b, au.a_dollars, au.a_perp_dollars, au.b_perp_dollars.0,
            au.b_perp_dollars.1, au.b_dollars.0, au.b_dollars.1
        ),
    )?;
    for (i, g) in au.a_gadgets.iter().enumerate() {
        emit(out, format!("gadget_a{}={g}", i + 1))?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(cli: &Cli, files: &[PathBuf], out: &mut dyn Write) -> CmdResult {
    let instances: Vec<OvInstance> = files.iter().map(|f| read_ov(f)).collect::<Result<_, _>>()?;
    let reports: Vec<_> = instances
        .par_iter()
        .map(|inst| verify_reduction(inst, cli.budget))
        .collect();
    let mut code = EXIT_OK;
    for (file, rep) in files.iter().zip(reports) {
        let rep = match rep {
            Ok(r) => r,
            Err(e) => {
                emit(out, format!("file={} status=ERROR", file.display()))?;
                return Err(assumption_failure(e));
            }
        };
        let pair = rep
            .pair
            .map_or("none".to_string(), |(i, j)| format!("{},{}", i + 1, j + 1));
        let nonempty = rep
            .nonempty
            .map_or("unknown".to_string(), |b| b.to_string());
        let mut line = format!(
            "file={} status={} nonempty={nonempty} pair={pair} trivial={} size_a={} size_b={}",
            file.display(),
            rep.status,
            rep.trivial,
            rep.size_a,
            rep.size_b
        );
        if let Some(w) = &rep.witness {
            line.push_str(&format!(" witness_len={}", w.len()));
        }
        emit(out, line)?;
        code = code.max(match rep.status {
            VerifyStatus::Pass => EXIT_OK,
            VerifyStatus::Fail => EXIT_NO,
            VerifyStatus::Inconclusive => EXIT_BUDGET,
        });
    }
    Ok(code)
}

fn cmd_genov(
    cli: &Cli,
    m: usize,
    n: usize,
    d: usize,
    plant: PlantArg,
    out: &mut dyn Write,
) -> CmdResult {
    if m == 0 || n == 0 || d == 0 {
        return Err(error("M, N and d must be positive"));
    }
    let plant = match plant {
        PlantArg::Pair => Plant::Pair,
        PlantArg::None => Plant::NoPair,
        PlantArg::Free => Plant::Free,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let inst = random_instance(m, n, d, plant, &mut rng);
    write!(out, "{inst}").map_err(|e| error(format!("cannot write output: {e}")))?;
    Ok(EXIT_OK)
}

fn cmd_bench(
    cli: &Cli,
    routes: &[String],
    sizes: &[usize],
    trials: usize,
    out: &mut dyn Write,
) -> CmdResult {
    let chosen: Vec<BenchRoute> = if routes.is_empty() {
        BenchRoute::all()
    } else {
        routes
            .iter()
            .map(|r| BenchRoute::from_name(r).ok_or_else(|| error(format!("unknown route {r}"))))
            .collect::<Result<_, _>>()?
    };
    if trials == 0 {
        return Err(error("need at least one trial"));
    }
    let mut reports = Vec::new();
    for r in chosen {
        let ladder = if !sizes.is_empty() {
            sizes.to_vec()
        } else if r == BenchRoute::Baseline {
            geometric_sizes(400, 2000, 5)
        } else {
            geometric_sizes(10_000, 1_000_000, 6)
        };
        let rep = run_scaling(r, &ladder, trials, cli.seed);
        emit(
            out,
            format!(
                "route={} slope={:.3} ci={:.3}..{:.3} points={} discarded={}",
                r,
                rep.slope,
                rep.ci.0,
                rep.ci.1,
                rep.points.len(),
                rep.discarded
            ),
        )?;
        reports.push(rep);
    }
    if let Some(path) = &cli.csv {
        let mut f = fs::File::create(path)
            .map_err(|e| error(format!("cannot create {}: {e}", path.display())))?;
        write_csv(&mut f, &reports)
            .map_err(|e| error(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(EXIT_OK)
}

/// Seed of pair `index` in a selftest run.
pub fn selftest_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ index as u64
}

fn cmd_selftest(cli: &Cli, count: usize, out: &mut dyn Write) -> CmdResult {
    let shapes = pair_shapes();
    let s = shapes.len();
    let opts = DispatchOptions {
        force_baseline: false,
        budget: cli.budget,
    };
    let mismatches: Vec<String> = (0..count)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(selftest_seed(cli.seed, i));
            let (a, b) = random_pair(&shapes[i % s], &shapes[(i / s) % s], 40, 4, &mut rng);
            let fast = dispatch_with(&a, &b, &opts);
            let slow = product_nonempty(&a, &b, cli.budget);
            let describe = |r: &Result<Answer, ProductError>| match r {
                Ok(ans) => match ans.witness() {
                    Some(w) => format!("NONEMPTY({})", render_word(w)),
                    None => "EMPTY".to_string(),
                },
                Err(e) => format!("ERROR({e})"),
            };
            let agree = match (&fast, &slow) {
                (Ok(x), Ok(y)) => {
                    x.is_empty() == y.is_empty()
                        && x.witness().is_none_or(|w| member(w, &a) && member(w, &b))
                }
                _ => false,
            };
            (!agree).then(|| {
                format!(
                    "mismatch seed={} index={i} a={a} b={b} dispatch={} baseline={}",
                    cli.seed,
                    describe(&fast),
                    describe(&slow)
                )
            })
        })
        .collect();
    for m in &mismatches {
        emit(out, m)?;
    }
    emit(
        out,
        format!(
            "{}/{count} agree seed={}",
            count - mismatches.len(),
            cli.seed
        ),
    )?;
    Ok(if mismatches.is_empty() {
        EXIT_OK
    } else {
        EXIT_NO
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_and_column() {
        assert_eq!(locate("ab\ncd", 0), (1, 1));
        assert_eq!(locate("ab\ncd", 4), (2, 2));
    }

    #[test]
    fn help_exits_zero() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(["rexint", "--help"], &mut o, &mut e), EXIT_OK);
        assert!(String::from_utf8(o).unwrap().contains("selftest"));
    }

    #[test]
    fn unknown_command_is_an_error() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(["rexint", "frobnicate"], &mut o, &mut e), EXIT_ERROR);
    }
}
