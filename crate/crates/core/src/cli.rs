//! The `stablesq` command line.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on invalid
//! input, regime violations, or instances the configured limits cannot serve.

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gram::{gram_csv, gram_table};
use crate::io::{enumeration_json, enumeration_text, read_subspace, SubspaceInput};
use crate::macaulay::{gotzmann_persists, GotzmannVerdict, HilbertFunction};
use crate::monomial::MonomialOrder;
use crate::qlinalg::{random_form, random_linear_form, seeded_rng, RationalSubspace, DEFAULT_COEFF_BOUND};
use crate::search::{compute_m0_monomial_with, compute_m_with, verify_table, SearchConfig, SearchResult};
use crate::stable::{enumerate_strongly_stable_with_budget, stable_codim_square};
use crate::subspace::MonomialSubspace;
use crate::verify::{run_all, run_suite, SuiteReport, VerifyConfig};

/// An inclusive range given as `a..b`, `a..=b` or a single value `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span<T>(pub T, pub T);

impl<T: FromStr + PartialOrd + Copy> FromStr for Span<T> {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let one = |t: &str| t.trim().parse::<T>().map_err(|_| format!("not a non-negative integer: {t:?}"));
        let (a, b) = match s.split_once("..") {
            Some((a, b)) => (one(a)?, one(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = one(s)?;
                (v, v)
            }
        };
        if a > b {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Span(a, b))
    }
}

impl<T: Copy> Span<T> {
    fn range(self) -> RangeInclusive<T> {
        self.0..=self.1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "stablesq", version, about = "Squares of subspaces of forms: m(n,d,k) tables, searches and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Candidate budget per search (default: $STABLESQ_BUDGET or the built-in cap).
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Worker threads for enumeration and search.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of m(n,d,k) over ranges of n, d, k.
    Table {
        #[arg(long, default_value = "3..6")]
        n: Span<usize>,
        #[arg(long, default_value = "2..9")]
        d: Span<u32>,
        #[arg(long, default_value = "1..9")]
        k: Span<u64>,
        /// Compare every cell with the published table; exit 1 on any difference.
        #[arg(long)]
        diff_paper: bool,
    },
    /// m(n,d,k): the largest codim U^2 over strongly stable U of codimension k.
    M {
        #[command(flatten)]
        grid: Grid,
        #[arg(long)]
        witnesses: bool,
    },
    /// Lower bound on m0 from base-point-free monomial subspaces.
    M0 {
        #[command(flatten)]
        grid: Grid,
        #[arg(long)]
        witnesses: bool,
    },
    /// All strongly stable subspaces of A(n)_d of codimension k.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: u64,
    },
    /// codim U^2 for a subspace read from a file.
    Square {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Hilbert function of the ideal generated by a subspace read from a file.
    Hilbert {
        #[command(flatten)]
        input: InputArgs,
        /// Largest degree reported (default 2d + 2).
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Singular and non-singular Gram face dimensions.
    Gram {
        #[arg(long, default_value = "3..6")]
        n: Span<usize>,
        #[arg(long, default_value = "2..6")]
        d: Span<u32>,
        #[arg(long, default_value = "1..5")]
        k: Span<u64>,
    },
    /// Run verification suites.
    Check {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        random: RandomArgs,
    },
    /// Randomized experiment: a form that is not a d-th power of a linear form
    /// stays so on a generic hyperplane (one-dimensional W only).
    Conjecture {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[command(flatten)]
        random: RandomArgs,
    },
}

#[derive(Args, Debug)]
struct Grid {
    #[arg(long)]
    n: Span<usize>,
    #[arg(long)]
    d: Span<u32>,
    #[arg(long)]
    k: Span<u64>,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Complement JSON, matrix JSON, or `n d codim` text.
    #[arg(long)]
    input: PathBuf,
    /// Order used for initial subspaces of non-monomial input.
    #[arg(long, default_value = "lex")]
    order: String,
}

#[derive(Args, Debug)]
struct RandomArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    trials: usize,
}

/// Parses `argv` (including the program name), runs the command and writes
/// its output to stdout. Returns the exit status.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    run_with(argv, &mut out)
}

pub fn run_with<I, S>(argv: I, out: &mut impl Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let pool = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(p) => Some(p),
            Err(e) => {
                eprintln!("error: cannot start {t} threads: {e}");
                return 2;
            }
        },
        None => None,
    };
    let mut buf = Vec::new();
    let res = match &pool {
        Some(p) => p.install(|| dispatch(&cli, &mut buf)),
        None => dispatch(&cli, &mut buf),
    };
    let _ = out.write_all(&buf);
    let _ = out.flush();
    match res {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn search_config(cli: &Cli) -> SearchConfig {
    let mut cfg = SearchConfig::from_env();
    if let Some(b) = cli.budget {
        cfg.budget = b;
    }
    cfg
}

fn json(out: &mut Vec<u8>, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    out.push(b'\n');
    Ok(())
}

/// Writes the command's output; `Ok(false)` means a verification failed.
fn dispatch(cli: &Cli, out: &mut Vec<u8>) -> Result<bool> {
    let cfg = search_config(cli);
    match &cli.command {
        Command::Table { n, d, k, diff_paper } => {
            let report = verify_table(n.range(), d.range(), k.range(), &cfg)?;
            match cli.format {
                Format::Text => {
                    out.extend_from_slice(report.to_text().as_bytes());
                    if *diff_paper {
                        out.extend_from_slice(report.diff_report().as_bytes());
                    }
                }
                Format::Csv => out.extend_from_slice(report.to_csv().as_bytes()),
                Format::Json => json(out, &report)?,
            }
            Ok(!*diff_paper || report.all_match())
        }
        Command::M { grid, witnesses } => {
            let results = grid_search(grid, |n, d, k| compute_m_with(n, d, k, &cfg))?;
            write_results(cli.format, out, results, *witnesses, "m")?;
            Ok(true)
        }
        Command::M0 { grid, witnesses } => {
            let results = grid_search(grid, |n, d, k| compute_m0_monomial_with(n, d, k, &cfg))?;
            write_results(cli.format, out, results, *witnesses, "m0")?;
            Ok(true)
        }
        Command::Enumerate { n, d, k } => {
            let e = enumerate_strongly_stable_with_budget(*n, *d, *k, cfg.budget)?;
            match cli.format {
                Format::Json => {
                    out.extend_from_slice(enumeration_json(&e)?.as_bytes());
                    out.push(b'\n');
                }
                Format::Text => out.extend_from_slice(enumeration_text(&e).as_bytes()),
                Format::Csv => {
                    out.extend_from_slice(b"index,codim_square,complement\n");
                    for (i, u) in e.subspaces.iter().enumerate() {
                        let comp: Vec<String> = u.complement().iter().map(|m| m.to_string()).collect();
                        writeln_vec(out, format!("{i},{},{}", stable_codim_square(u), comp.join(" ")));
                    }
                }
            }
            Ok(true)
        }
        Command::Square { input } => {
            let report = square_report(input)?;
            match cli.format {
                Format::Json => json(out, &report)?,
                Format::Csv => {
                    writeln_vec(out, "n,d,dim,codim,dim_square,codim_square".into());
                    writeln_vec(
                        out,
                        format!(
                            "{},{},{},{},{},{}",
                            report.n, report.d, report.dim, report.codim, report.dim_square, report.codim_square
                        ),
                    );
                }
                Format::Text => {
                    writeln_vec(out, format!("U in A({})_{}: dim {}, codim {}", report.n, report.d, report.dim, report.codim));
                    writeln_vec(out, format!("U^2: dim {}, codim {}", report.dim_square, report.codim_square));
                    if let Some(c) = report.initial_codim_square {
                        writeln_vec(out, format!("in(U)^2 under {}: codim {c}", report.order));
                    }
                }
            }
            Ok(true)
        }
        Command::Hilbert { input, max_degree } => {
            let report = hilbert_report(input, *max_degree)?;
            match cli.format {
                Format::Json => json(out, &report)?,
                Format::Csv => {
                    writeln_vec(out, "degree,h".into());
                    for (i, h) in report.hilbert_function.values.iter().enumerate() {
                        writeln_vec(out, format!("{i},{h}"));
                    }
                }
                Format::Text => {
                    let hs: Vec<String> = report.hilbert_function.values.iter().map(u64::to_string).collect();
                    writeln_vec(out, format!("HF: ({})", hs.join(", ")));
                    match report.macaulay_violation {
                        Some(i) => writeln_vec(out, format!("Macaulay bound violated at degree {i}")),
                        None => writeln_vec(out, "Macaulay bound holds".into()),
                    }
                    writeln_vec(out, format!("Gotzmann at degree {}: {:?}", report.d, report.gotzmann));
                }
            }
            Ok(report.macaulay_violation.is_none() && report.gotzmann.is_consistent())
        }
        Command::Gram { n, d, k } => {
            let rows = gram_table(n.range(), d.range(), k.range(), &cfg)?;
            match cli.format {
                Format::Json => json(out, &rows)?,
                _ => out.extend_from_slice(gram_csv(&rows).as_bytes()),
            }
            Ok(true)
        }
        Command::Check { suite, random } => {
            let vcfg = VerifyConfig { search: cfg, seed: random.seed, trials: random.trials };
            let reports: Vec<SuiteReport> =
                if suite == "all" { run_all(&vcfg) } else { vec![run_suite(suite, &vcfg)?] };
            match cli.format {
                Format::Json => json(out, &reports)?,
                Format::Csv => {
                    writeln_vec(out, "suite,passed,checks,failures,seed,resampled".into());
                    for r in &reports {
                        let seed = r.seed.map(|s| s.to_string()).unwrap_or_default();
                        writeln_vec(
                            out,
                            format!("{},{},{},{},{seed},{}", r.name, r.passed(), r.checks, r.failure_count, r.resampled),
                        );
                    }
                }
                Format::Text => {
                    for r in &reports {
                        writeln_vec(out, r.summary());
                        for f in &r.failures {
                            writeln_vec(out, format!("    {f}"));
                        }
                    }
                }
            }
            Ok(reports.iter().all(SuiteReport::passed))
        }
        Command::Conjecture { n, d, k, random } => {
            let report = conjecture(*n, *d, *k, random.seed, random.trials)?;
            match cli.format {
                Format::Json => json(out, &report)?,
                _ => {
                    writeln_vec(
                        out,
                        format!(
                            "n={} d={} k={}: seed {}, {} trials, {} held, {} held after resampling l, {} unresolved",
                            report.n,
                            report.d,
                            report.k,
                            report.seed,
                            report.trials,
                            report.held,
                            report.resampled,
                            report.unresolved.len()
                        ),
                    );
                    for u in &report.unresolved {
                        writeln_vec(out, format!("    unresolved: {u}"));
                    }
                }
            }
            Ok(report.unresolved.is_empty())
        }
    }
}

fn writeln_vec(out: &mut Vec<u8>, line: String) {
    out.extend_from_slice(line.as_bytes());
    out.push(b'\n');
}

fn grid_search(grid: &Grid, f: impl Fn(usize, u32, u64) -> Result<SearchResult>) -> Result<Vec<SearchResult>> {
    let mut res = Vec::new();
    for n in grid.n.range() {
        for d in grid.d.range() {
            for k in grid.k.range() {
                res.push(f(n, d, k)?);
            }
        }
    }
    Ok(res)
}

#[derive(Serialize)]
struct ResultJson {
    #[serde(flatten)]
    result: SearchResult,
    lower_bound: bool,
}

fn write_results(
    format: Format,
    out: &mut Vec<u8>,
    mut results: Vec<SearchResult>,
    witnesses: bool,
    name: &str,
) -> Result<()> {
    if !witnesses {
        for r in &mut results {
            r.witnesses.clear();
        }
    }
    match format {
        Format::Json => {
            let rows: Vec<ResultJson> = results
                .into_iter()
                .map(|r| ResultJson { lower_bound: r.is_lower_bound(), result: r })
                .collect();
            json(out, &rows)?;
        }
        Format::Csv => {
            writeln_vec(out, "n,d,k,value,witness_count".into());
            for r in &results {
                let v = r.value.map(|v| v.to_string()).unwrap_or_default();
                writeln_vec(out, format!("{},{},{},{v},{}", r.n, r.d, r.k, r.witness_count));
            }
        }
        Format::Text => {
            for r in &results {
                let v = r.value.map_or("-".to_string(), |v| v.to_string());
                let (rel, note) = if r.is_lower_bound() { (">=", " (lower bound from monomial subspaces)") } else { ("=", "") };
                writeln_vec(
                    out,
                    format!(
                        "{name}({}, {}, {}) {rel} {v}{note}: {} witnesses, {} candidates",
                        r.n, r.d, r.k, r.witness_count, r.searched
                    ),
                );
                for w in &r.witnesses {
                    writeln_vec(out, format!("    {w}"));
                }
                if witnesses && (r.witnesses.len() as u64) < r.witness_count {
                    writeln_vec(out, format!("    ... {} more", r.witness_count - r.witnesses.len() as u64));
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SquareReport {
    n: usize,
    d: u32,
    dim: u64,
    codim: u64,
    dim_square: u64,
    codim_square: u64,
    order: String,
    /// For non-monomial input: codim of the square of the initial subspace.
    initial_codim_square: Option<u64>,
    square_complement: Option<MonomialSubspace>,
}

fn square_report(input: &InputArgs) -> Result<SquareReport> {
    let order: MonomialOrder = input.order.parse()?;
    Ok(match read_subspace(&input.input)? {
        SubspaceInput::Monomial(u) => {
            let sq = u.square()?;
            SquareReport {
                n: u.n(),
                d: u.degree(),
                dim: u.dim(),
                codim: u.codim(),
                dim_square: sq.dim(),
                codim_square: sq.codim(),
                order: order.name(),
                initial_codim_square: None,
                square_complement: Some(sq),
            }
        }
        SubspaceInput::Rational(u) => {
            let u = u.with_order(order)?;
            let sq = u.product_rational(&u)?;
            let init = u.initial_subspace();
            SquareReport {
                n: u.n(),
                d: u.degree(),
                dim: u.dim(),
                codim: u.codim(),
                dim_square: sq.dim(),
                codim_square: sq.codim(),
                order: order.name(),
                initial_codim_square: Some(init.codim_square()?),
                square_complement: None,
            }
        }
    })
}

#[derive(Serialize)]
struct HilbertReport {
    n: usize,
    d: u32,
    hilbert_function: HilbertFunction,
    macaulay_violation: Option<usize>,
    gotzmann: GotzmannVerdict,
}

fn hilbert_report(input: &InputArgs, max_degree: Option<u32>) -> Result<HilbertReport> {
    let order: MonomialOrder = input.order.parse()?;
    let (n, d, hf) = match read_subspace(&input.input)? {
        SubspaceInput::Monomial(u) => {
            let max = max_degree.unwrap_or(2 * u.degree() + 2);
            (u.n(), u.degree(), u.ideal_hilbert_function(max)?)
        }
        SubspaceInput::Rational(u) => {
            let u: RationalSubspace = u.with_order(order)?;
            let max = max_degree.unwrap_or(2 * u.degree() + 2);
            (u.n(), u.degree(), u.hilbert_function_rational(max)?)
        }
    };
    if d == 0 {
        return Err(Error::InvalidInput("the generating degree must be at least 1".into()));
    }
    let gotzmann = gotzmann_persists(&hf, d)?;
    Ok(HilbertReport { n, d, macaulay_violation: hf.first_macaulay_violation(), hilbert_function: hf, gotzmann })
}

#[derive(Serialize)]
struct ConjectureReport {
    n: usize,
    d: u32,
    k: u64,
    seed: u64,
    trials: usize,
    held: usize,
    resampled: usize,
    /// Forms whose restriction stayed a power on every sampled hyperplane.
    unresolved: Vec<String>,
}

/// Samples `p` in `A(n)_d` that is not a power of a linear form and checks
/// that its restriction to a random hyperplane is not one either. A failure
/// only triggers resampling of the hyperplane; it is never a counterexample.
fn conjecture(n: usize, d: u32, k: u64, seed: u64, trials: usize) -> Result<ConjectureReport> {
    if k != 1 {
        return Err(Error::InvalidInput(format!(
            "only k = 1 is supported: deciding whether a {k}-dimensional space of forms contains a power of a linear form is not implemented"
        )));
    }
    if n < 3 || u64::from(d) < k + 1 {
        return Err(Error::Regime(format!(
            "the statement assumes n >= 3 and k <= d - 1, n - 1 (got n = {n}, d = {d}, k = {k})"
        )));
    }
    const RESAMPLES: usize = 10;
    let mut rng = seeded_rng(seed);
    let mut report = ConjectureReport { n, d, k, seed, trials, held: 0, resampled: 0, unresolved: Vec::new() };
    for _ in 0..trials {
        let p = loop {
            let p = random_form(n, d, &mut rng, DEFAULT_COEFF_BOUND)?;
            if !p.is_zero() && !p.is_power_of_linear_form()? {
                break p;
            }
        };
        let mut ok = false;
        for attempt in 0..RESAMPLES {
            let l = random_linear_form(n, &mut rng, DEFAULT_COEFF_BOUND);
            let r = p.restrict_to_hyperplane(&l)?;
            if !r.is_zero() && !r.is_power_of_linear_form()? {
                ok = true;
                if attempt == 0 {
                    report.held += 1;
                } else {
                    report.resampled += 1;
                }
                break;
            }
        }
        if !ok {
            report.unresolved.push(p.to_string());
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let code = run_with(std::iter::once("stablesq").chain(args.iter().copied()), &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn spans() {
        assert_eq!("3..6".parse::<Span<usize>>().unwrap(), Span(3, 6));
        assert_eq!("3..=6".parse::<Span<usize>>().unwrap(), Span(3, 6));
        assert_eq!("4".parse::<Span<u32>>().unwrap(), Span(4, 4));
        assert!("6..3".parse::<Span<usize>>().is_err());
        assert!("x".parse::<Span<usize>>().is_err());
    }

    #[test]
    fn m_command() {
        let (code, out) = run_str(&["m", "--n", "4", "--d", "5", "--k", "6", "--witnesses"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("m(4, 5, 6) = 31"), "{out}");
        let (code, out) = run_str(&["m", "--n", "3", "--d", "2..3", "--k", "1", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n,d,k,value,witness_count\n3,2,1,3,1\n3,3,1,3,1\n");
    }

    #[test]
    fn m0_is_labelled() {
        let (code, out) = run_str(&["m0", "--n", "3", "--d", "2", "--k", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains(">=") && out.contains("lower bound"), "{out}");
    }

    #[test]
    fn invalid_input_exits_2() {
        assert_eq!(run_str(&["m", "--n", "3", "--d", "2"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["conjecture", "--n", "4", "--d", "3", "--k", "2"]).0, 2);
        assert_eq!(run_str(&["conjecture", "--n", "2", "--d", "3"]).0, 2);
        assert_eq!(run_str(&["check", "--suite", "nope"]).0, 2);
    }

    #[test]
    fn conjecture_is_deterministic() {
        let a = run_str(&["conjecture", "--n", "3", "--d", "3", "--trials", "5", "--seed", "7"]);
        let b = run_str(&["conjecture", "--n", "3", "--d", "3", "--trials", "5", "--seed", "7"]);
        assert_eq!(a, b);
        assert_eq!(a.0, 0);
        assert!(a.1.contains("seed 7"));
    }
}
