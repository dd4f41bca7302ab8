//! `qtsym`: compute interpolation polynomials and their duals, and run the
//! identity suites.

use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qtsym::algebra::{parse_rational, var_names, Field, QtParams, ScalarQT};
use qtsym::dual::{dual_h, dual_h_jack, dual_hl, dual_sigma, dual_whittaker, Family};
use qtsym::interp::{hl_a, interp_i, jack_interp_i, node, whittaker_a};
use qtsym::macdonald::macdonald_p;
use qtsym::operators::DEFAULT_SEED;
use qtsym::partitions::Partition;
use qtsym::suites::{self, EvalMode, Profile, SuiteReport};

#[derive(Parser)]
#[command(name = "qtsym", version, about = "Interpolation Macdonald polynomials, dual functions and Cauchy identities")]
struct Cli {
    /// Worker threads (overrides SYMFUNC_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a polynomial or rational function as JSON.
    Compute(ComputeArgs),
    /// Print the interpolation node X_N(lambda).
    Nodes {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=8))]
        n: u32,
    },
    /// Run an identity suite; exit 1 with a counterexample on failure.
    Verify {
        suite: SuiteName,
        #[command(flatten)]
        params: SuiteParams,
    },
    /// Run a suite and report its wall-clock time.
    Bench {
        #[arg(long)]
        suite: SuiteName,
        #[command(flatten)]
        params: SuiteParams,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    Macdonald,
    Interp,
    Dual,
    Sigma,
    Jack,
    Whittaker,
    Hl,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    object: Object,
    #[arg(long, value_parser = parse_partition)]
    mu: Partition,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=6))]
    n: u32,
    /// Number of dual variables; defaults to N.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=6))]
    k: Option<u32>,
    #[arg(long, value_parser = parse_family, default_value = "qt")]
    family: Family,
    /// Parameters c_0, c_1, ... for `sigma`; default c_k = q^(N-1-k).
    #[arg(long, value_delimiter = ',')]
    sequence: Option<Vec<String>>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    Cauchy,
    OneRow,
    SkewPieri,
    FinitePieri,
    Eigen,
    Jack,
    Whittaker,
    Hl,
    Biorth,
    Binomial,
    TqDeterminant,
    MacdonaldOracle,
    Interpolation,
    DualOracle,
    All,
}

#[derive(Args)]
struct SuiteParams {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=4))]
    n: u32,
    /// Defaults to N.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4))]
    k: Option<u32>,
    /// Series cutoff (y-order for the Pieri and Hall-Littlewood suites).
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(0..=8))]
    cutoff: u32,
    /// Largest |mu| (|nu| for the Pieri suites, D for biorth).
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(0..=6))]
    max_size: u32,
    /// Row length m of the finite Pieri product.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=4))]
    m: u32,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..=1000))]
    points: u32,
    #[arg(long, value_enum, default_value = "auto")]
    mode: Mode,
    #[arg(long, value_enum, default_value = "quick")]
    profile: ProfileArg,
    /// Omit wall-clock times so reports are byte-identical across runs.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Auto,
    Symbolic,
    Eval,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Desk,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: qtsym::error::AlgebraError| e.to_string())
}

fn run_suite(name: SuiteName, p: &SuiteParams) -> qtsym::error::Result<SuiteReport> {
    let n = p.n as usize;
    let k = p.k.unwrap_or(p.n) as usize;
    let points = p.points as usize;
    let mode = match p.mode {
        Mode::Auto => EvalMode::Auto,
        Mode::Symbolic => EvalMode::Symbolic,
        Mode::Eval => EvalMode::Eval,
    };
    match name {
        SuiteName::Cauchy => suites::verify_cauchy_qt(n, k, p.cutoff, p.cutoff),
        SuiteName::OneRow => suites::verify_one_row_gf(n, p.cutoff),
        SuiteName::SkewPieri => suites::verify_skew_pieri(n, p.max_size, p.cutoff),
        SuiteName::FinitePieri => suites::verify_finite_pieri(n, p.m, p.max_size),
        SuiteName::Eigen => suites::verify_eigen(n, p.max_size, p.seed, points, mode),
        SuiteName::Jack => suites::verify_jack_cauchy(n, p.cutoff),
        SuiteName::Whittaker => suites::verify_whittaker(n, k, p.cutoff),
        SuiteName::Hl => suites::verify_hl(n, k, p.cutoff, p.seed, points),
        SuiteName::Biorth => suites::verify_biorthogonality(p.max_size),
        SuiteName::Binomial => suites::verify_binomial_suite(n, p.max_size),
        SuiteName::TqDeterminant => suites::verify_tq_determinant(n, p.max_size),
        SuiteName::MacdonaldOracle => suites::verify_macdonald_oracle(n, p.max_size),
        SuiteName::Interpolation => suites::verify_interpolation(n, p.max_size, 3),
        SuiteName::DualOracle => suites::verify_dual_oracle(k, p.max_size, p.cutoff),
        SuiteName::All => {
            let profile = match p.profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Desk => Profile::Desk,
            };
            suites::verify_all(profile, p.seed, points)
        }
    }
}

fn compute(a: &ComputeArgs) -> anyhow::Result<Value> {
    let Format::Json = a.format;
    let n = a.n as usize;
    let k = a.k.unwrap_or(a.n) as usize;
    let mu = &a.mu;
    let xs = var_names("x", n);
    let us = var_names("u", k);
    let ctx = QtParams::generic();
    let (name, value) = match (a.object, a.family) {
        (Object::Macdonald, _) => ("macdonald_p", macdonald_p(&ctx, mu, n)?.to_json(&xs)),
        (Object::Interp, Family::Qt) => ("interp_i", interp_i(&ctx, mu, n)?.to_json(&xs)),
        (Object::Interp, Family::Jack) | (Object::Jack, _) => ("jack_interp_i", jack_interp_i(mu, n)?.to_json(&xs)),
        (Object::Interp, Family::Whittaker) | (Object::Whittaker, _) => ("whittaker_a", whittaker_a(mu, n)?.to_json(&xs)),
        (Object::Interp, Family::Hl) | (Object::Hl, _) => ("hl_a", hl_a(mu, n)?.to_json(&xs)),
        (Object::Dual, Family::Qt) => ("dual_h", dual_h(&ctx, mu, k)?.to_json(&us)),
        (Object::Dual, Family::Jack) => ("dual_h_jack", dual_h_jack(mu, k)?.to_json(&us)),
        (Object::Dual, Family::Whittaker) => ("dual_whittaker", dual_whittaker(mu, k)?.to_json(&us)),
        (Object::Dual, Family::Hl) => ("dual_hl", dual_hl(mu, k)?.to_json(&us)),
        (Object::Sigma, _) => {
            let len = mu.part(0) as usize + n;
            let c: Vec<ScalarQT> = match &a.sequence {
                Some(s) => {
                    if s.len() < len {
                        bail!("sigma needs at least {len} sequence values");
                    }
                    s.iter()
                        .map(|v| parse_rational(v).map(|r| ScalarQT::from_rational(&r)))
                        .collect::<Result<_, _>>()
                        .context("bad sequence value")?
                }
                None => (0..len).map(|i| ScalarQT::monomial(1, n as i32 - 1 - i as i32, 0)).collect(),
            };
            ("dual_sigma", dual_sigma(mu, n, &c)?.to_json(&var_names("u", n)))
        }
    };
    Ok(json!({"object": name, "mu": mu.to_json(), "n": n, "value": value}))
}

fn configure_threads(flag: Option<usize>) -> anyhow::Result<()> {
    let threads = match flag {
        Some(t) => Some(t),
        None => match std::env::var("SYMFUNC_THREADS") {
            Ok(s) => Some(s.trim().parse().context("SYMFUNC_THREADS must be a number")?),
            Err(_) => None,
        },
    };
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    Ok(())
}

fn print(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(e) = configure_threads(cli.threads) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    let result = match &cli.command {
        Command::Compute(a) => compute(a).map(|v| {
            print(&v);
            0
        }),
        Command::Nodes { lambda, n } => node(&QtParams::generic(), lambda, *n as usize)
            .map(|x| {
                print(&json!({"lambda": lambda.to_json(), "n": n, "node": x.iter().map(|c| c.to_json()).collect::<Vec<_>>()}));
                0
            })
            .map_err(Into::into),
        Command::Verify { suite, params } => run_suite(*suite, params)
            .map(|r| {
                print(&r.to_json(!params.no_timing));
                if r.passed {
                    0
                } else {
                    1
                }
            })
            .map_err(Into::into),
        Command::Bench { suite, params } => {
            let start = Instant::now();
            run_suite(*suite, params)
                .map(|r| {
                    let mut v = json!({
                        "suite": r.suite,
                        "status": if r.passed { "pass" } else { "fail" },
                        "checks": r.checks,
                        "millis": start.elapsed().as_millis(),
                    });
                    if !r.passed {
                        v["counterexample"] = r.counterexample.clone().unwrap_or_default();
                    }
                    print(&v);
                    if r.passed {
                        0
                    } else {
                        1
                    }
                })
                .map_err(Into::into)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
