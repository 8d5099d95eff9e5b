//! Command-line front end for the k-tree enumeration engines.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 internal invariant violation (e.g. an integrality failure).

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};

use ktree_enum::cycle_index::{ktree_cycle_index, CiBounds};
use ktree_enum::gamma_gf::{GammaGfError, GammaSeriesTable};
use ktree_enum::partitions::Partition;
use ktree_enum::table::{compute_table, verify_fixture, Engine, TableError};

#[derive(Parser, Debug)]
#[command(
    name = "ktree-enum",
    about = "Exact counts of unlabeled k-trees by number of hedra",
    long_about = "Computes the number of isomorphism classes of k-trees with n hedra, \
                  exactly, with a choice of engine; verifies tables against fixture \
                  files; dumps the intermediate class-indexed series."
)]
struct Args {
    /// The k-tree parameter (clique size of the building block minus one).
    #[arg(long)]
    k: Option<u32>,

    /// Highest hedron count to compute (series truncation order).
    #[arg(long)]
    n: Option<usize>,

    /// Which computation to run.
    #[arg(long, value_enum, default_value_t = EngineOpt::Gf)]
    engine: EngineOpt,

    /// Output format for computed tables.
    #[arg(long, value_enum, default_value_t = EmitOpt::Table)]
    emit: EmitOpt,

    /// Partition of k as comma-separated parts (with --dump-gamma).
    #[arg(long)]
    lambda: Option<String>,

    /// Print the front-rooted series for the class --lambda instead of a table.
    #[arg(long)]
    dump_gamma: bool,

    /// Verify a fixture file of known counts and report PASS/FAIL per entry.
    #[arg(long, value_name = "PATH")]
    verify: Option<PathBuf>,

    /// x-weight truncation for the cycle-index engine (defaults to --n).
    #[arg(long)]
    max_degree: Option<usize>,

    /// Print the combined k-tree cycle index in canonical text form.
    #[arg(long)]
    dump_cycle_index: bool,

    /// With --engine oracle: print the canonical form of each class with
    /// exactly n hedra as a hex string, one per line, instead of counts.
    #[arg(long)]
    oracle_forms: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum EngineOpt {
    Gf,
    CycleIndex,
    Oracle,
}

impl From<EngineOpt> for Engine {
    fn from(value: EngineOpt) -> Engine {
        match value {
            EngineOpt::Gf => Engine::Gf,
            EngineOpt::CycleIndex => Engine::CycleIndex,
            EngineOpt::Oracle => Engine::Oracle,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum EmitOpt {
    Table,
    Csv,
    Json,
}

enum Failure {
    Verification,
    Usage(String),
    Internal(String),
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Verification => ExitCode::from(1),
            Failure::Usage(_) => ExitCode::from(2),
            Failure::Internal(_) => ExitCode::from(3),
        }
    }
}

impl From<TableError> for Failure {
    fn from(err: TableError) -> Failure {
        match &err {
            // Integrality failures mean the engine itself broke an invariant.
            TableError::Gf(GammaGfError::Integrality { .. }) | TableError::Invariant(_) => {
                Failure::Internal(err.to_string())
            }
            _ => Failure::Usage(err.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Verification => {}
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Internal(msg) => eprintln!("internal error: {msg}"),
            }
            failure.exit_code()
        }
    }
}

fn run(args: &Args) -> Result<(), Failure> {
    if let Some(path) = &args.verify {
        return run_verify(path);
    }
    if args.dump_gamma {
        return run_dump_gamma(args);
    }
    if args.dump_cycle_index {
        return run_dump_cycle_index(args);
    }
    if args.oracle_forms {
        return run_oracle_forms(args);
    }
    run_table(args)
}

fn run_oracle_forms(args: &Args) -> Result<(), Failure> {
    if args.engine != EngineOpt::Oracle {
        return Err(Failure::Usage("--oracle-forms requires --engine oracle".into()));
    }
    let k = require_k(args)?;
    let n = require_n(args)?;
    let forms = ktree_enum::oracle::grow_ktrees(k, n as u32)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    for form in forms {
        println!("{}", form.hex());
    }
    Ok(())
}

fn require_k(args: &Args) -> Result<u32, Failure> {
    args.k.ok_or_else(|| Failure::Usage("--k is required".into()))
}

fn require_n(args: &Args) -> Result<usize, Failure> {
    args.n.ok_or_else(|| Failure::Usage("--n is required".into()))
}

fn run_table(args: &Args) -> Result<(), Failure> {
    let k = require_k(args)?;
    let n = require_n(args)?;
    let started = Instant::now();
    let table = compute_table(k, n, args.engine.into())?;
    let elapsed = started.elapsed();
    match args.emit {
        EmitOpt::Table => print!("{}", table.render_text()),
        EmitOpt::Csv => print!("{}", table.to_csv()),
        EmitOpt::Json => println!("{}", table.to_json()),
    }
    eprintln!("# k={k} n={n} engine={} computed in {:.3}s", table.engine, elapsed.as_secs_f64());
    Ok(())
}

fn run_verify(path: &PathBuf) -> Result<(), Failure> {
    let content = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let started = Instant::now();
    let report = verify_fixture(&content)?;
    if report.checks.is_empty() {
        eprintln!("warning: fixture contains no checks");
    }
    for check in &report.checks {
        if check.passed() {
            println!("PASS k={} n={} count={}", check.k, check.n, check.expected);
        } else {
            println!(
                "FAIL k={} n={} expected={} got={}",
                check.k, check.n, check.expected, check.actual
            );
        }
    }
    let failures = report.failures().count();
    eprintln!(
        "# {} checks, {} failures, {:.3}s",
        report.checks.len(),
        failures,
        started.elapsed().as_secs_f64()
    );
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run_dump_gamma(args: &Args) -> Result<(), Failure> {
    let k = require_k(args)?;
    let n = require_n(args)?;
    let lambda_text = args
        .lambda
        .as_ref()
        .ok_or_else(|| Failure::Usage("--dump-gamma requires --lambda".into()))?;
    let lambda: Partition = lambda_text
        .parse()
        .map_err(|e| Failure::Usage(format!("invalid --lambda: {e}")))?;
    if lambda.weight() != k {
        return Err(Failure::Usage(format!(
            "--lambda {lambda} has weight {}, expected {k}",
            lambda.weight()
        )));
    }
    let table = GammaSeriesTable::build(k, n).map_err(internal)?;
    let series = table.front_rooted(&lambda).map_err(internal)?;
    let coeffs = series.nonneg_integer_coeffs().map_err(|e| Failure::Internal(e.to_string()))?;
    let rendered: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    println!("{lambda}: {}", rendered.join(", "));
    Ok(())
}

fn run_dump_cycle_index(args: &Args) -> Result<(), Failure> {
    let k = require_k(args)?;
    let degree = match (args.max_degree, args.n) {
        (Some(d), _) => d,
        (None, Some(n)) => n,
        (None, None) => {
            return Err(Failure::Usage("--dump-cycle-index requires --max-degree or --n".into()))
        }
    };
    let ci = ktree_cycle_index(k, degree, &CiBounds::default())
        .map_err(|e| Failure::Usage(e.to_string()))?;
    print!("{}", ci.canonical_text());
    Ok(())
}

fn internal(err: GammaGfError) -> Failure {
    match err {
        GammaGfError::Integrality { .. } => Failure::Internal(err.to_string()),
        _ => Failure::Usage(err.to_string()),
    }
}
