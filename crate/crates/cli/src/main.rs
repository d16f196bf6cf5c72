use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use specht_core::combinatorics::min_gap_k;
use specht_core::fan::{enumerate_fan, theorem_count, DEFAULT_ENUMERATION_LIMIT};
use specht_core::oracle::{
    certify_specht, elimination_polynomial_check, GeneratorSet, DEFAULT_ORACLE_LIMIT,
};
use specht_core::polytope::{pnk_vertices, vertex_ideal_bijection};
use specht_core::specht::initial_ideal;
use specht_core::verify::{
    run_verify, suite_shapes, Subsystem, VerifyConfig, DEFAULT_ORDERS_PER_SHAPE, DEFAULT_SEED,
};
use specht_core::{Error, Partition, VariableOrder};

mod output;

use output::{monomial_list, CountRow, Emitter, Format};

const MAX_EMITTED_VERTICES: u32 = 1_000_000;

/// Initial ideals, Groebner fans and state polytopes of Specht ideals.
#[derive(Debug, Parser)]
#[command(name = "specht", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for the parallel enumerations.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compare n!/(k+1)! with the number of distinct initial ideals.
    Count {
        #[arg(long, required_unless_present = "n_max", conflicts_with = "n_max")]
        lambda: Option<Partition>,
        /// Every partition with at least two rows of every n in 2..=N.
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Minimal generators of the lex initial ideal for one order.
    InitialIdeal {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        sigma: VariableOrder,
    },
    /// All distinct initial ideals with their classes of orders.
    Fan {
        #[arg(long)]
        lambda: Partition,
    },
    /// Vertices of the state polytope, checked against the initial ideals.
    Polytope {
        #[arg(long)]
        lambda: Partition,
        /// Emit the vertex-to-ideal map instead of the bare vertex set.
        #[arg(long)]
        with_ideals: bool,
    },
    /// Run the property suite for every shape up to --n-max.
    Verify {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, value_delimiter = ',')]
        skip: Vec<Subsystem>,
        #[arg(long, default_value_t = DEFAULT_ORDERS_PER_SHAPE)]
        orders_per_shape: usize,
    },
    /// Polynomial-level certification with the S-pair criterion.
    Oracle {
        #[arg(long)]
        lambda: Partition,
        /// Defaults to the identity order.
        #[arg(long)]
        sigma: Option<VariableOrder>,
        #[arg(long, value_enum, default_value_t = OracleCheck::Lex)]
        check: OracleCheck,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleCheck {
    Lex,
    Universal,
    Elimination,
}

enum Status {
    Verified,
    Violation,
}

impl Status {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Verified
        } else {
            Status::Violation
        }
    }
}

fn count_row(lambda: &Partition) -> Result<CountRow> {
    let n = lambda.n();
    let expected = theorem_count(lambda)?;
    let brute = if n <= DEFAULT_ENUMERATION_LIMIT {
        Some(enumerate_fan(lambda)?.distinct_count)
    } else {
        eprintln!("warning: n = {n} exceeds the enumeration limit {DEFAULT_ENUMERATION_LIMIT}; brute force skipped for ({lambda})");
        None
    };
    Ok(CountRow {
        n,
        lambda: lambda.to_string(),
        k: min_gap_k(lambda)?,
        agree: brute.map(|b| expected == b.into()),
        theorem_count: expected.to_string(),
        brute_force_count: brute,
    })
}

fn check_order(lambda: &Partition, sigma: &VariableOrder) -> Result<()> {
    if sigma.n() != lambda.n() {
        anyhow::bail!(
            "sigma has length {} but lambda has size {}",
            sigma.n(),
            lambda.n()
        );
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Status> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let out = Emitter::new(cli.format, cli.output.clone());
    match cli.command {
        Command::Count { lambda, n_max } => {
            let shapes = match (lambda, n_max) {
                (Some(l), _) => vec![l],
                (None, Some(n)) if n >= 2 => suite_shapes(n)?,
                (None, Some(n)) => anyhow::bail!("--n-max must be at least 2, got {n}"),
                (None, None) => unreachable!("clap requires one of --lambda and --n-max"),
            };
            let rows = shapes.iter().map(count_row).collect::<Result<Vec<_>>>()?;
            out.rows(&rows, &rows)?;
            Ok(Status::from_pass(
                rows.iter().all(|r| r.agree != Some(false)),
            ))
        }
        Command::InitialIdeal { lambda, sigma } => {
            check_order(&lambda, &sigma)?;
            let ideal = initial_ideal(&lambda, &sigma)?;
            out.rows(&ideal, &monomial_list(ideal.min_gens()))?;
            Ok(Status::Verified)
        }
        Command::Fan { lambda } => {
            let fan = enumerate_fan(&lambda)?;
            out.rows(&fan, &output::fan_rows(&fan))?;
            Ok(Status::from_pass(
                theorem_count(&lambda)? == fan.distinct_count.into(),
            ))
        }
        Command::Polytope {
            lambda,
            with_ideals,
        } => {
            let n = lambda.n();
            let k = min_gap_k(&lambda)?;
            let count = theorem_count(&lambda)?;
            if count > MAX_EMITTED_VERTICES.into() {
                anyhow::bail!(
                    "Pi_({n},{k}) has {count} vertices, more than {MAX_EMITTED_VERTICES}"
                );
            }
            let vertices = pnk_vertices(n, k)?;
            if n > DEFAULT_ENUMERATION_LIMIT {
                eprintln!("warning: n = {n} exceeds the enumeration limit {DEFAULT_ENUMERATION_LIMIT}; bijection not checked");
                out.rows(&vertices, &output::vertex_rows(&vertices))?;
                return Ok(Status::Verified);
            }
            let bijection = vertex_ideal_bijection(&lambda, cli.seed)?;
            if with_ideals {
                out.rows(&bijection, &output::bijection_rows(&bijection))?;
            } else {
                out.rows(&vertices, &output::vertex_rows(&vertices))?;
            }
            Ok(Status::Verified)
        }
        Command::Verify {
            n_max,
            skip,
            orders_per_shape,
        } => {
            let config = VerifyConfig {
                n_max,
                seed: cli.seed,
                orders_per_shape,
                skip: skip.into_iter().collect(),
            };
            let report = run_verify(&config)?;
            out.rows(&report, &report.rows)?;
            for (check, (passed, total)) in report.tally() {
                let mark = if passed == total { "PASS" } else { "FAIL" };
                eprintln!("{mark} {check:<26} {passed}/{total}");
            }
            for row in report.failures() {
                eprintln!("failed: {} {}", row.check, row.instance);
            }
            Ok(Status::from_pass(report.passed()))
        }
        Command::Oracle {
            lambda,
            sigma,
            check,
        } => {
            let sigma = sigma.unwrap_or_else(|| VariableOrder::identity(lambda.n()));
            check_order(&lambda, &sigma)?;
            match check {
                OracleCheck::Lex | OracleCheck::Universal => {
                    let set = if matches!(check, OracleCheck::Lex) {
                        GeneratorSet::Lex
                    } else {
                        GeneratorSet::Universal
                    };
                    let report = certify_specht(&lambda, &sigma, set, DEFAULT_ORACLE_LIMIT)?;
                    out.rows(&report, &[output::OracleRow::from(&report)])?;
                    Ok(Status::from_pass(report.passed()))
                }
                OracleCheck::Elimination => {
                    let report =
                        elimination_polynomial_check(&lambda, &sigma, DEFAULT_ORACLE_LIMIT)?;
                    out.rows(&report, &[output::OracleRow::from(&report)])?;
                    Ok(Status::from_pass(report.passed()))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Status::Verified) => ExitCode::SUCCESS,
        Ok(Status::Violation) => {
            eprintln!("theorem violation detected");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::TheoremViolation(_)) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
