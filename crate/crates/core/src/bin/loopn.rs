//! Batch verification harness for the loop-algebra identity suites.

use clap::{Parser, Subcommand};
use loopn::grammar;
use loopn::report::Status;
use loopn::skein::CurveSpec;
use loopn::suite::{run, Suite, SuiteConfig};
use loopn::uqsl2::{EpsAlgebra, GenAlgebra};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "loopn",
    version,
    about = "Exact verification of quantum loop algebra identities on the n-punctured sphere"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and emit a report.
    Run {
        /// presentation | alekseev | center | frobenius | threading | qca |
        /// poisson | dressing | skein | all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Number of punctures (sites), 1..=3 without override.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Odd root-of-unity order, 3 or 5 without override.
        #[arg(long, default_value_t = 3)]
        l: u32,
        /// Degree bound for the basis-independence checks.
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        /// Truncation order for the exponential-series comparisons.
        #[arg(long, default_value_t = 4)]
        series_order: u32,
        /// Parallelism degree (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the JSON report to this path.
        #[arg(long)]
        report: Option<std::path::PathBuf>,
        /// Run even outside the documented safe bounds.
        #[arg(long, default_value_t = false)]
        override_bounds: bool,
        /// Seed for the randomized coherence checks.
        #[arg(long, default_value_t = 0x10f0_51ab)]
        seed: u64,
        /// Print every identity, not only failures.
        #[arg(long, short, default_value_t = false)]
        verbose: bool,
    },
    /// Print the Wilson image of curves in the element grammar.
    Curve {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        l: u32,
        /// Curve specs like `boundary:2`, `boundary:outer`, `arc:1..2^l`,
        /// optionally with `,lk=K`. Repeatable.
        #[arg(long = "curve", required = true)]
        curves: Vec<String>,
        /// Evaluate at the root of unity (applies the linking normalization).
        #[arg(long, default_value_t = false)]
        at_root: bool,
    },
    /// Print a Poisson bracket table as JSON (pair -> polynomial string).
    BracketTable {
        /// fr (matrix entries) or qca (small-center coordinates)
        #[arg(long, default_value = "qca")]
        kind: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Parse an element in the grammar and print its normal form.
    NormalForm {
        /// The element, e.g. `(v^2) * E K^-1 + (1) * F`.
        element: String,
        /// Tensor arity (omit for a one-site element).
        #[arg(long)]
        arity: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            suite,
            n,
            l,
            max_degree,
            series_order,
            jobs,
            report,
            override_bounds,
            seed,
            verbose,
        } => {
            let suite = match Suite::parse(&suite) {
                Some(s) => s,
                None => {
                    eprintln!("unknown suite: {}", suite);
                    return ExitCode::from(2);
                }
            };
            if n == 0 {
                eprintln!("--n must be at least 1");
                return ExitCode::from(2);
            }
            let cfg = SuiteConfig {
                n,
                l,
                max_degree,
                series_order,
                jobs,
                override_bounds,
                seed,
            };
            let rep = run(suite, &cfg);
            for item in &rep.items {
                match item.status {
                    Status::Fail => {
                        println!(
                            "FAIL {} — {}\n     residual: {}",
                            item.id,
                            item.description,
                            item.witness.as_deref().unwrap_or("")
                        );
                    }
                    Status::Skipped => println!("SKIP {} — {}", item.id, item.description),
                    Status::Pass if verbose => {
                        println!("PASS {} — {}", item.id, item.description)
                    }
                    _ => {}
                }
            }
            println!(
                "suite {}: {} pass, {} fail, {} skipped",
                rep.suite, rep.summary.pass, rep.summary.fail, rep.summary.skipped
            );
            if let Some(path) = report {
                if let Err(e) = std::fs::write(&path, rep.to_json()) {
                    eprintln!("cannot write report to {}: {}", path.display(), e);
                    return ExitCode::from(2);
                }
                println!("report written to {}", path.display());
            }
            if rep.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Curve {
            n,
            l,
            curves,
            at_root,
        } => {
            for c in curves {
                let spec = match CurveSpec::parse(&c, l) {
                    Ok(s) => s,
                    Err(e) => {
                        eprintln!("bad curve {}: {}", c, e);
                        return ExitCode::from(2);
                    }
                };
                if let Err(e) = spec.validate(n) {
                    eprintln!("bad curve {}: {}", c, e);
                    return ExitCode::from(2);
                }
                if at_root {
                    let eps = EpsAlgebra::for_l(l);
                    let w = loopn::skein::wilson_curve_at_root(&eps, &spec, n);
                    println!("{} -> {}", spec, w);
                } else {
                    let alg = GenAlgebra::global();
                    let w = loopn::skein::wilson_curve(&*alg, &spec, n);
                    println!("{} -> {}", spec, w);
                }
            }
            ExitCode::SUCCESS
        }
        Command::BracketTable { kind, n } => {
            if n == 0 {
                eprintln!("--n must be at least 1");
                return ExitCode::from(2);
            }
            let table = match kind.as_str() {
                "fr" => loopn::poisson::fr_bracket(n),
                "qca" => loopn::poisson::qca_bracket_model(n),
                other => {
                    eprintln!("unknown bracket table kind: {}", other);
                    return ExitCode::from(2);
                }
            };
            println!("{}", serde_json::to_string_pretty(&table.to_json()).unwrap());
            ExitCode::SUCCESS
        }
        Command::NormalForm { element, arity } => match arity {
            None => match grammar::parse_pbw(&element) {
                Ok(e) => {
                    println!("{}", e);
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("parse error: {}", e);
                    ExitCode::from(2)
                }
            },
            Some(k) => match grammar::parse_tensor(&element, k) {
                Ok(e) => {
                    println!("{}", e);
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("parse error: {}", e);
                    ExitCode::from(2)
                }
            },
        },
    }
}
