use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use diamonds::diamonds::{multifold_rational, schmidt_closed_guarded, schmidt_multifold_closed, sigma_rational};
use diamonds::oracle::enumerate_ppartitions;
use diamonds::permstat::{djsw_recursion, euler_mahonian_guarded, XY};
use diamonds::poset::{parse_poset_file, stanley_sigma, DiamondSpec};
use diamonds::series::{TruncSeries2, UniSeries};
use diamonds::verify::{self, VerifyReport};
use diamonds::{Error, Guards};

/// Exact generating functions of partition diamonds.
#[derive(Parser)]
#[command(name = "diamonds", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Lift the enumeration guards (d <= 9, poset size <= 12).
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Euler–Mahonian polynomial E_d(x, y) by enumerating S_d.
    Em {
        #[arg(long)]
        d: usize,
    },
    /// F_d(x, y) from the two-variable recursion.
    Recursion {
        #[arg(long)]
        d: usize,
    },
    /// Closed-form diamond generating function.
    Sigma(SigmaArgs),
    /// Cross-check a closed formula against independent computations.
    Verify {
        #[command(subcommand)]
        target: Target,
    },
    /// P-partition generating function of a poset file.
    Ppartition {
        file: PathBuf,
        #[arg(long)]
        trunc: u32,
        /// Also enumerate P-partitions directly and compare.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Args)]
struct SigmaArgs {
    /// Folds per block of a uniform diamond.
    #[arg(long, requires = "length", conflicts_with = "folds")]
    d: Option<usize>,
    /// Number of blocks.
    #[arg(long = "M", id = "length")]
    length: Option<usize>,
    /// Fold sequence of a multifold diamond, e.g. 1,2.
    #[arg(long, value_delimiter = ',', conflicts_with = "length")]
    folds: Option<Vec<usize>>,
    #[arg(long)]
    trunc: u32,
    /// Specialize a = b = q.
    #[arg(long, conflicts_with = "schmidt")]
    a_eq_b: bool,
    /// Specialize a = 1 (weight links only).
    #[arg(long)]
    schmidt: bool,
}

#[derive(Subcommand)]
enum Target {
    /// F_d = E_d for all d <= dmax.
    Theorem1 {
        #[arg(long, default_value_t = 7)]
        dmax: usize,
    },
    /// Uniform diamond: closed = linear-extension sum = enumeration.
    Main {
        #[arg(long)]
        d: usize,
        #[arg(long = "M")]
        length: usize,
        #[arg(long, default_value_t = 10)]
        trunc: u32,
    },
    /// Multifold diamond: closed = linear-extension sum = enumeration.
    Multifold {
        #[arg(long, value_delimiter = ',', required = true)]
        folds: Vec<usize>,
        #[arg(long, default_value_t = 8)]
        trunc: u32,
    },
    /// Schmidt-type series: closed = enumeration = infinite product.
    Schmidt {
        #[arg(long)]
        d: usize,
        #[arg(long = "M", default_value_t = 10)]
        length: usize,
        #[arg(long, default_value_t = 10)]
        trunc: u32,
    },
    /// Linear-extension formula vs enumeration on random posets.
    Stanley {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 7)]
        max_size: usize,
        #[arg(long, default_value_t = 8)]
        trunc: u32,
    },
    /// Plane partition diamond product vs enumeration.
    Apr {
        #[arg(long, default_value_t = 20)]
        trunc: u32,
    },
    /// Infinite d-fold product vs enumeration.
    #[command(name = "djsw-product")]
    DjswProduct {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 12)]
        trunc: u32,
    },
}

/// Successful output, or a mathematical mismatch that still prints a report.
enum Outcome {
    Done(String),
    Mismatch(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let guards = if cli.force { Guards::none() } else { Guards::default() };
    match run(&cli, &guards) {
        Ok(Outcome::Done(text)) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Mismatch(text)) => {
            println!("{text}");
            ExitCode::from(1)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli, guards: &Guards) -> Result<Outcome, String> {
    let json = cli.json;
    match &cli.command {
        Command::Em { d } => {
            let p = euler_mahonian_guarded(*d, guards.max_d).map_err(|e| e.to_string())?;
            Ok(Outcome::Done(if json { p.to_json().to_string() } else { p.render(XY) }))
        }
        Command::Recursion { d } => {
            let p = djsw_recursion(*d).map_err(|e| e.to_string())?;
            Ok(Outcome::Done(if json { p.to_json().to_string() } else { p.render(XY) }))
        }
        Command::Sigma(args) => sigma(args, json, guards).map_err(|e| e.to_string()),
        Command::Verify { target } => {
            let mut report = run_target(target, guards).map_err(|e| e.to_string())?;
            report.command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
            Ok(render_report(&report, json))
        }
        Command::Ppartition { file, trunc, oracle } => {
            let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
            let (poset, tags) =
                parse_poset_file(&text).map_err(|e| format!("{}: {e}", file.display()))?;
            let series = stanley_sigma(&poset, &tags, *trunc, guards.max_poset_size)
                .map_err(|e| e.to_string())?;
            if !oracle {
                return Ok(Outcome::Done(if json {
                    series.to_json().to_string()
                } else {
                    series.to_string()
                }));
            }
            let brute = enumerate_ppartitions(&poset, &tags, *trunc).map_err(|e| e.to_string())?;
            let matched = brute == series;
            let out = if json {
                serde_json::json!({
                    "stanley": series.to_json(),
                    "oracle": brute.to_json(),
                    "match": matched,
                })
                .to_string()
            } else {
                format!(
                    "stanley: {series}\noracle:  {brute}\n{}",
                    if matched { "MATCH" } else { "MISMATCH" }
                )
            };
            Ok(if matched { Outcome::Done(out) } else { Outcome::Mismatch(out) })
        }
    }
}

fn sigma(args: &SigmaArgs, json: bool, guards: &Guards) -> Result<Outcome, Error> {
    let spec = match (&args.folds, args.d, args.length) {
        (Some(folds), _, _) => DiamondSpec::new(folds.clone())?,
        (None, Some(d), Some(m)) => DiamondSpec::uniform(d, m)?,
        _ => {
            return Err(diamonds::poset::PosetError::InvalidSpec(
                "give either --d with --M, or --folds".into(),
            )
            .into())
        }
    };
    if args.schmidt {
        let s = match args.folds {
            Some(_) => schmidt_multifold_closed(&spec, args.trunc, guards)?,
            None => schmidt_closed_guarded(spec.fold(1), spec.length(), args.trunc, guards)?,
        };
        return Ok(Outcome::Done(uni_out(&s, json)));
    }
    let rational = match args.folds {
        Some(_) => multifold_rational(&spec, guards)?,
        None => sigma_rational(spec.fold(1), spec.length(), guards)?,
    };
    let series = rational.expand(args.trunc);
    Ok(Outcome::Done(if args.a_eq_b {
        uni_out(&series.specialize_univariate(), json)
    } else {
        bi_out(&series, json)
    }))
}

fn uni_out(s: &UniSeries, json: bool) -> String {
    if json {
        s.to_json().to_string()
    } else {
        s.to_string()
    }
}

fn bi_out(s: &TruncSeries2, json: bool) -> String {
    if json {
        s.to_json().to_string()
    } else {
        s.to_string()
    }
}

fn run_target(target: &Target, guards: &Guards) -> Result<VerifyReport, Error> {
    match target {
        Target::Theorem1 { dmax } => verify::theorem1(*dmax, guards),
        Target::Main { d, length, trunc } => verify::main_theorem(*d, *length, *trunc, guards),
        Target::Multifold { folds, trunc } => {
            verify::multifold(&DiamondSpec::new(folds.clone())?, *trunc, guards)
        }
        Target::Schmidt { d, length, trunc } => verify::schmidt(*d, *length, *trunc, guards),
        Target::Stanley {
            seed,
            count,
            max_size,
            trunc,
        } => verify::stanley_corpus(*seed, *count, *max_size, *trunc, guards),
        Target::Apr { trunc } => verify::apr(*trunc, guards),
        Target::DjswProduct { d, trunc } => verify::djsw(*d, *trunc, guards),
    }
}

fn render_report(report: &VerifyReport, json: bool) -> Outcome {
    let text = if json {
        serde_json::to_string_pretty(&report.to_json()).expect("report serializes")
    } else {
        report.render_text()
    };
    if report.passed() {
        Outcome::Done(text)
    } else {
        Outcome::Mismatch(text)
    }
}
