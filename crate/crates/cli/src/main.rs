//! Command-line driver: every verification suite and report generator, with
//! machine-readable output and deterministic exit codes.
//!
//! Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 invalid
//! parameters, 3 resource guard exceeded.

use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::process::ExitCode;
use wbrauer::rational::{parse_rat, Rat};
use wbrauer::report::Report;
use wbrauer::suites::{self, Corruption};
use wbrauer::Error;

fn rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn corrupt_arg(s: &str) -> Result<Corruption, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Parser)]
#[command(
    name = "wbrauer",
    about = "Exact verification suites for walled Brauer algebras, their affine tower, \
             and the level-two matrix realization",
    version
)]
struct Cli {
    /// Write the machine-readable report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    /// Report format; classification defaults to tsv, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for relation fan-out (default: WBRAUER_WORKERS or all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Deliberately corrupt a generator; the suite must then fail (testing aid).
    #[arg(long, global = true, value_parser = corrupt_arg)]
    corrupt: Option<Corruption>,
    #[command(subcommand)]
    command: Command,
}

fn report_tsv(report: &Report) -> String {
    let mut out = String::from("id\tanchor\tstatus\twitness\n");
    for rec in &report.records {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            rec.id,
            rec.anchor,
            if rec.passed() { "pass" } else { "fail" },
            rec.witness.as_deref().unwrap_or("")
        ));
    }
    out
}

#[derive(Args)]
struct SizeArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    t: usize,
}

#[derive(Args)]
struct RealizationArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    t: usize,
    #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
    p: Rat,
    #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
    q: Rat,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining relations of B_{r,t}(delta) on diagrams.
    VerifyDiagrams {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        delta: Rat,
    },
    /// Check the Jucys-Murphy tower identities and omega extraction.
    VerifyTower {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        delta: Rat,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        delta1: Rat,
    },
    /// Check the affine presentation through the shift homomorphism.
    VerifyPhi {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        delta: Rat,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true)]
        omega1: Rat,
    },
    /// Certify independence of bounded-degree regular monomials.
    VerifyFreeness {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long)]
        degree: u32,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true, default_value = "5")]
        delta: Rat,
        #[arg(long, value_parser = rat_arg, allow_hyphen_values = true, default_value = "7")]
        omega1: Rat,
    },
    /// Check the matrix realization on the gl(m|n) tensor module.
    VerifySchurWeyl {
        #[command(flatten)]
        args: RealizationArgs,
    },
    /// Build the weakly cellular basis and check its structure.
    CellularBasis {
        #[command(flatten)]
        args: RealizationArgs,
    },
    /// Gram matrices of every cell module.
    Gram {
        #[command(flatten)]
        args: RealizationArgs,
    },
    /// Classify the irreducibles (TSV output).
    Classify {
        #[command(flatten)]
        args: RealizationArgs,
    },
    /// Compare the semisimplicity criterion with Gram nonsingularity.
    Semisimple {
        #[command(flatten)]
        args: RealizationArgs,
    },
}

fn emit(out: &Option<std::path::PathBuf>, payload: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, payload),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(payload.as_bytes())
        }
    }
}

fn finish_report(
    out: &Option<std::path::PathBuf>,
    format: Option<Format>,
    report: Report,
) -> ExitCode {
    let payload = match format.unwrap_or(Format::Json) {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Tsv => report_tsv(&report),
    };
    if emit(out, &payload).is_err() {
        eprintln!("failed to write report");
        return ExitCode::from(2);
    }
    eprint!("{}", report.human_summary());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn error_code(e: &Error) -> ExitCode {
    match e {
        Error::ResourceGuard(_) => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli.workers.or_else(|| {
        std::env::var("WBRAUER_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(w) = workers {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build_global()
            .is_err()
        {
            eprintln!("warning: worker pool already configured");
        }
    }
    let corrupt = cli.corrupt;
    let result: Result<Report, Error> = match &cli.command {
        Command::VerifyDiagrams { size, delta } => {
            suites::diagram_suite(size.r, size.t, delta, corrupt)
        }
        Command::VerifyTower {
            size,
            delta,
            delta1,
        } => suites::tower_suite(size.r, size.t, delta, delta1, corrupt),
        Command::VerifyPhi {
            size,
            k,
            delta,
            omega1,
        } => suites::phi_suite(size.r, size.t, *k, delta, omega1, corrupt),
        Command::VerifyFreeness {
            size,
            degree,
            delta,
            omega1,
        } => suites::freeness_suite(size.r, size.t, *degree, delta, omega1, corrupt),
        Command::VerifySchurWeyl { args } => {
            suites::schur_weyl_suite(args.m, args.n, args.r, args.t, &args.p, &args.q, corrupt)
        }
        Command::CellularBasis { args } => {
            suites::cellular_suite(args.m, args.n, args.r, args.t, &args.p, &args.q, corrupt)
        }
        Command::Gram { args } => {
            suites::gram_suite(args.m, args.n, args.r, args.t, &args.p, &args.q)
        }
        Command::Classify { args } => {
            return match suites::classification(args.m, args.n, args.r, args.t, &args.p, &args.q) {
                Ok(c) => {
                    let payload = match cli.format.unwrap_or(Format::Tsv) {
                        Format::Tsv => c.to_tsv(),
                        Format::Json => format!("{}\n", c.to_json()),
                    };
                    if emit(&cli.out, &payload).is_err() {
                        eprintln!("failed to write table");
                        return ExitCode::from(2);
                    }
                    eprintln!(
                        "classified {} irreducible labels{}",
                        c.irreducible_labels().len(),
                        if c.faithful {
                            ""
                        } else {
                            " (no faithful realization; Gram columns NA)"
                        }
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    error_code(&e)
                }
            };
        }
        Command::Semisimple { args } => {
            suites::semisimple_suite(args.m, args.n, args.r, args.t, &args.p, &args.q, corrupt)
        }
    };
    match result {
        Ok(report) => finish_report(&cli.out, cli.format, report),
        Err(e) => {
            eprintln!("error: {e}");
            error_code(&e)
        }
    }
}
