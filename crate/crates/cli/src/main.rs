use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use m2chow::pipeline::{check_ids, explain, find_check, registry, verify_all, RunConfig, Status};

#[derive(Parser)]
#[command(name = "m2chow", version, about = "Re-verify the integral Chow ring of M2bar")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run checks and report pass/fail.
    Verify {
        /// Run every check (the default).
        #[arg(long, conflicts_with = "check")]
        all: bool,
        /// Run only these checks.
        #[arg(long = "check", value_name = "ID", num_args = 1..)]
        check: Vec<String>,
        #[arg(long, default_value_t = 10)]
        max_degree: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Stop at the first failing check.
        #[arg(long)]
        fail_fast: bool,
    },
    /// Show the statement, claims, dependencies and witness of one check.
    Explain {
        id: String,
        #[arg(long, default_value_t = 10)]
        max_degree: u32,
    },
    /// List check ids with their anchors.
    ListChecks,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn unknown(id: &str) -> ExitCode {
    eprintln!("unknown check id `{id}`; valid ids:");
    for i in check_ids() {
        eprintln!("  {i}");
    }
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::ListChecks => {
            for c in registry() {
                println!("{:<20} {:<14} {}", c.id, c.anchor, c.statement);
            }
            ExitCode::SUCCESS
        }
        Command::Explain { id, max_degree } => {
            if find_check(&id).is_none() {
                return unknown(&id);
            }
            match explain(&id, max_degree) {
                Ok(e) => {
                    println!("{e}");
                    if e.result.status == Status::Pass {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Verify {
            all: _,
            check,
            max_degree,
            format,
            fail_fast,
        } => {
            if let Some(bad) = check.iter().find(|id| find_check(id).is_none()) {
                return unknown(bad);
            }
            let config = RunConfig {
                selected: (!check.is_empty()).then_some(check),
                max_degree,
                fail_fast,
                fault: None,
            };
            let report = match verify_all(&config) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            match format {
                Format::Json => match serde_json::to_string_pretty(&report.records()) {
                    Ok(s) => println!("{s}"),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                },
                Format::Text => {
                    for c in &report.checks {
                        println!(
                            "{:<4} {:<20} [{}] {:.1} ms",
                            c.status.to_string().to_uppercase(),
                            c.id,
                            c.anchor,
                            c.elapsed.as_secs_f64() * 1e3
                        );
                        if c.status == Status::Fail {
                            for l in c.witness.lines().filter(|l| l.starts_with("[FAIL]")) {
                                println!("       {l}");
                            }
                        }
                    }
                    let failed = report.failed();
                    println!(
                        "{} of {} checks passed",
                        report.checks.len() - failed.len(),
                        report.checks.len()
                    );
                }
            }
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
