use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use snc_milnor_cli::input::Mode;
use snc_milnor_cli::verify::{format_outcome, run_verify, Budget, VerifyConfig};
use snc_milnor_cli::{format_report, run_file, Format};

/// Exact Milnor fiber cohomology for hypersurfaces with normal crossings
/// outside a point.
#[derive(Parser)]
#[command(name = "snc-milnor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct FileArgs {
    /// JSON input file.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers, characteristic polynomials and zeta function of a cone-type singularity.
    Cone(FileArgs),
    /// Low-degree Betti numbers and bounds for normal crossings outside the point.
    SncLink(FileArgs),
    /// Search a resolution graph for a non-semisimplicity witness on H^1.
    Jordan(FileArgs),
    /// Check Milnor fiber and link cohomology ranks for consistency.
    RankCheck(FileArgs),
    /// Re-check every identity over exhaustive and seeded random inputs.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Budget::Full)]
        budget: Budget,
    },
}

fn color_enabled() -> bool {
    std::env::var("SNC_MILNOR_COLOR").map_or(true, |v| v != "0") && std::io::stdout().is_terminal()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (args, mode) = match cli.command {
        Command::Cone(a) => (a, Mode::Cone),
        Command::SncLink(a) => (a, Mode::SncLink),
        Command::Jordan(a) => (a, Mode::Jordan),
        Command::RankCheck(a) => (a, Mode::RankCheck),
        Command::Verify { seed, budget } => {
            let outcomes = run_verify(&VerifyConfig::new(seed, budget));
            let mut ok = true;
            for o in &outcomes {
                println!("{}", format_outcome(o));
                ok &= o.passed;
            }
            println!("{} of {} checks passed (seed {seed})", outcomes.iter().filter(|o| o.passed).count(), outcomes.len());
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(2) };
        }
    };
    match run_file(&args.input, mode) {
        Ok(report) => {
            print!("{}", format_report(&report, args.format, color_enabled()));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
