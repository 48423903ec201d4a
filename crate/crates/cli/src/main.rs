use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sixpoint_cli::{
    exit, replay_trial, run_area, run_check, run_construct, run_embed, run_fuzz, CliError, Format,
    FuzzConfig, Outcome, RawConfig,
};
use sixpoint_core::Registry;

/// Exact Ceva, Menelaus and Routh calculator with a construction oracle.
#[derive(Parser)]
#[command(name = "sixpoint", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate concurrence/collinearity criteria.
    Check(InputArgs),
    /// Evaluate signed area-ratio formulas.
    Area(InputArgs),
    /// Print exact coordinates of every constructed point and line.
    Construct(InputArgs),
    /// Embed cevian ratios as six ratios and compare both theorem families.
    Embed(InputArgs),
    /// Differential fuzzing of formulas against the construction oracle.
    Fuzz(FuzzArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Comma-separated `name=value` ratios, e.g. `d=2,e=2,f=2`.
    #[arg(long)]
    ratios: Option<String>,
    /// Triangle vertices `x,y;x,y;x,y` with exact fractions.
    #[arg(long)]
    triangle: Option<String>,
    /// Criterion or area formula name.
    #[arg(long)]
    mode: Option<String>,
    /// `key = value` config file; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Bound on numerators and denominators of generated values.
    #[arg(long, default_value_t = 50)]
    max_magnitude: i64,
    /// `all` or one criterion/area formula name.
    #[arg(long, alias = "scope", default_value = "all")]
    mode: String,
    /// Run only this trial index and echo its inputs.
    #[arg(long)]
    replay: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

fn load(args: &InputArgs) -> sixpoint_cli::Result<sixpoint_cli::ConfigDoc> {
    let file = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            RawConfig::parse(&text)?
        }
        None => RawConfig::default(),
    };
    let mut flags = RawConfig {
        mode: args.mode.clone(),
        triangle: args.triangle.clone(),
        ..Default::default()
    };
    if let Some(r) = &args.ratios {
        flags.set_ratios(r)?;
    }
    file.merge(flags).resolve()
}

fn run(command: Command) -> sixpoint_cli::Result<(Outcome, Format)> {
    let registry = Registry::builtin();
    match command {
        Command::Check(a) => Ok((run_check(&registry, &load(&a)?)?, a.format)),
        Command::Area(a) => Ok((run_area(&registry, &load(&a)?)?, a.format)),
        Command::Construct(a) => Ok((run_construct(&load(&a)?)?, a.format)),
        Command::Embed(a) => Ok((run_embed(&registry, &load(&a)?)?, a.format)),
        Command::Fuzz(f) => {
            let cfg = FuzzConfig {
                trials: f.trials,
                seed: f.seed,
                max_magnitude: f.max_magnitude,
                scope: f.mode,
            };
            let outcome = match f.replay {
                Some(index) => replay_trial(&registry, &cfg, index)?,
                None => run_fuzz(&registry, &cfg)?,
            };
            Ok((outcome, f.format))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::SUCCESS
            };
            return ExitCode::from(code as u8);
        }
    };
    match run(cli.command) {
        Ok((outcome, format)) => {
            print!("{}", outcome.report.render(format));
            let code = if outcome.disagreement {
                exit::DISAGREEMENT
            } else {
                exit::SUCCESS
            };
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit::USAGE as u8)
        }
    }
}
