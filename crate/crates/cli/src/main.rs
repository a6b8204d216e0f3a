use std::path::PathBuf;
use std::process::ExitCode;

use biliaison_cli::commands::{self, Outcome, SurfaceSpec};
use biliaison_cli::suite::Level;
use biliaison_cli::{CliError, CliResult, IdealFile};
use clap::{Parser, Subcommand};

const DEFAULT_SEED: u64 = 42;

#[derive(Parser)]
#[command(name = "biliaison", version, about = "Biliaison of space curves over prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Saturation, degree, genus, Betti table and Rao module of an ideal.
    Info { file: PathBuf },
    /// Basic double link on a surface through the curve.
    Bdl {
        file: PathBuf,
        /// Index of the surface among the file's generators.
        #[arg(long, conflicts_with = "surface")]
        generator: Option<usize>,
        /// The surface as a polynomial.
        #[arg(long)]
        surface: Option<String>,
        #[arg(long)]
        height: i32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Strictly descending biliaisons down to a minimal curve.
    Descend {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Decide whether two curves lie in one biliaison class.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// N-type resolution of a curve.
    Ntype { file: PathBuf },
    /// The triple (M, P, alpha) of a curve's extraverti module.
    Triple {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Height-zero chain between two minimal curves of one class.
    ConnectMinimal {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Built-in checks: quick, full or acceptance.
    Selftest {
        #[arg(long, default_value = "quick", value_parser = ["quick", "full", "acceptance"])]
        level: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn run(cli: Cli) -> CliResult<Outcome> {
    let read = |p: &PathBuf| IdealFile::read(p);
    match cli.command {
        Command::Info { file } => commands::info(&read(&file)?),
        Command::Bdl {
            file,
            generator,
            surface,
            height,
            seed,
        } => {
            let spec = match (generator, surface) {
                (Some(i), None) => SurfaceSpec::Generator(i),
                (None, Some(s)) => SurfaceSpec::Text(s),
                _ => return Err(CliError::Invalid("give exactly one of --generator and --surface".into())),
            };
            commands::bdl(&read(&file)?, &spec, height, seed)
        }
        Command::Descend { file, seed } => commands::descend(&read(&file)?, seed),
        Command::Equiv { first, second, seed } => commands::equiv(&read(&first)?, &read(&second)?, seed),
        Command::Ntype { file } => commands::ntype(&read(&file)?),
        Command::Triple { file, seed } => commands::triple(&read(&file)?, seed),
        Command::ConnectMinimal { first, second, seed } => commands::connect(&read(&first)?, &read(&second)?, seed),
        Command::Selftest { level, seed } => commands::selftest(Level::parse(&level).expect("validated by clap"), seed),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            println!("{}", out.report.to_json());
            for a in out.report.failures() {
                eprintln!("assertion failed: {}: {}", a.name, a.details);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
