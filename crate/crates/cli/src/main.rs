use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use clsforge::demo::{self, DemoMode, DemoScheme};
use clsforge::game::{self, Script};
use clsforge::keyfile;
use clsforge::pairing::{parse_suite_id, Suite};

#[derive(Parser)]
#[command(
    name = "clsforge",
    version,
    about = "Certificateless signature schemes and their forgeries"
)]
struct Cli {
    /// Pairing backend; `mock<q>` for the exponent-transparent backend of order q.
    #[arg(
        long,
        env = "CLSFORGE_BACKEND",
        default_value = "mock101",
        global = true
    )]
    backend: String,

    /// Group order, overriding the backend's.
    #[arg(long, global = true)]
    q: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Setup, extraction, keys, sign and verify, then the scheme's attacks.
    Demo {
        #[arg(long)]
        scheme: DemoScheme,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Reproduce the fixture vectors: pinned hashes and fixed scalars.
        #[arg(long)]
        pinned_hash: bool,
        /// Write the report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a scripted adversary inside its security game.
    Attack {
        script: Script,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Transcript path; printed to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-execute a transcript against a fresh challenger.
    VerifyTranscript { path: PathBuf },
    /// Generate a key pair for one identity.
    Keygen {
        #[arg(long)]
        scheme: DemoScheme,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        id: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn order(cli: &Cli) -> Result<u64> {
    let q = match cli.q {
        Some(q) => q,
        None => {
            parse_suite_id(&cli.backend).with_context(|| format!("backend `{}`", cli.backend))?
        }
    };
    Suite::mock(q).with_context(|| format!("--q {q}"))?;
    Ok(q)
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let q = order(&cli)?;
    match &cli.command {
        Command::Demo {
            scheme,
            seed,
            pinned_hash,
            out,
        } => {
            let mode = if *pinned_hash {
                DemoMode::Pinned
            } else {
                DemoMode::Seeded(*seed)
            };
            let report = demo::run(*scheme, mode, q)?;
            print!("{}", report.to_text());
            if let Some(path) = out {
                emit(Some(path), &report.to_json())?;
            }
            Ok(report.all_valid())
        }
        Command::Attack { script, seed, out } => {
            let (transcript, outcome) = game::run_script(*script, &Suite::mock(q)?, *seed)?;
            emit(out.as_ref(), &transcript.to_json())?;
            if outcome.is_win() {
                eprintln!("{script} seed {seed}: {outcome}");
            } else {
                eprintln!("{script} seed {seed}: {outcome}, the forgery does not count");
            }
            Ok(outcome.is_win())
        }
        Command::VerifyTranscript { path } => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            match game::verify_transcript(&text) {
                Ok(outcome) => {
                    println!("{}: reproduced, {outcome}", path.display());
                    Ok(true)
                }
                Err(e) => bail!("{}: {e}", path.display()),
            }
        }
        Command::Keygen {
            scheme,
            seed,
            id,
            out,
        } => {
            if id.is_empty() {
                bail!("--id must be nonempty");
            }
            let file = keyfile::keygen(*scheme, &Suite::mock(q)?, *seed, id)?;
            emit(out.as_ref(), &file.to_json())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
