//! `apw`: anti-power words and morphisms from the command line.
//!
//! Exit codes: 0 property holds / Yes, 1 property fails / No,
//! 2 inconclusive, 3 usage or parse error.

mod commands;
mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use apw_core::word::Rational;
use clap::{Args, Parser, Subcommand};

use report::USAGE_EXIT;

#[derive(Debug, Parser)]
#[command(
    name = "apw",
    version,
    about = "Anti-power words, power-freeness and morphism decisions"
)]
struct Cli {
    /// Print a single JSON report instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check whether a word is k-anti-power.
    CheckWord(CheckWord),
    /// Decide whether a morphism maps k-anti-power words to k-anti-power words.
    CheckMorphism {
        #[arg(long)]
        k: usize,
        /// Length bound for bounded evidence searches.
        #[arg(long, default_value_t = apw_core::decide::DEFAULT_EVIDENCE_LEN)]
        evidence: usize,
        file: PathBuf,
    },
    /// Classify a morphism (uniform, prefix, suffix, bifix, ps).
    Profile { file: PathBuf },
    /// Print a prefix of the fixed point of a morphism.
    Generate {
        file: PathBuf,
        #[arg(long)]
        start: char,
        #[arg(long)]
        length: usize,
    },
    /// Generate a fixed-point prefix and check that it is k-anti-power.
    VerifyPrefix {
        file: PathBuf,
        #[arg(long)]
        start: char,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        k: usize,
        /// Use the letter-by-letter reference checker.
        #[arg(long)]
        naive: bool,
    },
    /// List every k-anti-power word up to a length.
    Enumerate {
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_len: usize,
    },
    /// Count (k, n)-anti-power sequences over an alphabet of size A.
    Count {
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Largest exponent of a repetition in a word.
    Exponent {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Find a factor whose exponent reaches a threshold p/q.
    FindPower {
        #[arg(long)]
        threshold: Rational,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Debug, Args)]
struct CheckWord {
    #[arg(long)]
    k: usize,
    /// Use the letter-by-letter reference checker.
    #[arg(long)]
    naive: bool,
    /// Read the word from standard input.
    #[arg(long, conflicts_with = "word")]
    stdin: bool,
    #[arg(allow_hyphen_values = true, required_unless_present = "stdin")]
    word: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE_EXIT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let started = Instant::now();
    match commands::run(cli.command) {
        Ok(output) => {
            let mut stdout = io::stdout().lock();
            if let Err(e) = output
                .emit(cli.json, started.elapsed(), &mut stdout)
                .and_then(|_| stdout.flush())
            {
                if e.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(USAGE_EXIT as u8);
                }
            }
            ExitCode::from(output.outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_EXIT as u8)
        }
    }
}
