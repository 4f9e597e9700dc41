use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use scrollar_lab::analyze::analyze;
use scrollar_lab::gen::{gen_curve, GenArgs};
use scrollar_lab::predict::{predict, PredictArgs};
use scrollar_lab::verify::{verify, Check, VerifyArgs};
use scrollar_lab::{LabError, Result};

#[derive(Parser, Debug)]
#[command(name = "scrollar-lab", version, about = "Scrollar invariants of covers of the projective line")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form volumes, bounds and resolvent genera.
    Predict {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        g: Option<i64>,
        /// Catalog name (e.g. d4, pair-sum) or `;`-separated generators.
        #[arg(long)]
        subgroup: Option<String>,
        /// A partition such as [2,2,2].
        #[arg(long)]
        partition: Option<String>,
        /// Syzygy step whose Schreyer interval to print; needs --g.
        #[arg(long)]
        schreyer_interval: Option<i64>,
    },
    /// Genus, scrollar invariants and ramification of a curve file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        emit_profile_table: bool,
        #[arg(long)]
        assert_irreducible: bool,
    },
    /// Compare a prediction with a computation on a curve file.
    Verify {
        file: PathBuf,
        #[arg(long)]
        check: String,
        #[arg(long)]
        subgroup: Option<String>,
        #[arg(long)]
        partition: Option<String>,
        /// c,e of the Hirzebruch surface the curve lies on.
        #[arg(long)]
        hirzebruch: Option<String>,
        #[arg(long)]
        assert_irreducible: bool,
        /// Include wall-clock runtime in the record.
        #[arg(long)]
        timing: bool,
    },
    /// Random curve on a Hirzebruch surface, written as a curve file.
    GenCurve {
        #[arg(long)]
        c: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        e: usize,
        #[arg(long, default_value_t = 1009)]
        p: u64,
        #[arg(long)]
        allow_good: bool,
        /// Write the curve here and print a summary instead of the curve.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_pair(s: &str) -> Result<(i64, i64)> {
    let bad = || LabError::Usage(format!("expected `c,e`, found `{s}`"));
    let (c, e) = s.split_once(',').ok_or_else(bad)?;
    Ok((c.trim().parse().map_err(|_| bad())?, e.trim().parse().map_err(|_| bad())?))
}

fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")));
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Predict { d, g, subgroup, partition, schreyer_interval } => {
            print(&predict(&PredictArgs { d, g, subgroup, partition, schreyer_interval })?);
        }
        Command::Analyze { file, emit_profile_table, assert_irreducible } => {
            print(&analyze(&file, emit_profile_table, assert_irreducible, cli.seed)?);
        }
        Command::Verify { file, check, subgroup, partition, hirzebruch, assert_irreducible, timing } => {
            let check = Check::parse(&check)?;
            let hirzebruch = hirzebruch.as_deref().map(parse_pair).transpose()?;
            let args = VerifyArgs { subgroup, partition, hirzebruch, assert_irreducible, timing, seed: cli.seed };
            let outcome = verify(&file, check, &args)?;
            print(&outcome.json);
            if outcome.failed() {
                return Ok(ExitCode::from(5));
            }
        }
        Command::GenCurve { c, d, e, p, allow_good, out } => {
            let (curve, summary) = gen_curve(&GenArgs { c, d, e, p, seed: cli.seed, allow_good })?;
            match out {
                Some(path) => {
                    std::fs::write(&path, curve.to_text())
                        .map_err(|source| LabError::Io { path: path.display().to_string(), source })?;
                    print(&summary);
                }
                None => emit(&curve.to_text()),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
