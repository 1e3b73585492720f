//! `clawdec`: claw and k-star decompositions from the command line.
//!
//! Every subcommand except `convert` prints one JSON run report. Exit
//! status 0 means success, 2 a verified negative answer (a certificate was
//! issued), 1 an error; errors print only a message on stderr.

mod commands;
mod input;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "clawdec", version, about = "Claw and k-star decompositions of graphs")]
pub struct Cli {
    /// Worker threads for enumerate, survey and connectivity (0: all cores).
    #[arg(long, global = true, env = "CLAWDEC_WORKERS", default_value_t = 0)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether a graph has a k-star-decomposition.
    Decide {
        file: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Orient a graph under in-degree bounds or modulo-k residues.
    Orient {
        file: String,
        #[arg(long, value_enum)]
        mode: OrientMode,
        /// Whitespace-separated bound or residue per vertex.
        #[arg(long)]
        p: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Edge and vertex connectivity, optionally an essential threshold.
    Connectivity {
        file: String,
        #[arg(long)]
        essential: Option<usize>,
    },
    /// Build and verify one of the counterexample families.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Enumerate connected d-regular graphs.
    Enumerate(EnumerateArgs),
    /// Count connected 4-regular graphs of order n without claw-decompositions.
    Survey(SurveyArgs),
    /// Re-verify the claims about a registered graph.
    VerifyKnown {
        #[arg(long)]
        name: String,
    },
    /// Convert between graph6, edge list and DOT.
    Convert {
        file: String,
        #[arg(long, value_enum)]
        to: Format,
    },
}

#[derive(Subcommand, Debug)]
pub enum FamilyCommand {
    /// G_48n from a block file.
    G48n {
        #[arg(long)]
        block: String,
        #[arg(long)]
        n: usize,
    },
    /// C_(kn) x K_(2k-3).
    Product {
        #[arg(long)]
        k: usize,
        /// n, so that the cycle has k*n vertices.
        #[arg(long = "kn-cycles")]
        n: usize,
    },
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    /// Include disconnected graphs.
    #[arg(long)]
    pub all: bool,
    /// Write the graphs here, one graph6 line each.
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Args, Debug)]
pub struct SurveyArgs {
    #[arg(long)]
    pub n: usize,
    /// Permit orders of 18 and above.
    #[arg(long)]
    pub allow_large: bool,
    /// Append finished subtrees here and skip the ones already listed.
    #[arg(long)]
    pub checkpoint: Option<String>,
    /// Write the witnesses here, one graph6 line each.
    #[arg(long)]
    pub witnesses: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientMode {
    Hakimi,
    Modk,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Edgelist,
    Dot,
}

#[derive(Serialize)]
struct RunReport<'a> {
    command: &'a str,
    inputs: Value,
    outcome: Value,
    versions: Value,
    wall_time_ms: u64,
}

/// What a command produced before it is wrapped in a report.
pub struct Outcome {
    pub command: &'static str,
    pub inputs: Value,
    pub payload: Payload,
    pub negative: bool,
}

pub enum Payload {
    Json(Value),
    Text(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    match commands::run(&cli) {
        Ok(out) => {
            match out.payload {
                Payload::Text(t) => print!("{t}"),
                Payload::Json(outcome) => {
                    let report = RunReport {
                        command: out.command,
                        inputs: out.inputs,
                        outcome,
                        versions: serde_json::json!({ "clawdec": env!("CARGO_PKG_VERSION") }),
                        wall_time_ms: start.elapsed().as_millis() as u64,
                    };
                    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
                }
            }
            ExitCode::from(if out.negative { 2 } else { 0 })
        }
        Err(e) => {
            eprintln!("clawdec: {e}");
            ExitCode::from(1)
        }
    }
}
