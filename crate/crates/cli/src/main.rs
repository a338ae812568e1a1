//! `hurewicz`: homology, fundamental groups, smash products and the
//! verification suite from the command line.

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use report::Status;

#[derive(Parser, Debug)]
#[command(name = "hurewicz", version, about = "Exact homology and Hurewicz checks on finite simplicial sets")]
pub struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Truncation dimension for named spaces; defaults to the smallest that serves the command.
    #[arg(short = 'D', long, global = true, value_name = "D")]
    truncation: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
pub struct CoeffArg {
    /// Coefficient group, e.g. `Z`, `Z/4`, `Z + Z/3`.
    #[arg(long, default_value = "Z")]
    coeff: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Homology of a space in one degree.
    Homology {
        space: String,
        #[command(flatten)]
        coeff: CoeffArg,
        #[arg(long)]
        degree: usize,
        /// Reduced homology.
        #[arg(long)]
        reduced: bool,
    },
    /// Edge-path presentation of the fundamental group.
    Pi1 { space: String },
    /// Abelianization of a presentation such as `< x, y | x^2 y^-3 >`.
    Abelianize { presentation: String },
    /// Tensor product of two groups.
    Tensor { left: String, right: String },
    /// Smash product of two spaces and its reduced homology.
    Smash {
        left: String,
        right: String,
        #[command(flatten)]
        coeff: CoeffArg,
        /// Print the complex in the textual format.
        #[arg(long)]
        emit: bool,
    },
    /// Suspension `S¹ ∧ X` and its reduced homology.
    Suspend {
        space: String,
        #[command(flatten)]
        coeff: CoeffArg,
        #[arg(long)]
        emit: bool,
    },
    /// The degree-one Hurewicz map and its isomorphism certificate.
    Hurewicz {
        space: String,
        #[command(flatten)]
        coeff: CoeffArg,
    },
    /// Stable homology as the colimit of the suspension diagram.
    Stable {
        space: String,
        #[command(flatten)]
        coeff: CoeffArg,
        #[arg(long)]
        degree: usize,
        /// Number of suspension levels.
        #[arg(long, default_value_t = 3)]
        levels: usize,
        /// First index of the colimit; defaults to max(0, 2 - degree).
        #[arg(long)]
        start: Option<usize>,
    },
    /// Run the acceptance checks and report one line per criterion.
    VerifySuite {
        /// Only criteria whose name contains this string (or whose number equals it).
        #[arg(long)]
        filter: Option<String>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
            } else {
                for line in &report.lines {
                    println!("{line}");
                }
            }
            match report.status {
                Status::Ok => ExitCode::SUCCESS,
                Status::VerificationFailed => ExitCode::from(1),
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", serde_json::json!({ "error": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
    }
}
