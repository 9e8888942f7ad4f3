//! `nestlat`: canonical forms, nest tuples, bimodule classification and
//! finite enumeration from the command line.
//!
//! Exit status is 0 on success, 1 when a mathematical precondition fails and
//! 2 on malformed input or arguments. Errors are printed as `{"error": ...}`.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nestlat::oracle::ClosureKind;
use nestlat::{app, json, BlockShape, Error, RingDescriptor, Side};

#[derive(Parser)]
#[command(name = "nestlat", version, about = "Submodule lattices of matrix and nest modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Left-row or right-column reduced echelon form of a matrix.
    Echelon {
        #[arg(long, value_parser = parse::<Side>)]
        side: Side,
        #[arg(long)]
        input: PathBuf,
    },
    /// Canonical representative of the submodule of M_{m×n} spanned by generators.
    Phi {
        #[arg(long)]
        input: PathBuf,
        /// Ambient as `MxN`.
        #[arg(long, value_parser = parse::<BlockShape>)]
        ambient: BlockShape,
        #[arg(long, value_parser = parse::<Side>)]
        side: Side,
    },
    /// Tuple of a submodule of a nest module, with principality.
    NestPhi {
        /// Block shape as `M=(m1,..);N=(n1,..)`.
        #[arg(long, value_parser = parse::<BlockShape>)]
        shape: BlockShape,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = parse::<Side>)]
        side: Side,
    },
    /// Descriptor, tuple and generator of the subbimodule spanned by generators.
    ClassifyBimodule {
        #[arg(long, value_parser = parse::<BlockShape>)]
        shape: BlockShape,
        #[arg(long)]
        input: PathBuf,
    },
    /// Product of two one-sided ideals of a nest algebra.
    Product {
        #[arg(long, value_parser = parse::<BlockShape>)]
        shape: BlockShape,
        #[arg(long, value_parser = parse::<Side>)]
        side: Side,
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Exhaustive enumeration over a prime field.
    Enumerate {
        #[arg(long, value_parser = parse::<RingDescriptor>)]
        ring: RingDescriptor,
        #[arg(long, value_parser = parse::<BlockShape>)]
        shape: BlockShape,
        #[arg(long, value_parser = parse::<ClosureKind>)]
        kind: ClosureKind,
        /// Write the Hasse diagram as DOT to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn run(command: Command) -> Result<serde_json::Value, Error> {
    match command {
        Command::Echelon { side, input } => app::echelon(&read(&input)?, side),
        Command::Phi { input, ambient, side } => {
            if ambient.row_blocks() != 1 || ambient.col_blocks() != 1 {
                return Err(Error::Parse(format!("--ambient takes MxN, got {ambient}")));
            }
            app::phi(&read(&input)?, (ambient.rows(), ambient.cols()), side)
        }
        Command::NestPhi { shape, input, side } => app::nest_phi(&read(&input)?, &shape, side),
        Command::ClassifyBimodule { shape, input } => app::classify_bimodule(&read(&input)?, &shape),
        Command::Product { shape, side, left, right } => app::product(&read(&left)?, &read(&right)?, &shape, side),
        Command::Enumerate { ring, shape, kind, dot } => {
            let e = app::enumerate(&ring, &shape, kind, dot.is_some())?;
            if let (Some(path), Some(text)) = (dot, e.dot) {
                std::fs::write(&path, text)
                    .map_err(|err| Error::Parse(format!("cannot write {}: {err}", path.display())))?;
            }
            Ok(e.summary)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (doc, code) = match run(cli.command) {
        Ok(v) => (v, ExitCode::SUCCESS),
        Err(e) => (json::error_to_json(&e), ExitCode::from(if e.is_usage() { 2 } else { 1 })),
    };
    let _ = writeln!(std::io::stdout(), "{}", json::to_text(&doc));
    code
}
