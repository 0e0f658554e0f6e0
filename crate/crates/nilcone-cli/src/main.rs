//! `nilcone`: enumerate, translate, decompose and render orbit labels of the
//! enhanced cyclic nilpotent cone.

mod error;
mod render;
mod selfcheck;
mod translate;

use std::io::Read;
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use serde::Serialize;

use nilcone::decomposer::{Decomposer, Decomposition};
use nilcone::orbit_maps::diagrams_of_label;
use nilcone::rep_builder::{QuiverRep, QuiverRepJson};
use nilcone::rep_type::{classify, wildness_witness};
use nilcone::residues::{enumerate_q, DimensionVector, OrbitLabel};
use nilcone::Exec;

use crate::error::CliError;
use crate::render::RenderFormat;
use crate::translate::LabelFormat;

#[derive(Parser)]
#[command(
    name = "nilcone",
    version,
    about = "Orbit labels of the enhanced cyclic nilpotent cone"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List Q(n, ell), optionally only labels of weight at most x.
    EnumerateOrbits {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        ell: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        x: Option<u32>,
    },
    /// Convert between Achar-Henderson bipartitions, striped bipartitions and labels.
    Translate {
        #[arg(long, value_enum)]
        from: LabelFormat,
        #[arg(long, value_enum)]
        to: LabelFormat,
        /// JSON file, or "-" for stdin.
        #[arg(long)]
        input: PathBuf,
        /// ell for striped input that does not record it.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        ell: Option<u32>,
    },
    /// Decompose a representation given as JSON.
    Decompose {
        #[arg(long)]
        input: PathBuf,
    },
    /// Draw a partition or a circle diagram.
    #[command(group(ArgGroup::new("source").required(true).args(["partition", "diagram"])))]
    Render {
        #[arg(long)]
        partition: Option<String>,
        /// Diagram as JSON or as DOT produced by this command.
        #[arg(long)]
        diagram: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: RenderFormat,
        /// Colour boxes by residue and mark the diagonal (partitions only).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        ell: Option<u32>,
    },
    /// Run the enumeration, translation and decomposition checks end to end.
    Selfcheck {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        ell: u32,
    },
    /// Representation type of the framed cyclic algebra with nilpotency bound x.
    Reptype {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        ell: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        x: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    panic::set_hook(Box::new(|info| eprintln!("internal error: {info}")));
    match panic::catch_unwind(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
        Err(_) => ExitCode::from(1),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::EnumerateOrbits { n, ell, x } => {
            enumerate_orbits(n, ell as usize, x.map(|x| x as usize))
        }
        Command::Translate {
            from,
            to,
            input,
            ell,
        } => {
            let out = translate::run(from, to, &read_input(&input)?, ell.map(|e| e as usize))?;
            println!("{out}");
            Ok(())
        }
        Command::Decompose { input } => decompose(&read_input(&input)?),
        Command::Render {
            partition,
            diagram,
            format,
            ell,
        } => {
            let ell = ell.map(|e| e as usize);
            let out = match (partition, diagram) {
                (Some(p), _) => render::partition(&p, format, ell)?,
                (None, Some(path)) => render::diagram(&read_input(&path)?, format)?,
                (None, None) => unreachable!("clap requires a source"),
            };
            print!("{out}");
            Ok(())
        }
        Command::Selfcheck { n, ell } => selfcheck::run(n, ell as usize),
        Command::Reptype { ell, x } => {
            reptype(ell as usize, x as usize);
            Ok(())
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let mut s = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::invalid(format!("stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(path)
            .map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
    }
    Ok(s)
}

/// Circles of a label, marked ones with their 1-based mark label.
fn diagram_summary(label: &OrbitLabel) -> String {
    let (cf, c) = diagrams_of_label(label);
    let ell = cf.ell();
    let marked: Vec<String> = cf
        .circles()
        .iter()
        .map(|k| format!("{}@{} s{}", k.len, k.start(ell), k.mark_label()))
        .collect();
    let plain: Vec<String> = c
        .circles()
        .iter()
        .map(|k| format!("{}@{}", k.len, k.start))
        .collect();
    format!("C=[{}] U=[{}]", marked.join(", "), plain.join(", "))
}

fn enumerate_orbits(n: usize, ell: usize, x: Option<usize>) -> Result<(), CliError> {
    let target = DimensionVector::multiple_of_delta(n, ell, 1);
    let mut bad = 0;
    for label in enumerate_q(n, ell, Exec::default()) {
        if x.is_some_and(|x| label.lambda.weight(ell) > x) {
            continue;
        }
        let dims = label.dimension();
        let check = if dims == target { "ok" } else { "MISMATCH" };
        if dims != target {
            bad += 1;
        }
        println!("{label}\t{}\t{dims}\t{check}", diagram_summary(&label));
    }
    if bad > 0 {
        return Err(CliError::Internal(format!(
            "{bad} labels have the wrong dimension"
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct DecomposeOutput {
    #[serde(flatten)]
    decomposition: Decomposition,
    summands: Vec<String>,
}

fn decompose(src: &str) -> Result<(), CliError> {
    let json: QuiverRepJson = serde_json::from_str(src).map_err(CliError::invalid)?;
    let rep = QuiverRep::try_from(json).map_err(CliError::invalid)?;
    rep.check_nilpotent().map_err(CliError::invalid)?;
    let decomposition = Decomposer::default()
        .decompose(&rep)
        .map_err(CliError::internal)?;
    let summands = decomposition.summands();
    let out = DecomposeOutput {
        decomposition,
        summands,
    };
    println!(
        "{}",
        serde_json::to_string(&out).map_err(CliError::internal)?
    );
    Ok(())
}

fn reptype(ell: usize, x: usize) {
    let kind = classify(ell, x);
    println!("ell={ell} x={x}: {kind}");
    if kind != nilcone::rep_type::RepType::Wild {
        return;
    }
    match wildness_witness(ell, x) {
        Some(w) => {
            let (main, framing) = w.vector.split_at(w.window.rows);
            println!(
                "window: {} rows, framing rows {:?}",
                w.window.rows, w.window.framing_rows
            );
            println!("main    {main:?}");
            println!("framing {framing:?}");
            println!("q = {}", w.q);
        }
        None => println!("no witness found in the bounded search"),
    }
}
