use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use palette_lab::families::FamilyKind;
use palette_lab::report::{self, Budget, RunReport};
use palette_lab::Error;

#[derive(Parser)]
#[command(name = "palette-lab", version, about = "Palette index of simple graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Exact palette index with a witness coloring.
    PaletteIndex {
        /// File path, `-` for stdin, or an inline graph6 string.
        input: String,
        /// Largest color allowed (default Δ+2).
        #[arg(long)]
        cmax: Option<usize>,
    },
    /// Lower, upper and exact certificates that apply to the graph.
    Certify { input: String },
    /// Generate a family member: bridge-star, quadratic-union or connected-quadratic.
    Generate {
        kind: FamilyKind,
        k: usize,
        /// Directory for the graph6 file and JSON manifest.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the reference table and write reproduction.csv.
    ReproducePaper {
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated groups: cubic, extremal, quadratic, apex, small.
        #[arg(long)]
        only: Option<String>,
    },
}

fn run(cli: &Cli) -> Result<RunReport, Error> {
    let budget = Budget::from_env()?;
    match &cli.command {
        Command::PaletteIndex { input, cmax } => report::cmd_palette_index(&report::load_input(input)?, *cmax, &budget),
        Command::Certify { input } => report::cmd_certify(&report::load_input(input)?, &budget),
        Command::Generate { kind, k, out } => report::cmd_generate(*kind, *k, out.as_deref()),
        Command::ReproducePaper { out, only } => report::cmd_reproduce_paper(out.as_deref(), only.as_deref(), &budget),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(rep) => {
            match cli.format {
                Format::Text => print!("{}", rep.text),
                Format::Json => println!("{}", rep.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
