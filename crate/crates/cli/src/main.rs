use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

/// Knot notation, Jones polynomials, cusp slope bounds and census tables.
#[derive(Parser, Debug)]
#[command(name = "knotcensus", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A single value or a file with one value per line.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Inputs {
    /// One input value.
    #[arg(long, allow_hyphen_values = true)]
    pub input: Option<String>,
    /// File with one input per line; blank lines and `#` comments are skipped.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Jones polynomial of T-notation, a braid word (`n: letters`) or a DT code.
    Jones {
        #[command(flatten)]
        inputs: Inputs,
        /// Use the mirror image.
        #[arg(long)]
        mirror: bool,
        /// Print the Kauffman bracket in A instead.
        #[arg(long)]
        raw_bracket: bool,
    },
    /// Realize a DT code and read it back.
    DtRealize {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Expand T-notation into a braid word.
    Ttk {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Slopes of length at most the bound on a cusp torus.
    Slopes {
        #[command(flatten)]
        basis: Basis,
        #[arg(long, default_value_t = 6.0)]
        bound: f64,
        /// Require the given basis to be shortest already.
        #[arg(long)]
        no_reduce: bool,
    },
    /// Shortest-curve basis of a cusp lattice.
    ReduceBasis {
        #[command(flatten)]
        basis: Basis,
    },
    /// Randomized audit of the universal |p| <= 7, |q| <= 3 bounds.
    AuditLemma {
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Smith normal form of a matrix file.
    Snf { matrix: PathBuf },
    /// First homology of a Dehn filling.
    FillH1 {
        presentation: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
    /// Sort census records and rename them `k{tet}_{m}`.
    CensusSort {
        file: PathBuf,
        #[arg(long)]
        tet: u32,
    },
    /// Manifold and knot counts per tetrahedra.
    CensusStats {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Comma-separated manifold counts for 1, 2, ... tetrahedra.
        #[arg(long)]
        manifolds: Option<String>,
        #[arg(long)]
        csv: bool,
    },
    /// Knot and Lorenz knot counts per tetrahedra.
    CensusLorenz {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Basis {
    /// Meridian translation length.
    #[arg(long)]
    pub m: f64,
    /// Longitude translation as a complex number, e.g. `0.5+3.35i`.
    #[arg(long, allow_hyphen_values = true)]
    pub l: String,
}

/// Input problems exit with 1, failed internal checks with 2.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Internal(_) => 2,
        }
    }
}

/// What a command produced: text for stdout, diagnostics for stderr and an
/// optional failure that sets the exit status.
#[derive(Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub failure: Option<Failure>,
}

fn run(command: Command) -> Output {
    use commands::*;
    match command {
        Command::Jones {
            inputs,
            mirror,
            raw_bracket,
        } => jones(&inputs, mirror, raw_bracket),
        Command::DtRealize { inputs } => dt_realize(&inputs),
        Command::Ttk { inputs } => ttk(&inputs),
        Command::Slopes {
            basis,
            bound,
            no_reduce,
        } => slopes(&basis, bound, no_reduce),
        Command::ReduceBasis { basis } => reduce(&basis),
        Command::AuditLemma { samples, seed } => audit(samples, seed),
        Command::Snf { matrix } => snf(&matrix),
        Command::FillH1 { presentation, p, q } => fill_h1(&presentation, p, q),
        Command::CensusSort { file, tet } => census_sort(&file, tet),
        Command::CensusStats {
            files,
            manifolds,
            csv,
        } => census_stats(&files, manifolds.as_deref(), csv),
        Command::CensusLorenz { files, csv } => census_lorenz(&files, csv),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let out = run(cli.command);
    let _ = std::io::stdout().lock().write_all(out.stdout.as_bytes());
    let mut err = std::io::stderr().lock();
    let _ = err.write_all(out.stderr.as_bytes());
    match out.failure {
        None => ExitCode::SUCCESS,
        Some(f) => {
            let (Failure::Input(msg) | Failure::Internal(msg)) = &f;
            let _ = writeln!(err, "error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
