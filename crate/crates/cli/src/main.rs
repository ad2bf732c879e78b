use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cvejoin::indices::REAL_INDEX_TOL;
use cvejoin_cli::commands::{
    self, CommandError, DEFAULT_COSPECTRAL_TOL, DEFAULT_ENERGY_TOL, DEFAULT_SPECTRUM_TOL,
};
use cvejoin_cli::report::Render;

/// Central vertex-edge join: construction, distance spectra, topological
/// indices and D-equienergetic families.
///
/// Graphs are edge-list files ("n m" then m lines "u v", 0-based, '#'
/// comments) or built-in names such as builtin:c4, builtin:k33,
/// builtin:petersen.
#[derive(Parser)]
#[command(name = "cvejoin", version)]
struct Cli {
    /// Emit the machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build G1^C ▷ (G2^V ∪ G3^E) and write it as an edge list.
    Construct { g1: String, g2: String, g3: String },
    /// D-spectrum and D-energy of one graph, or of the join of three.
    Spectrum {
        /// One graph, or G1 G2 G3.
        #[arg(required = true, num_args = 1..=3)]
        graphs: Vec<String>,
        /// Also assemble the spectrum from the closed form (three regular
        /// graphs, G1 triangle-free) and compare.
        #[arg(long)]
        closed_form: bool,
        /// Maximum elementwise deviation between the two spectra.
        #[arg(long, default_value_t = DEFAULT_SPECTRUM_TOL)]
        tol: f64,
    },
    /// Every index computed by definition and by closed form.
    Indices {
        g1: String,
        g2: String,
        g3: String,
        /// Tolerance for the real-valued indices.
        #[arg(long, default_value_t = REAL_INDEX_TOL)]
        tol: f64,
    },
    /// Certify the D-equienergetic family over the partitions of `a`.
    Equienergetic {
        /// Triangle-free regular graph H1 (the G1 of every member).
        h1: String,
        /// Regular graph H2 with least adjacency eigenvalue >= -2.
        h2: String,
        /// Total cycle length; one member per partition of `a` into parts >= 3.
        a: usize,
        /// Energy tolerance per vertex of the join.
        #[arg(long, default_value_t = DEFAULT_ENERGY_TOL)]
        tol: f64,
        /// Spectra closer than this are treated as cospectral.
        #[arg(long, default_value_t = DEFAULT_COSPECTRAL_TOL)]
        cospectral_tol: f64,
    },
    /// Run the built-in verification suite.
    VerifyAll {
        /// Perturb one closed-form coefficient by +1 ("<formula>#<term>").
        #[arg(long, hide = true, value_name = "COEFFICIENT")]
        mutate: Option<String>,
    },
}

fn run(cli: &Cli) -> Result<(String, bool), CommandError> {
    fn emit<R: Render>(r: R, json: bool) -> (String, bool) {
        (if json { r.json() } else { r.text() }, r.passed())
    }
    let json = cli.json;
    Ok(match &cli.command {
        Command::Construct { g1, g2, g3 } => emit(
            commands::construct(&[g1.clone(), g2.clone(), g3.clone()])?,
            json,
        ),
        Command::Spectrum {
            graphs,
            closed_form,
            tol,
        } => {
            if graphs.len() == 2 {
                return Err(CommandError::Usage("expected 1 or 3 graphs, got 2".into()));
            }
            emit(commands::spectrum(graphs, *closed_form, *tol)?, json)
        }
        Command::Indices { g1, g2, g3, tol } => emit(
            commands::indices(&[g1.clone(), g2.clone(), g3.clone()], *tol)?,
            json,
        ),
        Command::Equienergetic {
            h1,
            h2,
            a,
            tol,
            cospectral_tol,
        } => emit(
            commands::equienergetic(h1, h2, *a, *tol, *cospectral_tol)?,
            json,
        ),
        Command::VerifyAll { mutate } => emit(commands::verify_all(mutate.as_deref())?, json),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (output, passed) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &output) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{output}"),
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
