use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ybsys::cli::{self, OrbitArgs};

/// Exact tools for the constant Yang-Baxter system in dimension two.
#[derive(Parser)]
#[command(name = "ybsys", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check whether a pair file solves the four coupled equations
    Verify {
        file: PathBuf,
        /// Reduce everything into F_p
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Kernel of the two linear equations for Q, given R
    Nullspace {
        file: PathBuf,
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Cubic constraints on the kernel coordinates
    Constraints {
        file: PathBuf,
        /// Matrix file whose symbolic Q template supplies the display basis
        #[arg(long)]
        gauge: Option<PathBuf>,
        /// Print every constraint, however many
        #[arg(long)]
        full: bool,
    },
    /// The catalog of known solution families
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Exhaust all solutions over a prime field
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        prime: u64,
        /// Cap on coordinate points (default 10^7, or YBSYS_ENUM_BOUND)
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Apply a symmetry to a pair and re-verify the result
    Orbit {
        file: PathBuf,
        /// Entries of S, comma separated, row major (default identity)
        #[arg(long)]
        s: Option<String>,
        /// Scale factor on Q (default 1)
        #[arg(long)]
        lambda: Option<String>,
        /// Scale factor on R (default 1)
        #[arg(long)]
        kappa: Option<String>,
        /// Also conjugate both matrices by the flip P
        #[arg(long)]
        flip: bool,
        #[arg(long)]
        prime: Option<u64>,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Print every entry with its parameters and provenance
    List,
    /// Re-verify families by seeded exact instantiation plus symbolics
    Verify {
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Verify a single named entry
        #[arg(long)]
        entry: Option<String>,
    },
    /// Write one matrix file per entry
    Export {
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Verify { file, prime } => cli::cmd_verify(&file, prime),
        Cmd::Nullspace { file, prime } => cli::cmd_nullspace(&file, prime),
        Cmd::Constraints { file, gauge, full } => {
            cli::cmd_constraints(&file, gauge.as_deref(), full)
        }
        Cmd::Catalog { action } => match action {
            CatalogCmd::List => cli::cmd_catalog_list(),
            CatalogCmd::Verify {
                samples,
                seed,
                entry,
            } => cli::cmd_catalog_verify(samples, seed, entry.as_deref()),
            CatalogCmd::Export { out_dir, seed } => cli::cmd_catalog_export(&out_dir, seed),
        },
        Cmd::Enumerate { file, prime, bound } => cli::cmd_enumerate(&file, prime, bound),
        Cmd::Orbit {
            file,
            s,
            lambda,
            kappa,
            flip,
            prime,
        } => cli::cmd_orbit(
            &file,
            &OrbitArgs {
                s,
                lambda,
                kappa,
                flip,
                prime,
            },
        ),
    };
    match result {
        Ok(report) => {
            print!("{}", report.text);
            ExitCode::from(report.code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
