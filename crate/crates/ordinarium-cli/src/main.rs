//! Command-line driver: reproducible reports over the library's verification
//! operations. Exit codes: 0 success/PASS, 1 verification FAIL (dichotomy
//! exception, bound violation, counting mismatch), 2 usage or data error.

mod commands;
mod config;
mod report;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ordinarium", version, about = "ordinary-reduction verification toolkit")]
struct Cli {
    /// TOML configuration file; command-line flags override its values
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// worker threads (overrides the ORDINARIUM_THREADS environment variable)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Splitting type of a prime in a number field, and splitting-type
    /// frequency tables
    Split(commands::SplitArgs),
    /// Witness searches for joint prime-splitting conditions
    SearchPrimes(commands::SearchArgs),
    /// Enumerate the subgroup lattice of S_{2q} and check every transitive
    /// subgroup contains a product of two disjoint q-cycles
    VerifyGroup(commands::VerifyGroupArgs),
    /// GL2(F_l) trace/determinant census: closed form vs enumeration, group
    /// order, ratio bounds, commutant checks
    VerifyGl2(commands::VerifyGl2Args),
    /// Ordinariness scans over the hyperelliptic family
    CurveScan(commands::CurveScanArgs),
    /// Per-prime ordinariness of a weight-2 newform from a JSON
    /// coefficient file
    MfOrdinary(commands::MfArgs),
    /// Density estimates with PASS/FAIL comparisons
    DensityReport(commands::DensityArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file = match config::load(cli.config.as_deref()) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    let threads = cli
        .threads
        .or_else(|| {
            std::env::var("ORDINARIUM_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .or_else(|| file.threads());
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads {
            if n == 0 {
                eprintln!("error: thread count must be positive");
                return ExitCode::from(2);
            }
            b = b.num_threads(n);
        }
        match b.build() {
            Ok(p) => p,
            Err(e) => {
                eprintln!("error: {}", e);
                return ExitCode::from(2);
            }
        }
    };
    let outcome = pool.install(|| match cli.command {
        Command::Split(a) => commands::split(a, &file),
        Command::SearchPrimes(a) => commands::search_primes(a, &file),
        Command::VerifyGroup(a) => commands::verify_group(a, &file),
        Command::VerifyGl2(a) => commands::verify_gl2(a, &file),
        Command::CurveScan(a) => commands::curve_scan(a, &file),
        Command::MfOrdinary(a) => commands::mf_ordinary(a, &file),
        Command::DensityReport(a) => commands::density_report(a, &file),
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
