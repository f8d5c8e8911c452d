use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use dissect_cli::commands::{self, ClosedFormQuery, CliError, EXIT_MISMATCH, EXIT_OK};
use dissect_cli::{Report, Settings};
use dissect_core::Exec;

#[derive(Parser)]
#[command(name = "dissect", version, about = "Exact chamber and face counts for arrangements of hypersurfaces")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Run everything on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosedFamily {
    Hyperplane,
    Sphere,
    Toric,
    Projective,
}

#[derive(Subcommand)]
enum Command {
    /// Summary: flat census, simplicity, characteristic polynomial, counts.
    Describe { file: PathBuf },
    /// Generalized characteristic polynomial.
    Charpoly { file: PathBuf },
    /// Number of chambers.
    Chambers { file: PathBuf },
    /// f-vector, f_0 first.
    Faces { file: PathBuf },
    /// Number of faces mapping onto a chain of flats.
    Fiber {
        file: PathBuf,
        /// Comma-separated flat ids, smallest rank first.
        #[arg(long, value_delimiter = ',', required = true)]
        chain: Vec<String>,
    },
    /// Compare every formula with an independent brute-force count.
    Verify {
        #[arg(required_unless_present = "random")]
        file: Option<PathBuf>,
        /// Verify this many seeded random hyperplane arrangements instead.
        #[arg(long, conflicts_with = "file")]
        random: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Closed-form f-vector of a simple arrangement, from a file or from parameters.
    Closedform {
        #[arg(required_unless_present = "family")]
        file: Option<PathBuf>,
        /// Evaluate even if the arrangement is not simple.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, conflicts_with = "file")]
        family: Option<ClosedFamily>,
        #[arg(long)]
        dim: Option<usize>,
        /// Flats per dimension, dimension 0 first (hyperplane, sphere).
        #[arg(long, value_delimiter = ',')]
        census: Vec<BigInt>,
        /// Number of vertices (toric).
        #[arg(long)]
        a0: Option<BigInt>,
        /// Number of hyperplanes (projective).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Intersection poset with ranks, Euler characteristics and mu(X, Y).
    Poset { file: PathBuf },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let settings = Settings { exec: if cli.sequential { Exec::Sequential } else { Exec::default() }, ..Settings::default() };
    let model = |file: &PathBuf| commands::load(file).and_then(|f| commands::build(&f, &settings));
    match &cli.command {
        Command::Describe { file } => commands::describe(&model(file)?),
        Command::Charpoly { file } => Ok(commands::charpoly(&model(file)?)),
        Command::Chambers { file } => commands::chambers(&model(file)?),
        Command::Faces { file } => commands::faces(&model(file)?),
        Command::Fiber { file, chain } => commands::fiber(&model(file)?, chain),
        Command::Poset { file } => Ok(commands::poset(&model(file)?)),
        Command::Verify { file: Some(file), .. } => commands::verify(&commands::load(file)?, &settings),
        Command::Verify { random, seed, max_dim, max_n, .. } => {
            commands::verify_random(random.unwrap_or(0), *seed, *max_dim, *max_n, &settings)
        }
        Command::Closedform { file: Some(file), force, .. } => commands::closedform_model(&model(file)?, *force),
        Command::Closedform { family, dim, census, a0, n, .. } => {
            let dim = dim.ok_or_else(|| CliError::Usage("--dim is required with --family".into()))?;
            let need = |what: &str| CliError::Usage(format!("--{what} is required for this family"));
            let query = match family.expect("clap requires a file or --family") {
                ClosedFamily::Hyperplane | ClosedFamily::Sphere if census.is_empty() => return Err(need("census")),
                ClosedFamily::Hyperplane | ClosedFamily::Sphere if census.len() != dim + 1 || census[dim] != BigInt::from(1) => {
                    return Err(CliError::Usage(format!(
                        "--census needs {} entries, dimension 0 first, ending with 1 for the ambient space",
                        dim + 1
                    )))
                }
                ClosedFamily::Hyperplane => ClosedFormQuery::Hyperplane { census: census.clone(), dim },
                ClosedFamily::Sphere => ClosedFormQuery::Sphere { census: census.clone(), dim },
                ClosedFamily::Toric => ClosedFormQuery::Toric { a0: a0.clone().ok_or_else(|| need("a0"))?, dim },
                ClosedFamily::Projective => ClosedFormQuery::Projective { n: n.ok_or_else(|| need("n"))?, dim },
            };
            Ok(commands::closedform_params(&query))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            ExitCode::from(if report.verified() { EXIT_OK } else { EXIT_MISMATCH } as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
