use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bitrans_cli::commands::{self, GadgetVariant};
use bitrans_cli::{CliError, Options, OutputFormat};
use bitrans_core::dualize::DEFAULT_MAX_PARTIALS;
use clap::{Parser, Subcommand};

/// Minimal transversals and bi-objective minimal transversals of hypergraphs.
#[derive(Parser, Debug)]
#[command(name = "bitrans", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Verify results against the brute-force oracle.
    #[arg(long, global = true)]
    oracle: bool,
    /// Cap on partial transversals kept by Berge's algorithm.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PARTIALS)]
    max_partials: usize,
    /// Seed for the random corpora of `check --random` and `bench`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal transversals of a plain hypergraph file.
    Dualize { file: PathBuf },
    /// Bi-objective minimal transversals as `vertices | blue edges` lines.
    Btr { file: PathBuf },
    /// Minimal sets of blue edges whose safe vertices hit every red edge.
    Bsets { file: PathBuf },
    /// Print the instance as a depth-3 formula.
    ToFormula { file: PathBuf },
    /// Build an instance from a depth-3 formula.
    FromFormula { file: PathBuf },
    /// Build a SAT gadget instance from a DIMACS CNF file.
    Gen {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = GadgetVariant::Dim2)]
        variant: GadgetVariant,
        /// Skip the requirement that no variable occurs in every clause.
        #[arg(long)]
        unchecked: bool,
        /// Write the instance here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the known solutions here instead of appending them as comments.
        #[arg(long)]
        known_out: Option<PathBuf>,
    },
    /// Compare enumeration with the brute-force oracles.
    Check {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        file: Option<PathBuf>,
        /// Known solutions to test for completeness.
        #[arg(long, requires = "file")]
        known: Option<PathBuf>,
        /// Check this many seeded random instances instead of a file.
        #[arg(long)]
        random: Option<usize>,
    },
    /// Time fast enumeration against brute force.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [6, 8, 10, 12, 14, 16])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        per_size: usize,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<String, CliError> {
    let opts = Options {
        format: if cli.json { OutputFormat::Json } else { cli.format },
        oracle: cli.oracle,
        max_partials: cli.max_partials,
        seed: cli.seed,
    };
    match cli.command {
        Command::Dualize { file } => commands::dualize(&read(&file)?, &opts),
        Command::Btr { file } => commands::btr(&read(&file)?, &opts),
        Command::Bsets { file } => commands::bsets(&read(&file)?, &opts),
        Command::ToFormula { file } => commands::to_formula(&read(&file)?, &opts),
        Command::FromFormula { file } => commands::from_formula(&read(&file)?),
        Command::Gen {
            file,
            variant,
            unchecked,
            out,
            known_out,
        } => {
            let gen = commands::gen(&read(&file)?, variant, unchecked)?;
            let mut instance = gen.instance;
            match known_out {
                Some(path) => write(&path, &gen.known)?,
                None => instance.extend(gen.known.lines().map(|l| format!("# known: {l}\n"))),
            }
            match out {
                Some(path) => write(&path, &instance).map(|_| String::new()),
                None => Ok(instance),
            }
        }
        Command::Check {
            file: Some(file),
            known,
            ..
        } => {
            let known = known.map(|k| read(&k)).transpose()?;
            commands::check_file(&read(&file)?, known.as_deref(), &opts)
        }
        Command::Check { file: None, random, .. } => commands::check_random(random.unwrap_or(0), &opts),
        Command::Bench { sizes, per_size } => commands::bench(&sizes, per_size, &opts),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
