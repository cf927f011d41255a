//! `orbitkit`: root systems, classification strings, orbit counts and the finite-field oracle.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbitkit::counting::WeightSource;
use orbitkit::oracle::{Generators, OracleConfig, DEFAULT_BUDGET, RANK_BUDGET};
use orbitkit::report::Report;
use orbitkit::Family;
use orbitkit_cli::{CensusMethod, OracleArgs, Var};

#[derive(Parser)]
#[command(name = "orbitkit", version, about = "Coadjoint orbits of maximal nilpotent subalgebras of classical Lie algebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads.
    #[arg(long, default_value_t = 1, global = true)]
    jobs: usize,
    /// Include the heavy oracle runs.
    #[arg(long, global = true)]
    long: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Classify,
    Published,
}

#[derive(Args)]
struct SystemArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    rank: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, CHEVIE indices, Sing sizes and structure constants.
    Roots(SystemArgs),
    /// Extensive orbits of one dimension as classification strings.
    Classify {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        dim: usize,
        /// Compare with the embedded published table.
        #[arg(long)]
        verify: bool,
    },
    /// Number of orbits of dimension 2e as a polynomial.
    Count {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        e: usize,
        #[arg(long, value_enum, default_value_t = Var::V)]
        var: Var,
        /// Component weights from the classification engine or the published tables.
        #[arg(long, value_enum, default_value_t = Source::Classify)]
        source: Source,
    },
    /// Brute-force checks over a prime field.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Run every acceptance criterion.
    VerifyAll,
}

#[derive(Args)]
struct OracleOpts {
    #[command(flatten)]
    system: SystemArgs,
    /// Field size; defaults to the smallest prime above the highest-root height.
    #[arg(short, long)]
    p: Option<u64>,
    /// Require p > dim g.
    #[arg(long)]
    safe: bool,
    /// Maximal number of stored states.
    #[arg(long, default_value_t = DEFAULT_BUDGET as u64)]
    budget: u64,
    /// Maximal number of rank computations.
    #[arg(long, default_value_t = RANK_BUDGET as u64)]
    rank_budget: u64,
    /// Generate the action by the simple roots only.
    #[arg(long)]
    simple_generators: bool,
}

impl OracleOpts {
    fn args(&self) -> OracleArgs {
        OracleArgs {
            family: self.system.family,
            rank: self.system.rank,
            p: self.p,
            config: OracleConfig {
                budget: self.budget as u128,
                rank_budget: self.rank_budget as u128,
                safe: self.safe,
                generators: if self.simple_generators { Generators::Simple } else { Generators::AllRoots },
            },
        }
    }
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Orbit counts by dimension.
    Census {
        #[command(flatten)]
        opts: OracleOpts,
        #[arg(long, value_enum, default_value_t = CensusMethod::Enumerate)]
        method: CensusMethod,
    },
    /// Check that strings give a set-section of the extensive orbits of one dimension.
    Section {
        #[command(flatten)]
        opts: OracleOpts,
        #[arg(long)]
        dim: usize,
        /// File with one string per line; defaults to the published table.
        #[arg(long)]
        strings: Option<PathBuf>,
    },
    /// Check the orbit dimension of every form with a given support.
    Family {
        #[command(flatten)]
        opts: OracleOpts,
        /// CHEVIE indices, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        support: Vec<usize>,
        #[arg(long)]
        expect: usize,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: orbitkit::Error| e.to_string())
}

fn read_strings(path: &PathBuf) -> anyhow::Result<Vec<String>> {
    let text = std::fs::read_to_string(path)?;
    Ok(text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from).collect())
}

fn dispatch(cli: &Cli) -> anyhow::Result<Report> {
    Ok(match &cli.command {
        Command::Roots(s) => orbitkit_cli::cmd_roots(s.family, s.rank)?,
        Command::Classify { system, dim, verify } => orbitkit_cli::cmd_classify(system.family, system.rank, *dim, *verify)?,
        Command::Count { system, e, var, source } => {
            let source = match source {
                Source::Classify => WeightSource::Classify,
                Source::Published => WeightSource::Published,
            };
            orbitkit_cli::cmd_count(system.family, system.rank, *e, *var, source)?
        }
        Command::Oracle { command } => match command {
            OracleCommand::Census { opts, method } => orbitkit_cli::cmd_census(&opts.args(), *method)?,
            OracleCommand::Section { opts, dim, strings } => {
                let strings = strings.as_ref().map(read_strings).transpose()?;
                orbitkit_cli::cmd_section(&opts.args(), *dim, strings)?
            }
            OracleCommand::Family { opts, support, expect } => orbitkit_cli::cmd_family(&opts.args(), support, *expect)?,
        },
        Command::VerifyAll => orbitkit_cli::cmd_verify_all(cli.long)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match dispatch(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
                Format::Text => print!("{}", report.render_text()),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
