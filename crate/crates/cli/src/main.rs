use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use structnorm::NormFamily;
use structnorm_cli::{
    emit_report, run_cdf_validation, run_condition_experiment, run_norm_ratio_experiment, ExperimentConfig,
    Metadata, OutputFormat, Record, Result,
};
use structnorm_random::{Ensemble, EntryDistribution, GaussianParams};

#[derive(Parser)]
#[command(name = "structnorm", version, about = "Condition numbers of random structured matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summary statistics of the condition number per size.
    Condition(Args),
    /// Mean 1-norm to 2-norm ratios of A and its inverse.
    Ratios(Args),
    /// Monte Carlo checks of the Gaussian CDF results.
    Cdf(Args),
}

#[derive(Clone, Copy, ValueEnum)]
enum Dist {
    Uniform,
    Gaussian,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(clap::Args)]
struct Args {
    /// general, toeplitz, circulant or hankel.
    #[arg(long, default_value = "circulant", value_parser = parse_class)]
    class: Ensemble,
    /// Comma separated matrix orders.
    #[arg(long, value_delimiter = ',', default_value = "256")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, value_enum, default_value = "uniform")]
    dist: Dist,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    mu: f64,
    #[arg(long, default_value_t = 1.0)]
    sigma: f64,
    /// 1, 2, inf or fro.
    #[arg(long, default_value = "2", value_parser = parse_norm)]
    norm: NormFamily,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Independent real and imaginary parts.
    #[arg(long)]
    complex: bool,
}

fn parse_class(s: &str) -> std::result::Result<Ensemble, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_norm(s: &str) -> std::result::Result<NormFamily, String> {
    s.parse().map_err(|e| format!("{e}"))
}

impl Args {
    fn config(&self) -> Result<ExperimentConfig> {
        let distribution = match self.dist {
            Dist::Uniform => EntryDistribution::UniformSym,
            Dist::Gaussian => EntryDistribution::Gaussian(GaussianParams::new(self.mu, self.sigma)?),
        };
        let config = ExperimentConfig {
            matrix_class: self.class,
            sizes: self.sizes.clone(),
            trials_per_size: self.trials,
            distribution,
            norm_family: self.norm,
            seed: self.seed,
            output: match self.format {
                Format::Csv => OutputFormat::Csv,
                Format::Json => OutputFormat::Json,
            },
            parallelism: self.workers,
            complex: self.complex,
        };
        config.validate()?;
        Ok(config)
    }
}

fn open(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn finish<R: Record>(records: Vec<R>, config: &ExperimentConfig, command: &str, out: &mut dyn Write) -> Result<()> {
    let meta = Metadata::new(config.seed, config.config_hash(command));
    emit_report(&records, config.output, &meta, out)
}

fn run(cli: Cli) -> Result<()> {
    let (name, args) = match &cli.command {
        Command::Condition(a) => ("condition", a),
        Command::Ratios(a) => ("ratios", a),
        Command::Cdf(a) => ("cdf", a),
    };
    let config = args.config()?;
    let mut out = open(&args.out)?;
    match cli.command {
        Command::Condition(_) => finish(run_condition_experiment(&config)?, &config, name, &mut *out),
        Command::Ratios(_) => finish(run_norm_ratio_experiment(&config)?, &config, name, &mut *out),
        Command::Cdf(_) => finish(run_cdf_validation(&config)?, &config, name, &mut *out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("structnorm: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

