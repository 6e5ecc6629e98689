//! Command-line front end.
//!
//! Exit codes: 0 when every verdict passes, 1 when any verdict fails or a
//! computation breaks down, 2 for configuration errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{
    compression_sweep, witness_protocol, Model, SweepOptions, SweepProfile, TruncationPolicy, Verdict, WitnessOptions,
};
use crate::error::{Error, Result};
use crate::index::{index_ladder, kernel_ladder_rung, maximal_kernel_family};
use crate::report::{
    write_counts_csv, write_index_csv, write_json, write_sweep_csv, write_witness_csv, IndexJson, JsonReport,
};
use crate::tolerances::{DEFAULT_SWEEP_SIZES, DEFAULT_THRESHOLDS, DISC_SWEEP_ORDERS, KERNEL_RESIDUAL, TRUNCATION_FLOOR};

#[derive(Debug, Parser)]
#[command(name = "fredholm-witness", version, about = "Compressions, witness sequences and index ladders for Dirac operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub output: OutputArgs,

    /// Worker threads for matrix assembly (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Witness protocol for the interval model, optionally with a sweep.
    Interval(WitnessArgs),
    /// Witness protocol for the disc model (K removed), optionally with a sweep.
    Disc(WitnessArgs),
    /// Kernel dimensions and index of D_{P_N} over a range of cuts.
    Index(IndexArgs),
    /// Singular value sweep over nested compressions.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    /// Witness indices, comma separated [default: 100,1000,10000 (interval), 100,1000 (disc)].
    #[arg(long, value_delimiter = ',')]
    pub grid: Option<Vec<u64>>,

    /// Truncation length is max(factor * index, floor).
    #[arg(long, default_value_t = crate::tolerances::TRUNCATION_FACTOR)]
    pub trunc_factor: u64,

    #[arg(long, default_value_t = TRUNCATION_FLOOR)]
    pub trunc_floor: usize,

    /// Also sweep compressions of these sizes (JSON output only).
    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,

    #[arg(long, value_delimiter = ',')]
    pub thresholds: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[arg(long, default_value_t = -10, allow_negative_numbers = true)]
    pub min_cut: i64,

    #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
    pub max_cut: i64,

    /// Degrees n = 0..=this of the maximal-extension kernel family to check.
    #[arg(long, default_value_t = 32)]
    pub family_max: u32,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value_t = Model::Interval)]
    pub model: Model,

    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,

    #[arg(long, value_delimiter = ',')]
    pub thresholds: Option<Vec<f64>>,

    /// Disc: keep the compact correction K in the compression.
    #[arg(long)]
    pub keep_k: bool,

    /// Disc: number of angular indices per branch.
    #[arg(long, default_value_t = DISC_SWEEP_ORDERS)]
    pub disc_orders: u32,

    /// CSV only: write counts above each threshold instead of singular values.
    #[arg(long)]
    pub counts: bool,
}

/// Radii at which kernel functions are checked.
pub const KERNEL_SAMPLES: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 1.0];

pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(v) if v.passed() => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e @ Error::Config(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

pub fn run(cli: &Cli) -> Result<Verdict> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(Error::Config("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::Config(format!("cannot configure the thread pool: {e}")))?;
    }
    let mut sink = open_output(cli.output.out.as_ref())?;
    let verdict = match &cli.command {
        Command::Interval(args) => run_witness(Model::Interval, args, cli.output.format, &mut sink)?,
        Command::Disc(args) => run_witness(Model::Disc, args, cli.output.format, &mut sink)?,
        Command::Index(args) => run_index(args, cli.output.format, &mut sink)?,
        Command::Sweep(args) => run_sweep(args, cli.output.format, &mut sink)?,
    };
    sink.flush()?;
    Ok(verdict)
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn thresholds(given: &Option<Vec<f64>>) -> Vec<f64> {
    given.clone().unwrap_or_else(|| DEFAULT_THRESHOLDS.to_vec())
}

fn sweep_verdict(model: Model, profile: &SweepProfile) -> Verdict {
    // sigma_max growth is only asserted for the interval; for the disc it is reported.
    let growth = model != Model::Interval || profile.sigma_max_strictly_increasing();
    Verdict::from_bool(profile.is_nested() && growth)
}

fn run_witness(model: Model, args: &WitnessArgs, format: Format, sink: &mut dyn Write) -> Result<Verdict> {
    let grid = args.grid.clone().unwrap_or_else(|| match model {
        Model::Interval => vec![100, 1000, 10_000],
        Model::Disc => vec![100, 1000],
    });
    if args.trunc_factor == 0 {
        return Err(Error::Config("--trunc-factor must be positive".into()));
    }
    let mut options = WitnessOptions::for_model(model);
    options.truncation = TruncationPolicy { factor: args.trunc_factor, floor: args.trunc_floor };
    let sweep = match &args.sizes {
        Some(sizes) => Some(compression_sweep(model, sizes, &thresholds(&args.thresholds), &SweepOptions::default())?),
        None => None,
    };
    let report = witness_protocol(model, &grid, &options)?;
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    let mut verdict = report.verdict;
    if let Some(p) = &sweep {
        verdict = Verdict::from_bool(verdict.passed() && sweep_verdict(model, p).passed());
    }
    match format {
        Format::Json => write_json(sink, &JsonReport::new(model, sweep.as_ref(), Some(&report), verdict))?,
        Format::Csv => write_witness_csv(sink, &report)?,
    }
    Ok(verdict)
}

fn run_index(args: &IndexArgs, format: Format, sink: &mut dyn Write) -> Result<Verdict> {
    if args.min_cut > args.max_cut {
        return Err(Error::Config("--min-cut must not exceed --max-cut".into()));
    }
    let ladder = index_ladder(args.min_cut..=args.max_cut);
    let mut checks = Vec::new();
    for row in &ladder {
        checks.extend(kernel_ladder_rung(row.cut, &KERNEL_SAMPLES)?);
    }
    let family = maximal_kernel_family(args.family_max, &KERNEL_SAMPLES);
    let ok = ladder.iter().all(|r| r.index == r.cut && r.dim_plus as i64 - r.dim_minus as i64 == r.index)
        && checks.iter().all(|c| c.residual <= KERNEL_RESIDUAL && c.boundary_ok)
        && family.residuals.iter().all(|&(_, r)| r <= KERNEL_RESIDUAL);
    let verdict = Verdict::from_bool(ok);
    match format {
        Format::Json => write_json(
            sink,
            &IndexJson { ladder: &ladder, kernel_checks: &checks, maximal_kernel: &family, verdict },
        )?,
        Format::Csv => write_index_csv(sink, &ladder)?,
    }
    Ok(verdict)
}

fn run_sweep(args: &SweepArgs, format: Format, sink: &mut dyn Write) -> Result<Verdict> {
    let sizes = args.sizes.clone().unwrap_or_else(|| DEFAULT_SWEEP_SIZES.to_vec());
    let options = SweepOptions { remove_k: !args.keep_k, disc_orders: args.disc_orders };
    let profile = compression_sweep(args.model, &sizes, &thresholds(&args.thresholds), &options)?;
    let verdict = sweep_verdict(args.model, &profile);
    match format {
        Format::Json => write_json(sink, &JsonReport::new(args.model, Some(&profile), None, verdict))?,
        Format::Csv if args.counts => write_counts_csv(sink, &profile)?,
        Format::Csv => write_sweep_csv(sink, &profile)?,
    }
    Ok(verdict)
}
