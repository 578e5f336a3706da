//! Command-line front end: trace simulation, key recovery, and grid
//! benchmarks.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tfspa::attack::{attack_multi, attack_noisy, AttackReport};
use tfspa::bench::{emit_csv, emit_markdown, run_grid, BenchConfig};
use tfspa::schedule::{dump_tables, KeySize, SecretKey};
use tfspa::tracesim::{
    read_trace_file, simulate_trace, write_trace_file, NoiseModel, TraceFormatError,
};

#[derive(Parser)]
#[command(
    name = "tfspa",
    version,
    about = "Twofish key-schedule power-analysis workbench"
)]
struct Cli {
    /// Print the q0/q1 tables and the S-box selector matrix, then exit.
    #[arg(long)]
    dump_tables: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate a noisy Hamming-weight trace for a key.
    Trace(TraceArgs),
    /// Recover a key from one or more trace files.
    Attack(AttackArgs),
    /// Sweep a (sigma, tau, key size) grid and report accuracy/runtime.
    Bench(BenchArgs),
}

#[derive(Args)]
struct TraceArgs {
    /// Key bytes as hex (32, 48 or 64 digits).
    #[arg(long)]
    key_hex: String,
    /// Gaussian noise standard deviation, in Hamming-weight units.
    #[arg(long)]
    sigma: f64,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct AttackArgs {
    /// Trace file (the first reading).
    #[arg(long)]
    trace: PathBuf,
    /// Mask correction threshold; 0 disables correction.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(0..=8))]
    tau: u8,
    /// Additional readings of the same key for the majority vote.
    #[arg(long, num_args = 1..)]
    multi: Vec<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma list or inclusive range start:stop:step, e.g. 0:2:0.2.
    #[arg(long, default_value = "0:2:0.2")]
    sigmas: String,
    /// Comma list or inclusive range a..b, e.g. 0..8.
    #[arg(long, default_value = "0..8")]
    taus: String,
    /// Comma list drawn from 128,192,256.
    #[arg(long, default_value = "128")]
    key_sizes: String,
    /// Attacks per cell (default 200, or 1000 with --full).
    #[arg(long)]
    runs: Option<usize>,
    /// Use the published sample size of 1000 runs per cell.
    #[arg(long)]
    full: bool,
    #[arg(long, default_value_t = 0x7f5a_11ce_0000_0001)]
    seed: u64,
    /// Attack each key with up to --max-readings traces and a majority vote.
    #[arg(long)]
    multi: bool,
    #[arg(long, default_value_t = 5)]
    max_readings: usize,
    /// CSV destination.
    #[arg(long)]
    out: PathBuf,
    /// Optional markdown rendering of the accuracy matrices.
    #[arg(long)]
    markdown: Option<PathBuf>,
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    if cli.dump_tables {
        let mut stdout = io::stdout().lock();
        if let Err(e) = dump_tables(&mut stdout) {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
        return ExitCode::SUCCESS;
    }
    let Some(command) = cli.command else {
        eprintln!("error: no subcommand given (try --help)");
        return ExitCode::FAILURE;
    };
    match run(command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::TraceFormat(e)) => {
            eprintln!("trace format error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

enum CliError {
    TraceFormat(TraceFormatError),
    Other(String),
}

impl From<TraceFormatError> for CliError {
    fn from(e: TraceFormatError) -> Self {
        match e {
            TraceFormatError::Io(io) => CliError::Other(io.to_string()),
            other => CliError::TraceFormat(other),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Other(e.to_string())
    }
}

fn other(msg: impl ToString) -> CliError {
    CliError::Other(msg.to_string())
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Trace(args) => run_trace(args),
        Command::Attack(args) => run_attack(args),
        Command::Bench(args) => run_bench(args),
    }
}

fn run_trace(args: TraceArgs) -> Result<(), CliError> {
    let key = SecretKey::from_hex(&args.key_hex).map_err(other)?;
    if !args.sigma.is_finite() || args.sigma < 0.0 {
        return Err(other("sigma must be finite and >= 0"));
    }
    let trace = simulate_trace(&key, &NoiseModel::new(args.sigma, args.seed));
    write_trace_file(&trace, &args.out)?;
    println!(
        "wrote {}-bit trace (sigma {}, seed {}) to {}",
        key.size(),
        args.sigma,
        args.seed,
        args.out.display()
    );
    Ok(())
}

fn run_attack(args: AttackArgs) -> Result<(), CliError> {
    let mut readings = vec![read_trace_file(&args.trace)?];
    for path in &args.multi {
        readings.push(read_trace_file(path)?);
    }
    let report = if readings.len() > 1 {
        attack_multi(&readings, args.tau, readings.len()).map_err(other)?
    } else {
        attack_noisy(&readings[0], args.tau)
    };
    let text = render_report(&report, args.tau, readings.len());
    match &args.report {
        Some(path) => {
            let mut out = BufWriter::new(File::create(path)?);
            out.write_all(text.as_bytes())?;
            out.flush()?;
            println!("recovered key {}", report.key_estimate.to_hex());
            println!("report written to {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn render_report(report: &AttackReport, tau: u8, readings_available: usize) -> String {
    let mut text = String::new();
    text.push_str(&format!(
        "recovered key: {}\n",
        report.key_estimate.to_hex()
    ));
    text.push_str(&format!(
        "key size: {} bits; tau: {tau}; readings used: {} of {readings_available}\n",
        report.key_estimate.size(),
        report.readings_used
    ));
    text.push_str(&format!(
        "elapsed: {:.3} ms\n\n",
        report.elapsed.as_secs_f64() * 1000.0
    ));
    text.push_str("byte  value  tier      lms_dist  mask_w  objective\n");
    for (l, diag) in report.per_byte.iter().enumerate() {
        text.push_str(&format!(
            "{l:>4}   0x{:02x}  {:<8}  {:>8.4}  {:>6}  {:>9}\n",
            report.key_estimate.byte(l),
            diag.tier.to_string(),
            diag.lms_rounding_distance,
            diag.mask_weight_used,
            diag.objective_value
        ));
    }
    text
}

fn run_bench(args: BenchArgs) -> Result<(), CliError> {
    let config = BenchConfig {
        sigmas: parse_f64_grid(&args.sigmas).map_err(other)?,
        taus: parse_tau_grid(&args.taus).map_err(other)?,
        key_sizes: parse_key_sizes(&args.key_sizes).map_err(other)?,
        runs: args.runs.unwrap_or(if args.full { 1000 } else { 200 }),
        base_seed: args.seed,
        multi: args.multi,
        max_readings: args.max_readings,
    };
    let result = run_grid(&config).map_err(other)?;
    let mut csv = BufWriter::new(File::create(&args.out)?);
    emit_csv(&result, &mut csv)?;
    csv.flush()?;
    println!(
        "{} cells x {} runs written to {}",
        result.cells.len(),
        result.runs,
        args.out.display()
    );
    if let Some(path) = &args.markdown {
        let mut md = BufWriter::new(File::create(path)?);
        emit_markdown(&result, &mut md)?;
        md.flush()?;
        println!("markdown tables written to {}", path.display());
    }
    Ok(())
}

/// Parses "a,b,c" or inclusive "start:stop:step". Range endpoints step in
/// decimal, so 0:2:0.2 hits 0.2, 0.4, ... exactly rather than accumulating
/// float error.
fn parse_f64_grid(spec: &str) -> Result<Vec<f64>, String> {
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("range {spec:?} must be start:stop:step"));
        }
        let decimals = parts
            .iter()
            .map(|p| p.split('.').nth(1).map_or(0, str::len))
            .max()
            .unwrap();
        let scale = 10i64.pow(decimals as u32);
        let to_scaled = |p: &str| -> Result<i64, String> {
            let v: f64 = p.parse().map_err(|_| format!("bad number {p:?}"))?;
            Ok((v * scale as f64).round() as i64)
        };
        let (start, stop, step) = (
            to_scaled(parts[0])?,
            to_scaled(parts[1])?,
            to_scaled(parts[2])?,
        );
        if step <= 0 {
            return Err("range step must be positive".into());
        }
        let mut values = Vec::new();
        let mut v = start;
        while v <= stop {
            values.push(v as f64 / scale as f64);
            v += step;
        }
        if values.is_empty() {
            return Err(format!("range {spec:?} is empty"));
        }
        Ok(values)
    } else {
        spec.split(',')
            .map(|p| {
                p.trim()
                    .parse::<f64>()
                    .map_err(|_| format!("bad number {p:?}"))
            })
            .collect()
    }
}

/// Parses "a,b,c" or inclusive "a..b".
fn parse_tau_grid(spec: &str) -> Result<Vec<u8>, String> {
    if let Some((a, b)) = spec.split_once("..") {
        let a: u8 = a.trim().parse().map_err(|_| format!("bad tau {a:?}"))?;
        let b: u8 = b.trim().parse().map_err(|_| format!("bad tau {b:?}"))?;
        if a > b {
            return Err(format!("range {spec:?} is empty"));
        }
        Ok((a..=b).collect())
    } else {
        spec.split(',')
            .map(|p| p.trim().parse::<u8>().map_err(|_| format!("bad tau {p:?}")))
            .collect()
    }
}

fn parse_key_sizes(spec: &str) -> Result<Vec<KeySize>, String> {
    spec.split(',')
        .map(|p| {
            let bits: u32 = p
                .trim()
                .parse()
                .map_err(|_| format!("bad key size {p:?}"))?;
            KeySize::from_bits(bits).map_err(|e| e.to_string())
        })
        .collect()
}
