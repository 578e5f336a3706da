//! Monte Carlo benchmark harness.
//!
//! Sweeps a (sigma, tau, key size) grid, running freshly keyed simulated
//! attacks per cell and scoring exact full-key recovery. Cells are seeded
//! independently of iteration order, so results are reproducible and any
//! cell can be re-run in isolation.

use std::io::{self, Write};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::attack::{attack_multi, attack_noisy};
use crate::schedule::{KeySize, SecretKey};
use crate::tracesim::{multi_trace, simulate_trace, NoiseModel};

/// Grid description for one sweep.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sigmas: Vec<f64>,
    pub taus: Vec<u8>,
    pub key_sizes: Vec<KeySize>,
    /// Attacks per cell.
    pub runs: usize,
    pub base_seed: u64,
    /// Use the multiple-readings protocol instead of single traces.
    pub multi: bool,
    pub max_readings: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sigmas: vec![0.0],
            taus: vec![3],
            key_sizes: vec![KeySize::Bits128],
            runs: 200,
            base_seed: 0x7f5a_11ce_0000_0001,
            multi: false,
            max_readings: 5,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum BenchError {
    #[error("runs must be >= 1")]
    NoRuns,
    #[error("sigma grid is empty")]
    NoSigmas,
    #[error("tau grid is empty")]
    NoTaus,
    #[error("key size grid is empty")]
    NoKeySizes,
    #[error("sigma {0} is not a finite non-negative value")]
    BadSigma(f64),
    #[error("tau {0} out of range 0..=8")]
    BadTau(u8),
    #[error("max_readings must be >= 1 in multi mode")]
    BadMaxReadings,
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), BenchError> {
        if self.runs == 0 {
            return Err(BenchError::NoRuns);
        }
        if self.sigmas.is_empty() {
            return Err(BenchError::NoSigmas);
        }
        if self.taus.is_empty() {
            return Err(BenchError::NoTaus);
        }
        if self.key_sizes.is_empty() {
            return Err(BenchError::NoKeySizes);
        }
        if let Some(&bad) = self.sigmas.iter().find(|s| !s.is_finite() || **s < 0.0) {
            return Err(BenchError::BadSigma(bad));
        }
        if let Some(&bad) = self.taus.iter().find(|&&t| t > 8) {
            return Err(BenchError::BadTau(bad));
        }
        if self.multi && self.max_readings == 0 {
            return Err(BenchError::BadMaxReadings);
        }
        Ok(())
    }
}

/// Aggregates for one grid cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellResult {
    pub key_size: KeySize,
    pub sigma: f64,
    pub tau: u8,
    /// Fraction of runs that recovered the full key exactly.
    pub accuracy: f64,
    /// Mean wall time per attack call, seconds. Trace generation and
    /// scoring are excluded.
    pub mean_runtime_s: f64,
    /// Mean readings consumed per run (multi mode only).
    pub readings_used: Option<f64>,
}

/// Sweep output; cells are ordered (key size, sigma, tau), nesting in that
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchResult {
    pub runs: usize,
    pub multi: bool,
    pub cells: Vec<CellResult>,
}

/// (key bits, sigma bits, tau, accuracy, mean readings) per cell.
pub type CellStats = (u32, u64, u8, f64, Option<f64>);

impl BenchResult {
    /// The seed-determined portion of the result (everything except wall
    /// times, which depend on the machine).
    pub fn deterministic_view(&self) -> Vec<CellStats> {
        self.cells
            .iter()
            .map(|c| {
                (
                    c.key_size.bits(),
                    c.sigma.to_bits(),
                    c.tau,
                    c.accuracy,
                    c.readings_used,
                )
            })
            .collect()
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn mix(h: u64, v: u64) -> u64 {
    splitmix64(h ^ v.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Seed for one (key size, sigma, tau, run) attack, independent of grid
/// iteration order: a splitmix64 chain over the cell coordinates. The key
/// is drawn from a ChaCha stream on `mix(seed, 1)` and the trace noise uses
/// `mix(seed, 2)`.
pub fn run_seed(base_seed: u64, key_size: KeySize, sigma: f64, tau: u8, run: usize) -> u64 {
    let mut h = mix(base_seed, key_size.bits() as u64);
    h = mix(h, sigma.to_bits());
    h = mix(h, tau as u64);
    mix(h, run as u64)
}

struct RunOutcome {
    hit: bool,
    seconds: f64,
    readings: usize,
}

fn run_once(config: &BenchConfig, size: KeySize, sigma: f64, tau: u8, run: usize) -> RunOutcome {
    let seed = run_seed(config.base_seed, size, sigma, tau, run);
    let mut key_rng = ChaCha12Rng::seed_from_u64(mix(seed, 1));
    let key = SecretKey::random(size, &mut key_rng);
    let noise_seed = mix(seed, 2);
    if config.multi {
        let readings = multi_trace(&key, sigma, config.max_readings, noise_seed);
        let t0 = Instant::now();
        let report = attack_multi(&readings, tau, config.max_readings)
            .expect("same-size non-empty readings");
        let seconds = t0.elapsed().as_secs_f64();
        RunOutcome {
            hit: report.key_estimate == key,
            seconds,
            readings: report.readings_used,
        }
    } else {
        let trace = simulate_trace(&key, &NoiseModel::new(sigma, noise_seed));
        let t0 = Instant::now();
        let report = attack_noisy(&trace, tau);
        let seconds = t0.elapsed().as_secs_f64();
        RunOutcome {
            hit: report.key_estimate == key,
            seconds,
            readings: 1,
        }
    }
}

/// Runs the whole grid. Runs within a cell execute in parallel; per-run
/// seeding keeps the statistics identical regardless of scheduling.
pub fn run_grid(config: &BenchConfig) -> Result<BenchResult, BenchError> {
    config.validate()?;
    let mut cells = Vec::new();
    for &size in &config.key_sizes {
        for &sigma in &config.sigmas {
            for &tau in &config.taus {
                let outcomes: Vec<RunOutcome> = (0..config.runs)
                    .into_par_iter()
                    .map(|run| run_once(config, size, sigma, tau, run))
                    .collect();
                let hits = outcomes.iter().filter(|o| o.hit).count();
                let total_s: f64 = outcomes.iter().map(|o| o.seconds).sum();
                let total_readings: usize = outcomes.iter().map(|o| o.readings).sum();
                cells.push(CellResult {
                    key_size: size,
                    sigma,
                    tau,
                    accuracy: hits as f64 / config.runs as f64,
                    mean_runtime_s: total_s / config.runs as f64,
                    readings_used: config
                        .multi
                        .then(|| total_readings as f64 / config.runs as f64),
                });
            }
        }
    }
    Ok(BenchResult {
        runs: config.runs,
        multi: config.multi,
        cells,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Markdown,
}

pub fn emit_report(
    result: &BenchResult,
    format: ReportFormat,
    out: &mut impl Write,
) -> io::Result<()> {
    match format {
        ReportFormat::Csv => emit_csv(result, out),
        ReportFormat::Markdown => emit_markdown(result, out),
    }
}

/// One row per cell: key_size, sigma, tau, accuracy, mean_runtime_s,
/// readings_used (blank outside multi mode).
pub fn emit_csv(result: &BenchResult, out: &mut impl Write) -> io::Result<()> {
    writeln!(
        out,
        "key_size,sigma,tau,accuracy,mean_runtime_s,readings_used"
    )?;
    for cell in &result.cells {
        let readings = cell
            .readings_used
            .map(|r| format!("{r}"))
            .unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{:.9},{}",
            cell.key_size.bits(),
            cell.sigma,
            cell.tau,
            cell.accuracy,
            cell.mean_runtime_s,
            readings
        )?;
    }
    Ok(())
}

/// Accuracy matrices (sigma rows by tau columns, percent) per key size,
/// with a trailing mean-runtime row aggregated over sigma.
pub fn emit_markdown(result: &BenchResult, out: &mut impl Write) -> io::Result<()> {
    for &size in unique_sizes(result).iter() {
        let cells: Vec<&CellResult> = result.cells.iter().filter(|c| c.key_size == size).collect();
        let sigmas = unique_f64(cells.iter().map(|c| c.sigma));
        let taus = {
            let mut taus: Vec<u8> = cells.iter().map(|c| c.tau).collect();
            taus.sort_unstable();
            taus.dedup();
            taus
        };
        writeln!(
            out,
            "## {}-bit keys ({} runs per cell{})\n",
            size.bits(),
            result.runs,
            if result.multi {
                ", multiple readings"
            } else {
                ""
            }
        )?;
        write!(out, "| sigma \\ tau |")?;
        for tau in &taus {
            write!(out, " {tau} |")?;
        }
        writeln!(out)?;
        write!(out, "|---|")?;
        for _ in &taus {
            write!(out, "---|")?;
        }
        writeln!(out)?;
        for &sigma in &sigmas {
            write!(out, "| {sigma} |")?;
            for &tau in &taus {
                let cell = cells
                    .iter()
                    .find(|c| c.sigma == sigma && c.tau == tau)
                    .expect("full grid");
                write!(out, " {:.1} |", cell.accuracy * 100.0)?;
            }
            writeln!(out)?;
        }
        // runtime varies little with sigma, so aggregate it per tau
        write!(out, "| t (ms) |")?;
        for &tau in &taus {
            let times: Vec<f64> = cells
                .iter()
                .filter(|c| c.tau == tau)
                .map(|c| c.mean_runtime_s)
                .collect();
            let mean_ms = 1000.0 * times.iter().sum::<f64>() / times.len() as f64;
            write!(out, " {mean_ms:.2} |")?;
        }
        writeln!(out)?;
        writeln!(out)?;
    }
    Ok(())
}

fn unique_sizes(result: &BenchResult) -> Vec<KeySize> {
    let mut sizes = Vec::new();
    for cell in &result.cells {
        if !sizes.contains(&cell.key_size) {
            sizes.push(cell.key_size);
        }
    }
    sizes
}

fn unique_f64(values: impl Iterator<Item = f64>) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for v in values {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}
