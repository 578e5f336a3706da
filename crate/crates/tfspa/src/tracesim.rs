//! Hamming-weight trace simulation and the trace file format.
//!
//! A trace records one noisy Hamming-weight measurement per cascade byte:
//! `H(v) + e` and `H(w) + e` with each `e` drawn independently from
//! N(0, sigma^2). Independence holds across every measurement point,
//! including the V and W samples of one byte; hardware captures may
//! correlate those. Stages 0..R-1 are recorded in the schedule's
//! right-to-left numbering (stage 0 is the final substitution); the input
//! stage is public (the subkey index) so it carries no information worth
//! measuring.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, StandardNormal};
use thiserror::Error;

use crate::schedule::{compute_intermediates, hamming, KeySize, SecretKey, LANES, SUBKEY_COUNT};

/// Additive Gaussian measurement error, in Hamming-weight units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseModel {
    /// Standard deviation; 0 gives exact integer weights.
    pub sigma: f64,
    /// PRNG seed; identical (key, sigma, seed) triples reproduce bit-identical traces.
    pub seed: u64,
}

impl NoiseModel {
    pub fn new(sigma: f64, seed: u64) -> Self {
        assert!(
            sigma >= 0.0 && sigma.is_finite(),
            "sigma must be finite and >= 0"
        );
        NoiseModel { sigma, seed }
    }
}

/// Measured Hamming weights for one schedule execution.
///
/// Values are stored row-major in (subkey, lane, stage) order, stages
/// 0..R-1. The noise parameters ride along as bookkeeping metadata only;
/// nothing on the recovery path reads them.
#[derive(Debug, Clone, PartialEq)]
pub struct HammingTrace {
    size: KeySize,
    noise: NoiseModel,
    hv: Vec<f64>,
    hw: Vec<f64>,
}

impl HammingTrace {
    /// Wraps externally produced measurements (e.g. real captures).
    /// Both arrays must hold 40*4*R finite values in row-major
    /// (subkey, lane, stage) order.
    pub fn from_parts(
        size: KeySize,
        noise: NoiseModel,
        hv: Vec<f64>,
        hw: Vec<f64>,
    ) -> Result<Self, TraceFormatError> {
        let expected = SUBKEY_COUNT * LANES * size.rounds();
        for (section, arr) in [("V", &hv), ("W", &hw)] {
            if arr.len() != expected {
                return Err(TraceFormatError::TruncatedPayload {
                    section,
                    expected,
                    found: arr.len(),
                });
            }
            if let Some(index) = arr.iter().position(|x| !x.is_finite()) {
                return Err(TraceFormatError::NonFiniteValue { section, index });
            }
        }
        Ok(HammingTrace {
            size,
            noise,
            hv,
            hw,
        })
    }

    pub fn key_size(&self) -> KeySize {
        self.size
    }

    pub fn rounds(&self) -> usize {
        self.size.rounds()
    }

    pub fn noise(&self) -> NoiseModel {
        self.noise
    }

    fn index(&self, subkey: usize, lane: usize, stage: usize) -> usize {
        debug_assert!(subkey < SUBKEY_COUNT && lane < LANES && stage < self.rounds());
        (subkey * LANES + lane) * self.rounds() + stage
    }

    /// Measured H(v) at the given cascade position, stage 0..R-1.
    pub fn hv(&self, subkey: usize, lane: usize, stage: usize) -> f64 {
        self.hv[self.index(subkey, lane, stage)]
    }

    /// Measured H(w) at the given cascade position, stage 0..R-1.
    pub fn hw(&self, subkey: usize, lane: usize, stage: usize) -> f64 {
        self.hw[self.index(subkey, lane, stage)]
    }

    pub fn hv_values(&self) -> &[f64] {
        &self.hv
    }

    pub fn hw_values(&self) -> &[f64] {
        &self.hw
    }

    #[cfg(test)]
    pub(crate) fn hv_values_mut(&mut self) -> &mut [f64] {
        &mut self.hv
    }

    #[cfg(test)]
    pub(crate) fn hw_values_mut(&mut self) -> &mut [f64] {
        &mut self.hw
    }
}

/// Simulates one noisy reading of the schedule under the given key.
///
/// Noise deviates are drawn from a ChaCha12 stream seeded with `noise.seed`:
/// first all V entries in row-major (subkey, lane, stage) order, then all W
/// entries. Deterministic in (key, sigma, seed).
pub fn simulate_trace(key: &SecretKey, noise: &NoiseModel) -> HammingTrace {
    assert!(
        noise.sigma >= 0.0 && noise.sigma.is_finite(),
        "sigma must be finite and >= 0"
    );
    let inter = compute_intermediates(key);
    let rounds = key.rounds();
    let mut rng = ChaCha12Rng::seed_from_u64(noise.seed);
    let mut sample = |exact: u32| -> f64 {
        let e: f64 = StandardNormal.sample(&mut rng);
        exact as f64 + noise.sigma * e
    };
    let mut hv = Vec::with_capacity(SUBKEY_COUNT * LANES * rounds);
    for subkey in 0..SUBKEY_COUNT {
        for lane in 0..LANES {
            for stage in 0..rounds {
                hv.push(sample(hamming(inter.v(subkey, lane, stage))));
            }
        }
    }
    let mut hw = Vec::with_capacity(SUBKEY_COUNT * LANES * rounds);
    for subkey in 0..SUBKEY_COUNT {
        for lane in 0..LANES {
            for stage in 0..rounds {
                hw.push(sample(hamming(inter.w(subkey, lane, stage))));
            }
        }
    }
    HammingTrace {
        size: key.size(),
        noise: *noise,
        hv,
        hw,
    }
}

/// Simulates `n` independent readings of the same key.
///
/// Reading r uses seed `base_seed + r` (wrapping); this derivation is part
/// of the format contract and stays stable.
pub fn multi_trace(key: &SecretKey, sigma: f64, n: usize, base_seed: u64) -> Vec<HammingTrace> {
    assert!(n >= 1, "at least one reading required");
    (0..n)
        .map(|r| {
            simulate_trace(
                key,
                &NoiseModel::new(sigma, base_seed.wrapping_add(r as u64)),
            )
        })
        .collect()
}

const MAGIC: &str = "TFSPA1";

#[derive(Debug, Error)]
pub enum TraceFormatError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("missing header line")]
    MissingHeader,
    #[error("bad magic: expected {MAGIC:?}, found {found:?}")]
    BadMagic { found: String },
    #[error("header has {found} fields, expected 5 (magic key_bits R sigma seed)")]
    BadHeaderShape { found: usize },
    #[error("unsupported key size: {found} bits")]
    UnsupportedKeySize { found: String },
    #[error("bad header field {field}: {value:?}")]
    BadField { field: &'static str, value: String },
    #[error("rounds field is {rounds} but key_bits {key_bits} implies {expected}")]
    RoundsMismatch {
        rounds: u32,
        key_bits: u32,
        expected: u32,
    },
    #[error("missing section marker {section:?}")]
    MissingSection { section: &'static str },
    #[error("section {section} truncated: expected {expected} values, found {found}")]
    TruncatedPayload {
        section: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("bad value in section {section} at index {index}: {value:?}")]
    BadValue {
        section: &'static str,
        index: usize,
        value: String,
    },
    #[error("non-finite value in section {section} at index {index}")]
    NonFiniteValue { section: &'static str, index: usize },
    #[error("trailing data after the W section")]
    TrailingData,
}

/// 17 significant digits: enough to round-trip any f64 exactly.
fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Writes the trace in the text container format:
/// a `TFSPA1 key_bits R sigma seed` header, then the V and W arrays, one
/// value per line in row-major (subkey, lane, stage) order.
pub fn write_trace(trace: &HammingTrace, out: &mut impl Write) -> io::Result<()> {
    writeln!(
        out,
        "{MAGIC} {} {} {} {}",
        trace.key_size().bits(),
        trace.rounds(),
        fmt_f64(trace.noise.sigma),
        trace.noise.seed
    )?;
    writeln!(out, "V:")?;
    for x in trace.hv_values() {
        writeln!(out, "{}", fmt_f64(*x))?;
    }
    writeln!(out, "W:")?;
    for x in trace.hw_values() {
        writeln!(out, "{}", fmt_f64(*x))?;
    }
    Ok(())
}

pub fn write_trace_file(trace: &HammingTrace, path: impl AsRef<Path>) -> io::Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    write_trace(trace, &mut out)?;
    out.flush()
}

pub fn read_trace(reader: impl BufRead) -> Result<HammingTrace, TraceFormatError> {
    let mut lines = reader.lines();
    let header = lines.next().ok_or(TraceFormatError::MissingHeader)??;
    let fields: Vec<&str> = header.split(' ').collect();
    if fields.is_empty() || fields[0] != MAGIC {
        return Err(TraceFormatError::BadMagic {
            found: fields.first().unwrap_or(&"").to_string(),
        });
    }
    if fields.len() != 5 {
        return Err(TraceFormatError::BadHeaderShape {
            found: fields.len(),
        });
    }
    let key_bits: u32 = fields[1].parse().map_err(|_| TraceFormatError::BadField {
        field: "key_bits",
        value: fields[1].to_string(),
    })?;
    let size = KeySize::from_bits(key_bits).map_err(|_| TraceFormatError::UnsupportedKeySize {
        found: fields[1].to_string(),
    })?;
    let rounds: u32 = fields[2].parse().map_err(|_| TraceFormatError::BadField {
        field: "R",
        value: fields[2].to_string(),
    })?;
    if rounds != size.rounds() as u32 {
        return Err(TraceFormatError::RoundsMismatch {
            rounds,
            key_bits,
            expected: size.rounds() as u32,
        });
    }
    let sigma: f64 = fields[3].parse().map_err(|_| TraceFormatError::BadField {
        field: "sigma",
        value: fields[3].to_string(),
    })?;
    if !sigma.is_finite() || sigma < 0.0 {
        return Err(TraceFormatError::BadField {
            field: "sigma",
            value: fields[3].to_string(),
        });
    }
    let seed: u64 = fields[4].parse().map_err(|_| TraceFormatError::BadField {
        field: "seed",
        value: fields[4].to_string(),
    })?;

    let expected = SUBKEY_COUNT * LANES * size.rounds();
    let mut read_section = |section: &'static str| -> Result<Vec<f64>, TraceFormatError> {
        match lines.next() {
            Some(Ok(line)) if line == format!("{section}:") => {}
            Some(Ok(_)) | None => return Err(TraceFormatError::MissingSection { section }),
            Some(Err(e)) => return Err(e.into()),
        }
        let mut values = Vec::with_capacity(expected);
        for index in 0..expected {
            let line = match lines.next() {
                Some(line) => line?,
                None => {
                    return Err(TraceFormatError::TruncatedPayload {
                        section,
                        expected,
                        found: index,
                    })
                }
            };
            let value: f64 = line.parse().map_err(|_| TraceFormatError::BadValue {
                section,
                index,
                value: line.clone(),
            })?;
            if !value.is_finite() {
                return Err(TraceFormatError::NonFiniteValue { section, index });
            }
            values.push(value);
        }
        Ok(values)
    };

    let hv = read_section("V")?;
    let hw = read_section("W")?;
    if lines.next().is_some() {
        return Err(TraceFormatError::TrailingData);
    }
    HammingTrace::from_parts(size, NoiseModel { sigma, seed }, hv, hw)
}

pub fn read_trace_file(path: impl AsRef<Path>) -> Result<HammingTrace, TraceFormatError> {
    read_trace(BufReader::new(File::open(path)?))
}
