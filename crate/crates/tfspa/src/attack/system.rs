//! Per-byte measurement systems.
//!
//! For a fixed (lane, stage, parity) the 20 same-parity subkey rows all XOR
//! the same key byte, giving 20 Hamming equations in its 8 bits. This module
//! builds that system from a trace, solves it exhaustively (clean data) or
//! by least squares over the +-1 linearization (noisy data).

use nalgebra::{SMatrix, SVector};

use crate::schedule::{hamming, LANES, SUBKEY_COUNT};
use crate::tracesim::HammingTrace;

/// Same-parity subkey rows per system.
pub const SYSTEM_ROWS: usize = SUBKEY_COUNT / 2;

/// Which half of the subkey indices a system draws from. Even subkeys
/// consume the even words of the key, odd subkeys the odd words, so the two
/// halves form disjoint systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Even, Parity::Odd];

    pub fn offset(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    /// Subkey index of the given system row (rows are ascending same-parity
    /// subkeys).
    pub fn subkey_for_row(self, row: usize) -> usize {
        2 * row + self.offset()
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// Post-substitution bytes for every (subkey, lane) at one stage; the
/// attacker's forward-model state.
pub type StageBytes = [[u8; LANES]; SUBKEY_COUNT];

/// Nearest-integer measurement, half away from zero, clamped to the valid
/// weight range 0..=8.
pub fn measured_weight(x: f64) -> i32 {
    x.round().clamp(0.0, 8.0) as i32
}

/// One 20-equation, 8-unknown system tied to a key byte.
#[derive(Debug, Clone)]
pub struct MeasuredSystem {
    pub lane: usize,
    pub stage: usize,
    pub parity: Parity,
    /// Known post-substitution bytes at `stage`, one per row.
    pub known_w: [u8; SYSTEM_ROWS],
    /// Bits of `known_w`, `d[row][n]` = bit n.
    pub d: [[u8; 8]; SYSTEM_ROWS],
    /// Sign matrix `-2d + 1`, mapping {0,1} to {+1,-1}.
    pub a: [[i8; 8]; SYSTEM_ROWS],
    /// Rounded measurements of H(v) one stage downstream, each in 0..=8.
    pub rhs: [i32; SYSTEM_ROWS],
    /// The same measurements before rounding.
    pub rhs_raw: [f64; SYSTEM_ROWS],
}

/// Assembles the system for (lane, stage, parity) from the trace and the
/// currently known stage bytes. `stage` must be in 1..=R: the right-hand
/// side reads the measured H(v) at `stage - 1`.
pub fn build_system(
    trace: &HammingTrace,
    known_w: &StageBytes,
    lane: usize,
    stage: usize,
    parity: Parity,
) -> MeasuredSystem {
    assert!(lane < LANES, "lane {lane} out of range 0..4");
    assert!(
        (1..=trace.rounds()).contains(&stage),
        "stage {stage} out of range 1..={}",
        trace.rounds()
    );
    let mut sys = MeasuredSystem {
        lane,
        stage,
        parity,
        known_w: [0; SYSTEM_ROWS],
        d: [[0; 8]; SYSTEM_ROWS],
        a: [[0; 8]; SYSTEM_ROWS],
        rhs: [0; SYSTEM_ROWS],
        rhs_raw: [0.0; SYSTEM_ROWS],
    };
    for row in 0..SYSTEM_ROWS {
        let subkey = parity.subkey_for_row(row);
        let w = known_w[subkey][lane];
        sys.known_w[row] = w;
        for n in 0..8 {
            let bit = (w >> n) & 1;
            sys.d[row][n] = bit;
            sys.a[row][n] = 1 - 2 * bit as i8;
        }
        let raw = trace.hv(subkey, lane, stage - 1);
        sys.rhs_raw[row] = raw;
        sys.rhs[row] = measured_weight(raw);
    }
    sys
}

/// Exhaustive solve: the smallest byte whose predicted weights match every
/// row, or None when the measurements are inconsistent.
pub fn break_key_byte_exact(sys: &MeasuredSystem) -> Option<u8> {
    (0..=255u8).find(|&m| {
        sys.known_w
            .iter()
            .zip(sys.rhs.iter())
            .all(|(&w, &rhs)| hamming(w ^ m) as i32 == rhs)
    })
}

const RIDGE_LAMBDA: f64 = 1e-9;

/// Least-squares estimate of the key byte.
///
/// Rewrites each XOR equation as a linear one (`rhs - H(w) = sum a_n x_n`),
/// solves the normal equations in closed form, and maps each coordinate back
/// to a bit by clamped rounding. Returns the byte and the L2 distance
/// between the real-valued solution and its rounding (a confidence
/// diagnostic: near 0 means the system pointed firmly at this byte).
///
/// A rank-deficient normal matrix is solved with a small ridge term instead
/// of failing; downstream mask correction handles any residual error.
pub fn lms_estimate(sys: &MeasuredSystem) -> (u8, f64) {
    let a = SMatrix::<f64, SYSTEM_ROWS, 8>::from_fn(|r, n| sys.a[r][n] as f64);
    let b = SVector::<f64, SYSTEM_ROWS>::from_fn(|r, _| {
        sys.rhs[r] as f64 - hamming(sys.known_w[r]) as f64
    });
    let ata = a.transpose() * a;
    let atb = a.transpose() * b;
    let x = match ata.cholesky() {
        Some(ch) => ch.solve(&atb),
        None => {
            log::warn!(
                "rank-deficient normal equations (lane {}, stage {}, {} rows); applying ridge",
                sys.lane,
                sys.stage,
                sys.parity
            );
            let ridged = ata + SMatrix::<f64, 8, 8>::identity() * RIDGE_LAMBDA;
            ridged
                .cholesky()
                .expect("ridged normal matrix is positive definite")
                .solve(&atb)
        }
    };
    let mut byte = 0u8;
    let mut dist_sq = 0.0;
    for n in 0..8 {
        let bit = x[n].round().clamp(0.0, 1.0);
        byte |= (bit as u8) << n;
        dist_sq += (x[n] - bit) * (x[n] - bit);
    }
    (byte, dist_sq.sqrt())
}
