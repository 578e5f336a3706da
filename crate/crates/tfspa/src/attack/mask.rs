//! Mask correction for least-squares estimates.
//!
//! A wrong estimate usually has only one or two wrong bits, so candidates
//! are tried in order of increasing Hamming distance from the estimate:
//! XOR with every mask of weight <= tau, scored by how well the predicted
//! weights fit the trace at both the S-box input (V) and output (W). The
//! W term keeps a heavy mask from over-fitting the V residuals alone.

use std::sync::OnceLock;

use crate::schedule::{hamming, q_select};
use crate::tracesim::HammingTrace;

use super::system::{measured_weight, Parity, StageBytes, SYSTEM_ROWS};

fn ordered_masks() -> &'static [u8; 256] {
    static TABLE: OnceLock<[u8; 256]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut masks: Vec<u8> = (0..=255).collect();
        masks.sort_by_key(|&m| (hamming(m), m));
        masks.try_into().unwrap()
    })
}

/// The 256 byte masks ordered by (Hamming weight, value), truncated at a
/// weight threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaskOrder {
    tau: u8,
}

impl MaskOrder {
    pub fn new(tau: u8) -> Self {
        assert!(tau <= 8, "tau {tau} out of range 0..=8");
        MaskOrder { tau }
    }

    pub fn tau(&self) -> u8 {
        self.tau
    }

    /// The masks of weight <= tau, in search order.
    pub fn masks(&self) -> &'static [u8] {
        let table = ordered_masks();
        let end = table
            .iter()
            .position(|&m| hamming(m) > self.tau as u32)
            .unwrap_or(table.len());
        &table[..end]
    }

    pub fn len(&self) -> usize {
        self.masks().len()
    }

    pub fn is_empty(&self) -> bool {
        false // weight-0 mask is always present
    }
}

/// The candidate bytes `estimate ^ mask` for every mask of weight <= tau,
/// in mask order.
pub fn mask_candidates(estimate: u8, tau: u8) -> Vec<u8> {
    MaskOrder::new(tau)
        .masks()
        .iter()
        .map(|&m| estimate ^ m)
        .collect()
}

/// Residual rows a candidate is scored against: the known stage byte and
/// the rounded V/W measurements one stage downstream.
type ResidualRows = [(u8, i32, i32); SYSTEM_ROWS];

fn residual_rows(
    lane: usize,
    stage: usize,
    parity: Parity,
    known_w: &StageBytes,
    trace: &HammingTrace,
) -> ResidualRows {
    let mut rows = [(0u8, 0i32, 0i32); SYSTEM_ROWS];
    for (row, slot) in rows.iter_mut().enumerate() {
        let subkey = parity.subkey_for_row(row);
        *slot = (
            known_w[subkey][lane],
            measured_weight(trace.hv(subkey, lane, stage - 1)),
            measured_weight(trace.hw(subkey, lane, stage - 1)),
        );
    }
    rows
}

fn score(candidate: u8, rows: &ResidualRows, next_q: &[u8; 256]) -> u32 {
    let mut total = 0u32;
    for &(w, rhs_v, rhs_w) in rows.iter() {
        let v_next = w ^ candidate;
        total += (hamming(v_next) as i32 - rhs_v).unsigned_abs();
        total += (hamming(next_q[v_next as usize]) as i32 - rhs_w).unsigned_abs();
    }
    total
}

/// Scores the combined V/W objective for one byte (the value mask
/// correction minimizes); exposed for diagnostics.
pub fn residual_objective(
    byte: u8,
    lane: usize,
    stage: usize,
    parity: Parity,
    known_w: &StageBytes,
    trace: &HammingTrace,
) -> u32 {
    let rows = residual_rows(lane, stage, parity, known_w, trace);
    score(byte, &rows, q_select(lane, stage - 1))
}

/// Scans the tau-bounded candidate set around `estimate` and returns the
/// first candidate achieving the minimum objective, its objective value,
/// and the weight of the applied mask. First-minimum in mask order means
/// ties resolve toward the smallest correction.
pub fn mask_correct(
    estimate: u8,
    lane: usize,
    stage: usize,
    parity: Parity,
    known_w: &StageBytes,
    trace: &HammingTrace,
    tau: u8,
) -> (u8, u32, u8) {
    let rows = residual_rows(lane, stage, parity, known_w, trace);
    let next_q = q_select(lane, stage - 1);
    let mut best = estimate;
    let mut best_mask = 0u8;
    let mut best_obj = u32::MAX;
    for &mask in MaskOrder::new(tau).masks() {
        let candidate = estimate ^ mask;
        let obj = score(candidate, &rows, next_q);
        if obj < best_obj {
            best = candidate;
            best_mask = mask;
            best_obj = obj;
        }
    }
    (best, best_obj, hamming(best_mask) as u8)
}
