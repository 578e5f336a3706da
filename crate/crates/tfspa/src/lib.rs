//! Workbench for Hamming-weight power analysis of the Twofish key schedule.
//!
//! The schedule expands a key through a byte-substitution/XOR cascade whose
//! intermediate bytes correlate with instantaneous power draw. Given the
//! Hamming weights of those bytes, heavily redundant per-byte equation
//! systems pin down the key. This crate models the cascade exactly
//! ([`schedule`]), simulates noisy weight measurements ([`tracesim`]),
//! recovers keys from them at three noise-tolerance tiers ([`attack`]), and
//! reproduces accuracy/runtime tables over parameter grids ([`bench`]).

pub mod attack;
pub mod bench;
pub mod schedule;
pub mod tracesim;

pub use attack::{attack_exact, attack_multi, attack_noisy, AttackReport};
pub use schedule::{KeySize, SecretKey};
pub use tracesim::{
    multi_trace, read_trace_file, simulate_trace, write_trace_file, HammingTrace, NoiseModel,
};
