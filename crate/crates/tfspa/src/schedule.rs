//! Byte-level model of the Twofish key schedule.
//!
//! The schedule expands a 128/192/256-bit key into 40 32-bit subkeys by
//! running each subkey index through a cascade of fixed byte permutations
//! (q0/q1) interleaved with key-byte XORs. This module exposes that cascade
//! at byte granularity: the pre-substitution values `v` and post-substitution
//! values `w` at every stage, which is exactly the state a Hamming-weight
//! trace observes. Subkey finalization (MDS, rotation, PHT) is included for
//! validation against the standard cipher.

use std::fmt;
use std::io::{self, Write};

use thiserror::Error;

/// Number of subkey words the schedule produces.
pub const SUBKEY_COUNT: usize = 40;
/// Bytes per 32-bit schedule word.
pub const LANES: usize = 4;
/// Maximum number of S-box stages (columns of the selector matrix).
pub const MAX_STAGES: usize = 5;

/// The two fixed byte permutations used throughout the schedule.
static Q0: [u8; 256] = [
    0xa9, 0x67, 0xb3, 0xe8, 0x04, 0xfd, 0xa3, 0x76, 0x9a, 0x92, 0x80, 0x78, 0xe4, 0xdd, 0xd1, 0x38,
    0x0d, 0xc6, 0x35, 0x98, 0x18, 0xf7, 0xec, 0x6c, 0x43, 0x75, 0x37, 0x26, 0xfa, 0x13, 0x94, 0x48,
    0xf2, 0xd0, 0x8b, 0x30, 0x84, 0x54, 0xdf, 0x23, 0x19, 0x5b, 0x3d, 0x59, 0xf3, 0xae, 0xa2, 0x82,
    0x63, 0x01, 0x83, 0x2e, 0xd9, 0x51, 0x9b, 0x7c, 0xa6, 0xeb, 0xa5, 0xbe, 0x16, 0x0c, 0xe3, 0x61,
    0xc0, 0x8c, 0x3a, 0xf5, 0x73, 0x2c, 0x25, 0x0b, 0xbb, 0x4e, 0x89, 0x6b, 0x53, 0x6a, 0xb4, 0xf1,
    0xe1, 0xe6, 0xbd, 0x45, 0xe2, 0xf4, 0xb6, 0x66, 0xcc, 0x95, 0x03, 0x56, 0xd4, 0x1c, 0x1e, 0xd7,
    0xfb, 0xc3, 0x8e, 0xb5, 0xe9, 0xcf, 0xbf, 0xba, 0xea, 0x77, 0x39, 0xaf, 0x33, 0xc9, 0x62, 0x71,
    0x81, 0x79, 0x09, 0xad, 0x24, 0xcd, 0xf9, 0xd8, 0xe5, 0xc5, 0xb9, 0x4d, 0x44, 0x08, 0x86, 0xe7,
    0xa1, 0x1d, 0xaa, 0xed, 0x06, 0x70, 0xb2, 0xd2, 0x41, 0x7b, 0xa0, 0x11, 0x31, 0xc2, 0x27, 0x90,
    0x20, 0xf6, 0x60, 0xff, 0x96, 0x5c, 0xb1, 0xab, 0x9e, 0x9c, 0x52, 0x1b, 0x5f, 0x93, 0x0a, 0xef,
    0x91, 0x85, 0x49, 0xee, 0x2d, 0x4f, 0x8f, 0x3b, 0x47, 0x87, 0x6d, 0x46, 0xd6, 0x3e, 0x69, 0x64,
    0x2a, 0xce, 0xcb, 0x2f, 0xfc, 0x97, 0x05, 0x7a, 0xac, 0x7f, 0xd5, 0x1a, 0x4b, 0x0e, 0xa7, 0x5a,
    0x28, 0x14, 0x3f, 0x29, 0x88, 0x3c, 0x4c, 0x02, 0xb8, 0xda, 0xb0, 0x17, 0x55, 0x1f, 0x8a, 0x7d,
    0x57, 0xc7, 0x8d, 0x74, 0xb7, 0xc4, 0x9f, 0x72, 0x7e, 0x15, 0x22, 0x12, 0x58, 0x07, 0x99, 0x34,
    0x6e, 0x50, 0xde, 0x68, 0x65, 0xbc, 0xdb, 0xf8, 0xc8, 0xa8, 0x2b, 0x40, 0xdc, 0xfe, 0x32, 0xa4,
    0xca, 0x10, 0x21, 0xf0, 0xd3, 0x5d, 0x0f, 0x00, 0x6f, 0x9d, 0x36, 0x42, 0x4a, 0x5e, 0xc1, 0xe0,
];

static Q1: [u8; 256] = [
    0x75, 0xf3, 0xc6, 0xf4, 0xdb, 0x7b, 0xfb, 0xc8, 0x4a, 0xd3, 0xe6, 0x6b, 0x45, 0x7d, 0xe8, 0x4b,
    0xd6, 0x32, 0xd8, 0xfd, 0x37, 0x71, 0xf1, 0xe1, 0x30, 0x0f, 0xf8, 0x1b, 0x87, 0xfa, 0x06, 0x3f,
    0x5e, 0xba, 0xae, 0x5b, 0x8a, 0x00, 0xbc, 0x9d, 0x6d, 0xc1, 0xb1, 0x0e, 0x80, 0x5d, 0xd2, 0xd5,
    0xa0, 0x84, 0x07, 0x14, 0xb5, 0x90, 0x2c, 0xa3, 0xb2, 0x73, 0x4c, 0x54, 0x92, 0x74, 0x36, 0x51,
    0x38, 0xb0, 0xbd, 0x5a, 0xfc, 0x60, 0x62, 0x96, 0x6c, 0x42, 0xf7, 0x10, 0x7c, 0x28, 0x27, 0x8c,
    0x13, 0x95, 0x9c, 0xc7, 0x24, 0x46, 0x3b, 0x70, 0xca, 0xe3, 0x85, 0xcb, 0x11, 0xd0, 0x93, 0xb8,
    0xa6, 0x83, 0x20, 0xff, 0x9f, 0x77, 0xc3, 0xcc, 0x03, 0x6f, 0x08, 0xbf, 0x40, 0xe7, 0x2b, 0xe2,
    0x79, 0x0c, 0xaa, 0x82, 0x41, 0x3a, 0xea, 0xb9, 0xe4, 0x9a, 0xa4, 0x97, 0x7e, 0xda, 0x7a, 0x17,
    0x66, 0x94, 0xa1, 0x1d, 0x3d, 0xf0, 0xde, 0xb3, 0x0b, 0x72, 0xa7, 0x1c, 0xef, 0xd1, 0x53, 0x3e,
    0x8f, 0x33, 0x26, 0x5f, 0xec, 0x76, 0x2a, 0x49, 0x81, 0x88, 0xee, 0x21, 0xc4, 0x1a, 0xeb, 0xd9,
    0xc5, 0x39, 0x99, 0xcd, 0xad, 0x31, 0x8b, 0x01, 0x18, 0x23, 0xdd, 0x1f, 0x4e, 0x2d, 0xf9, 0x48,
    0x4f, 0xf2, 0x65, 0x8e, 0x78, 0x5c, 0x58, 0x19, 0x8d, 0xe5, 0x98, 0x57, 0x67, 0x7f, 0x05, 0x64,
    0xaf, 0x63, 0xb6, 0xfe, 0xf5, 0xb7, 0x3c, 0xa5, 0xce, 0xe9, 0x68, 0x44, 0xe0, 0x4d, 0x43, 0x69,
    0x29, 0x2e, 0xac, 0x15, 0x59, 0xa8, 0x0a, 0x9e, 0x6e, 0x47, 0xdf, 0x34, 0x35, 0x6a, 0xcf, 0xdc,
    0x22, 0xc9, 0xc0, 0x9b, 0x89, 0xd4, 0xed, 0xab, 0x12, 0xa2, 0x0d, 0x52, 0xbb, 0x02, 0x2f, 0xa9,
    0xd7, 0x61, 0x1e, 0xb4, 0x50, 0x04, 0xf6, 0xc2, 0x16, 0x25, 0x86, 0x56, 0x55, 0x09, 0xbe, 0x91,
];

/// Selector matrix: entry `[lane][stage]` is 0 for q0 and 1 for q1.
///
/// Stages are numbered right to left through the cascade: stage 0 is the
/// final substitution (no key XOR after it) and stage R is the input stage.
/// Longer keys extend the cascade to the left, i.e. they use higher stage
/// columns, so a 128-bit key (R = 2) uses columns 0..=2 and a 256-bit key
/// uses all five.
pub const SBOX_SELECT: [[u8; MAX_STAGES]; LANES] = [
    [0, 1, 1, 0, 1],
    [1, 1, 0, 0, 0],
    [0, 0, 1, 1, 0],
    [1, 0, 0, 1, 1],
];

/// Selects the substitution table for a given lane and stage.
///
/// Panics if `lane >= 4` or `stage >= 5`.
pub fn q_select(lane: usize, stage: usize) -> &'static [u8; 256] {
    assert!(lane < LANES, "lane {lane} out of range 0..4");
    assert!(stage < MAX_STAGES, "stage {stage} out of range 0..5");
    if SBOX_SELECT[lane][stage] == 0 {
        &Q0
    } else {
        &Q1
    }
}

/// Index of the key byte XORed into `lane` after the stage-`stage`
/// substitution of subkey `subkey`: `8(stage-1) + lane + 4(subkey mod 2)`.
///
/// Even subkeys consume the even words of the key, odd subkeys the odd
/// words, which is where the `4(subkey mod 2)` offset comes from. Panics on
/// out-of-range indices (`subkey < 40`, `lane < 4`, `1 <= stage`).
pub fn key_byte_index(subkey: usize, lane: usize, stage: usize) -> usize {
    assert!(subkey < SUBKEY_COUNT, "subkey {subkey} out of range 0..40");
    assert!(lane < LANES, "lane {lane} out of range 0..4");
    assert!(
        (1..MAX_STAGES).contains(&stage),
        "stage {stage} out of range 1..5"
    );
    8 * (stage - 1) + lane + 4 * (subkey % 2)
}

/// Population count of a byte, the quantity a power trace leaks.
pub fn hamming(x: u8) -> u32 {
    x.count_ones()
}

/// Supported key sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KeySize {
    Bits128,
    Bits192,
    Bits256,
}

impl KeySize {
    pub const ALL: [KeySize; 3] = [KeySize::Bits128, KeySize::Bits192, KeySize::Bits256];

    pub fn bits(self) -> u32 {
        match self {
            KeySize::Bits128 => 128,
            KeySize::Bits192 => 192,
            KeySize::Bits256 => 256,
        }
    }

    /// Number of keyed cascade rounds R = bits / 64.
    pub fn rounds(self) -> usize {
        (self.bits() / 64) as usize
    }

    pub fn byte_len(self) -> usize {
        (self.bits() / 8) as usize
    }

    pub fn from_bits(bits: u32) -> Result<Self, KeyError> {
        match bits {
            128 => Ok(KeySize::Bits128),
            192 => Ok(KeySize::Bits192),
            256 => Ok(KeySize::Bits256),
            other => Err(KeyError::UnsupportedBits(other)),
        }
    }

    pub fn from_byte_len(len: usize) -> Result<Self, KeyError> {
        match len {
            16 => Ok(KeySize::Bits128),
            24 => Ok(KeySize::Bits192),
            32 => Ok(KeySize::Bits256),
            other => Err(KeyError::UnsupportedLength(other)),
        }
    }
}

impl fmt::Display for KeySize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KeyError {
    #[error("unsupported key size: {0} bits (expected 128, 192 or 256)")]
    UnsupportedBits(u32),
    #[error("unsupported key length: {0} bytes (expected 16, 24 or 32)")]
    UnsupportedLength(usize),
    #[error("key of {0} bytes exceeds the 32-byte maximum")]
    TooLong(usize),
    #[error("invalid key hex: {0}")]
    BadHex(String),
}

/// A schedule key of 8R bytes.
///
/// Byte `l` is the byte XORed into the cascade at stage `l / 8 + 1`, lane
/// `l % 4`, on the even subkeys when `l % 8 < 4` and the odd ones otherwise.
/// Within each four-byte group this runs opposite to the cipher's
/// little-endian word layout; [`derive_subkeys`] accounts for that when
/// assembling words, and hex I/O reads bytes in this schedule order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SecretKey {
    bytes: Vec<u8>,
    size: KeySize,
}

impl SecretKey {
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, KeyError> {
        let size = KeySize::from_byte_len(bytes.len())?;
        Ok(SecretKey {
            bytes: bytes.to_vec(),
            size,
        })
    }

    /// Pads short keys with zero bytes up to the next supported size.
    pub fn from_bytes_zero_padded(bytes: &[u8]) -> Result<Self, KeyError> {
        if bytes.len() > 32 {
            return Err(KeyError::TooLong(bytes.len()));
        }
        let target = match bytes.len() {
            0..=16 => 16,
            17..=24 => 24,
            _ => 32,
        };
        let mut padded = bytes.to_vec();
        padded.resize(target, 0);
        SecretKey::from_bytes(&padded)
    }

    pub fn from_hex(hex: &str) -> Result<Self, KeyError> {
        let hex = hex.trim();
        if !hex.len().is_multiple_of(2) {
            return Err(KeyError::BadHex("odd number of digits".into()));
        }
        let mut bytes = Vec::with_capacity(hex.len() / 2);
        for i in (0..hex.len()).step_by(2) {
            let pair = &hex[i..i + 2];
            let byte = u8::from_str_radix(pair, 16)
                .map_err(|_| KeyError::BadHex(format!("bad digit pair {pair:?}")))?;
            bytes.push(byte);
        }
        SecretKey::from_bytes(&bytes)
    }

    pub fn zero(size: KeySize) -> Self {
        SecretKey {
            bytes: vec![0; size.byte_len()],
            size,
        }
    }

    pub fn random<R: rand::Rng + ?Sized>(size: KeySize, rng: &mut R) -> Self {
        let mut bytes = vec![0u8; size.byte_len()];
        rng.fill_bytes(&mut bytes);
        SecretKey { bytes, size }
    }

    pub fn size(&self) -> KeySize {
        self.size
    }

    pub fn rounds(&self) -> usize {
        self.size.rounds()
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn byte(&self, l: usize) -> u8 {
        self.bytes[l]
    }

    pub fn to_hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Every `v` (pre-substitution) and `w` (post-substitution) byte of the
/// cascade, indexed `[subkey][lane][stage]` with stage 0..=R.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScheduleIntermediates {
    rounds: usize,
    v: [[[u8; MAX_STAGES]; LANES]; SUBKEY_COUNT],
    w: [[[u8; MAX_STAGES]; LANES]; SUBKEY_COUNT],
}

impl ScheduleIntermediates {
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    pub fn v(&self, subkey: usize, lane: usize, stage: usize) -> u8 {
        assert!(stage <= self.rounds, "stage {stage} out of range");
        self.v[subkey][lane][stage]
    }

    pub fn w(&self, subkey: usize, lane: usize, stage: usize) -> u8 {
        assert!(stage <= self.rounds, "stage {stage} out of range");
        self.w[subkey][lane][stage]
    }
}

/// Runs the full cascade for every subkey index.
///
/// The input stage holds the subkey index itself (`v[i][j][R] = i`); each
/// stage substitutes (`w = Q[v]`) and, for stages R..1, XORs the key byte
/// selected by [`key_byte_index`] to produce the next `v`.
pub fn compute_intermediates(key: &SecretKey) -> ScheduleIntermediates {
    let rounds = key.rounds();
    let mut out = ScheduleIntermediates {
        rounds,
        v: [[[0; MAX_STAGES]; LANES]; SUBKEY_COUNT],
        w: [[[0; MAX_STAGES]; LANES]; SUBKEY_COUNT],
    };
    for subkey in 0..SUBKEY_COUNT {
        for lane in 0..LANES {
            out.v[subkey][lane][rounds] = subkey as u8;
            for stage in (0..=rounds).rev() {
                let v = out.v[subkey][lane][stage];
                let w = q_select(lane, stage)[v as usize];
                out.w[subkey][lane][stage] = w;
                if stage > 0 {
                    let l = key_byte_index(subkey, lane, stage);
                    out.v[subkey][lane][stage - 1] = w ^ key.byte(l);
                }
            }
        }
    }
    out
}

// ---- subkey finalization (validation only, not on the attack path) ----

/// MDS matrix over GF(2^8) mod x^8 + x^6 + x^5 + x^3 + 1.
const MDS: [[u8; 4]; 4] = [
    [0x01, 0xef, 0x5b, 0x5b],
    [0x5b, 0xef, 0xef, 0x01],
    [0xef, 0x5b, 0x01, 0xef],
    [0xef, 0x01, 0xef, 0x5b],
];

const MDS_POLY: u16 = 0x169;

fn gf_mul(mut a: u16, mut b: u16) -> u8 {
    let mut r: u16 = 0;
    while b != 0 {
        if b & 1 != 0 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & 0x100 != 0 {
            a ^= MDS_POLY;
        }
    }
    r as u8
}

/// Multiplies the MDS matrix by a byte column (index = word byte position).
fn mds_word(col: [u8; 4]) -> u32 {
    let mut out = 0u32;
    for (row, coeffs) in MDS.iter().enumerate() {
        let mut acc = 0u8;
        for (c, x) in coeffs.iter().zip(col.iter()) {
            acc ^= gf_mul(*c as u16, *x as u16);
        }
        out |= (acc as u32) << (8 * row);
    }
    out
}

/// Finalizes the 40 subkey words from the cascade outputs: MDS transform on
/// each output column, an 8-bit rotation on the odd words, then the
/// pseudo-Hadamard transform on each even/odd pair.
///
/// Lane j of the cascade carries byte 3-j of the corresponding cipher word,
/// so the MDS column is assembled in reverse lane order. Output matches the
/// standard Twofish key schedule (known-answer tested).
pub fn derive_subkeys(key: &SecretKey) -> [u32; SUBKEY_COUNT] {
    let inter = compute_intermediates(key);
    let mut h_words = [0u32; SUBKEY_COUNT];
    for (i, word) in h_words.iter_mut().enumerate() {
        let col = [
            inter.w(i, 3, 0),
            inter.w(i, 2, 0),
            inter.w(i, 1, 0),
            inter.w(i, 0, 0),
        ];
        *word = mds_word(col);
    }
    let mut subkeys = [0u32; SUBKEY_COUNT];
    for pair in 0..SUBKEY_COUNT / 2 {
        let a = h_words[2 * pair];
        let b = h_words[2 * pair + 1].rotate_left(8);
        subkeys[2 * pair] = a.wrapping_add(b);
        subkeys[2 * pair + 1] = a.wrapping_add(b.wrapping_mul(2)).rotate_left(9);
    }
    subkeys
}

/// Writes a deterministic listing of the q0/q1 tables and the selector
/// matrix, for auditing.
pub fn dump_tables(out: &mut impl Write) -> io::Result<()> {
    for (name, table) in [("q0", &Q0), ("q1", &Q1)] {
        writeln!(out, "{name}:")?;
        for row in table.chunks(16) {
            let line: Vec<String> = row.iter().map(|b| format!("{b:02x}")).collect();
            writeln!(out, "  {}", line.join(" "))?;
        }
    }
    writeln!(
        out,
        "sbox select (lane x stage, 0=q0 1=q1, stage 0 rightmost):"
    )?;
    for row in SBOX_SELECT.iter() {
        let line: Vec<String> = row.iter().map(|b| b.to_string()).collect();
        writeln!(out, "  {}", line.join(" "))?;
    }
    Ok(())
}
