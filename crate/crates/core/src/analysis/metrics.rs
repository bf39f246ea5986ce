//! Bit-level difference metrics: avalanche (plaintext) and key sensitivity.

use crate::error::{Error, Result};
use crate::scheme::{SchemeKey, StreamCipher};

/// Which plaintext bit to invert when measuring plaintext sensitivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FlipSpec {
    pub byte_index: usize,
    /// 0 is the least significant bit.
    pub bit_index: u8,
}

impl FlipSpec {
    pub fn new(byte_index: usize, bit_index: u8) -> Result<Self> {
        if bit_index > 7 {
            return Err(Error::arg(format!("bit index {bit_index} is not in 0..=7")));
        }
        Ok(Self {
            byte_index,
            bit_index,
        })
    }

    pub fn apply(&self, plaintext: &[u8]) -> Result<Vec<u8>> {
        if self.byte_index >= plaintext.len() {
            return Err(Error::arg(format!(
                "flip at byte {} is outside a {}-byte plaintext",
                self.byte_index,
                plaintext.len()
            )));
        }
        let mut out = plaintext.to_vec();
        out[self.byte_index] ^= 1 << self.bit_index;
        Ok(out)
    }
}

/// Number of differing bits between two equal-length byte strings.
pub fn hamming_bits(a: &[u8], b: &[u8]) -> u64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x ^ y).count_ones() as u64)
        .sum()
}

/// `100 * hamming(a, b) / (8 * len)`.
pub fn bit_difference_percent(a: &[u8], b: &[u8]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::arg(format!(
            "length mismatch: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    if a.is_empty() {
        return Err(Error::arg("cannot compare empty byte strings"));
    }
    Ok(100.0 * hamming_bits(a, b) as f64 / (8 * a.len()) as f64)
}

/// Percentage of ciphertext bits that change when the single plaintext bit
/// named by `flip` is inverted.
pub fn plaintext_sensitivity<C: StreamCipher + ?Sized>(
    cipher: &C,
    key: SchemeKey,
    plaintext: &[u8],
    flip: FlipSpec,
) -> Result<f64> {
    let flipped = flip.apply(plaintext)?;
    bit_difference_percent(
        &cipher.encrypt(key, plaintext),
        &cipher.encrypt(key, &flipped),
    )
}

/// Plaintext sensitivity averaged over every one of the `8 * len` single-bit
/// flips.
pub fn mean_plaintext_sensitivity<C: StreamCipher + ?Sized>(
    cipher: &C,
    key: SchemeKey,
    plaintext: &[u8],
) -> Result<f64> {
    use rayon::prelude::*;

    if plaintext.is_empty() {
        return Err(Error::arg(
            "cannot measure sensitivity of an empty plaintext",
        ));
    }
    let base = cipher.encrypt(key, plaintext);
    let total: u64 = (0..plaintext.len() * 8)
        .into_par_iter()
        .map(|i| {
            let mut p = plaintext.to_vec();
            p[i / 8] ^= 1 << (i % 8);
            hamming_bits(&base, &cipher.encrypt(key, &p))
        })
        .sum();
    let flips = (plaintext.len() * 8) as f64;
    Ok(100.0 * total as f64 / (flips * flips))
}

/// Percentage of ciphertext bits that change when the key moves by `delta`.
///
/// The neighbour is `key + delta`, or `key - delta` when that would leave the
/// key space. `delta` is rounded to whole grid steps.
pub fn key_sensitivity<C: StreamCipher + ?Sized>(
    cipher: &C,
    key: SchemeKey,
    plaintext: &[u8],
    delta: f64,
) -> Result<f64> {
    let neighbour = key_neighbour(key, delta)?;
    bit_difference_percent(
        &cipher.encrypt(key, plaintext),
        &cipher.encrypt(neighbour, plaintext),
    )
}

fn key_neighbour(key: SchemeKey, delta: f64) -> Result<SchemeKey> {
    let ticks = (delta / SchemeKey::GRID_STEP).round();
    if !ticks.is_finite() || ticks < 0.0 {
        return Err(Error::arg(format!(
            "key delta {delta} must be a non-negative real"
        )));
    }
    let ticks = ticks as i64;
    key.offset(ticks)
        .or_else(|| key.offset(-ticks))
        .ok_or_else(|| {
            Error::arg(format!(
                "no key at distance {delta} from {key} inside the key space"
            ))
        })
}
