//! Known-plaintext brute force over a key domain.

use rayon::prelude::*;

use super::domain::KeyDomain;
use crate::error::{Error, Result};
use crate::scheme::{SchemeKey, StreamCipher};

/// Keys that survive a known-plaintext filter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KpaOutcome {
    /// Surviving keys in increasing order.
    pub candidates: Vec<SchemeKey>,
}

impl KpaOutcome {
    /// The attack fails to single out a key unless exactly one survives.
    pub fn robust(&self) -> bool {
        self.candidates.len() != 1
    }
}

/// Every key in `domain` whose decryption of `ciphertext` starts with
/// `known_prefix`.
///
/// Decryption is causal, so only the first `known_prefix.len()` ciphertext
/// bytes are decrypted per key. Keys are tried in parallel; the result is
/// in key order regardless.
pub fn kpa_bruteforce<C: StreamCipher + ?Sized>(
    cipher: &C,
    ciphertext: &[u8],
    known_prefix: &[u8],
    domain: &KeyDomain,
) -> Result<KpaOutcome> {
    if known_prefix.len() > ciphertext.len() {
        return Err(Error::arg(format!(
            "known prefix ({} bytes) is longer than the ciphertext ({} bytes)",
            known_prefix.len(),
            ciphertext.len()
        )));
    }
    let head = &ciphertext[..known_prefix.len()];
    let keys: Vec<SchemeKey> = domain.keys().collect();
    let candidates = keys
        .into_par_iter()
        .filter(|&k| cipher.decrypt(k, head) == known_prefix)
        .collect();
    Ok(KpaOutcome { candidates })
}

/// Candidate-set size for every known-prefix length `0..=plaintext.len()`.
///
/// Each key is decrypted once; a key survives prefix length `n` iff its
/// decryption agrees with the plaintext on the first `n` bytes.
pub fn kpa_candidate_counts<C: StreamCipher + ?Sized>(
    cipher: &C,
    ciphertext: &[u8],
    plaintext: &[u8],
    domain: &KeyDomain,
) -> Result<Vec<usize>> {
    if plaintext.len() > ciphertext.len() {
        return Err(Error::arg("plaintext is longer than the ciphertext"));
    }
    let head = &ciphertext[..plaintext.len()];
    let keys: Vec<SchemeKey> = domain.keys().collect();
    let agreement: Vec<usize> = keys
        .into_par_iter()
        .map(|k| {
            let p = cipher.decrypt(k, head);
            p.iter().zip(plaintext).take_while(|(a, b)| a == b).count()
        })
        .collect();
    // a key agreeing on `a` leading bytes survives every prefix length <= a
    let mut counts = vec![0usize; plaintext.len() + 1];
    for a in agreement {
        counts[a] += 1;
    }
    for n in (0..plaintext.len()).rev() {
        counts[n] += counts[n + 1];
    }
    Ok(counts)
}

/// Smallest known-prefix length `>= min_len` that leaves exactly one
/// candidate, or `None` if the attack stays robust for the whole text.
pub fn minimal_singleton_prefix(counts: &[usize], min_len: usize) -> Option<usize> {
    counts
        .iter()
        .enumerate()
        .skip(min_len)
        .find(|(_, &c)| c == 1)
        .map(|(n, _)| n)
}
