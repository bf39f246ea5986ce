//! Identifiability: is the map `key -> first n ciphertext bytes` injective
//! over a key domain?

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use super::domain::KeyDomain;
use crate::error::{Error, Result};
use crate::scheme::{SchemeKey, StreamCipher};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Identifiable,
    NonIdentifiable,
}

impl Verdict {
    pub fn is_identifiable(self) -> bool {
        self == Verdict::Identifiable
    }

    pub fn code(self) -> &'static str {
        match self {
            Verdict::Identifiable => "I",
            Verdict::NonIdentifiable => "NI",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentifiabilityReport {
    pub verdict: Verdict,
    /// Number of leading ciphertext bytes compared.
    pub n_out: usize,
    pub keys_tested: usize,
    /// Pairs `(a, b)` with `a < b` producing identical output, sorted.
    pub collisions: Vec<(SchemeKey, SchemeKey)>,
}

/// Encrypts `plaintext` under every key of `domain` and checks that no two
/// keys agree on the first `n_out` ciphertext bytes (`n_out` is 1 or 2).
/// Comparison is byte-exact.
pub fn identifiability<C: StreamCipher + ?Sized>(
    cipher: &C,
    plaintext: &[u8],
    domain: &KeyDomain,
    n_out: usize,
) -> Result<IdentifiabilityReport> {
    if !(1..=2).contains(&n_out) {
        return Err(Error::arg(format!("n_out must be 1 or 2, got {n_out}")));
    }
    if plaintext.len() < n_out {
        return Err(Error::arg(format!(
            "plaintext has {} bytes, fewer than n_out = {n_out}",
            plaintext.len()
        )));
    }
    let head = &plaintext[..n_out];
    let keys: Vec<SchemeKey> = domain.keys().collect();
    let outputs: Vec<Vec<u8>> = keys.par_iter().map(|&k| cipher.encrypt(k, head)).collect();

    // keys are visited in increasing order, so each bucket is sorted
    let mut buckets: HashMap<&[u8], Vec<SchemeKey>> = HashMap::new();
    for (k, out) in keys.iter().zip(&outputs) {
        buckets.entry(out.as_slice()).or_default().push(*k);
    }
    let mut collisions = Vec::new();
    for group in buckets.values().filter(|g| g.len() > 1) {
        for (i, &a) in group.iter().enumerate() {
            collisions.extend(group[i + 1..].iter().map(|&b| (a, b)));
        }
    }
    collisions.sort_unstable();

    Ok(IdentifiabilityReport {
        verdict: if collisions.is_empty() {
            Verdict::Identifiable
        } else {
            Verdict::NonIdentifiable
        },
        n_out,
        keys_tested: keys.len(),
        collisions,
    })
}
