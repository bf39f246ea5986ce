use super::attack::{kpa_candidate_counts, minimal_singleton_prefix};
use super::domain::{key_domain, KeyDomain};
use super::identify::{identifiability, Verdict};
use super::metrics::{
    key_sensitivity, mean_plaintext_sensitivity, plaintext_sensitivity, FlipSpec,
};
use crate::error::Result;
use crate::scheme::{SchemeKey, StreamCipher};

/// How plaintext sensitivity is measured for a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Perturbation {
    Bit(FlipSpec),
    /// Mean over every single-bit flip of the text.
    AllBits,
}

impl From<FlipSpec> for Perturbation {
    fn from(f: FlipSpec) -> Self {
        Perturbation::Bit(f)
    }
}

/// Knobs for [`analyze_row_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowOptions {
    /// Width of the key domain centred on the key.
    pub domain_width: f64,
    /// Sweep increment inside that domain.
    pub domain_step: f64,
    /// Key shift used for key sensitivity.
    pub key_delta: f64,
    /// Leading ciphertext bytes compared by the identifiability test.
    pub n_out: usize,
}

impl Default for RowOptions {
    fn default() -> Self {
        Self {
            domain_width: 0.20,
            domain_step: 1e-4,
            key_delta: 1e-4,
            n_out: 2,
        }
    }
}

/// One line of an analysis table.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisRow {
    pub plaintext: Vec<u8>,
    pub key: SchemeKey,
    pub ciphertext_hex: String,
    pub pt_sensitivity_pct: f64,
    pub key_sensitivity_pct: f64,
    pub domain: KeyDomain,
    pub identifiable: Verdict,
    /// Longest known-plaintext prefix for which brute force over `domain`
    /// still leaves more than one candidate. Equal to the text length when
    /// no prefix (from two bytes up) pins the key.
    pub kpa_robust_prefix_len: usize,
    /// Whether the key can serve as a secret key: true exactly when it is
    /// identifiable.
    pub secret_key_ok: bool,
}

impl AnalysisRow {
    /// Shortest known prefix that pins the key, if any.
    pub fn kpa_breaking_prefix(&self) -> Option<usize> {
        (self.kpa_robust_prefix_len < self.plaintext.len())
            .then_some(self.kpa_robust_prefix_len + 1)
    }
}

/// A row with the default options (width 0.20, step and delta 1e-4, two
/// output bytes).
pub fn analyze_row<C: StreamCipher + ?Sized>(
    cipher: &C,
    key: SchemeKey,
    plaintext: &[u8],
    flip: FlipSpec,
) -> Result<AnalysisRow> {
    analyze_row_with(cipher, key, plaintext, flip.into(), &RowOptions::default())
}

pub fn analyze_row_with<C: StreamCipher + ?Sized>(
    cipher: &C,
    key: SchemeKey,
    plaintext: &[u8],
    perturbation: Perturbation,
    opts: &RowOptions,
) -> Result<AnalysisRow> {
    let ciphertext = cipher.encrypt(key, plaintext);
    let pt_sensitivity_pct = match perturbation {
        Perturbation::Bit(flip) => plaintext_sensitivity(cipher, key, plaintext, flip)?,
        Perturbation::AllBits => mean_plaintext_sensitivity(cipher, key, plaintext)?,
    };
    let key_sensitivity_pct = key_sensitivity(cipher, key, plaintext, opts.key_delta)?;
    let domain = key_domain(key, opts.domain_width)?.with_step(opts.domain_step)?;
    let identifiable = identifiability(cipher, plaintext, &domain, opts.n_out)?.verdict;

    let counts = kpa_candidate_counts(cipher, &ciphertext, plaintext, &domain)?;
    let kpa_robust_prefix_len = match minimal_singleton_prefix(&counts, 2) {
        Some(n) => n - 1,
        None => plaintext.len(),
    };

    Ok(AnalysisRow {
        plaintext: plaintext.to_vec(),
        key,
        ciphertext_hex: hex::encode(&ciphertext),
        pt_sensitivity_pct,
        key_sensitivity_pct,
        domain,
        identifiable,
        kpa_robust_prefix_len,
        secret_key_ok: identifiable.is_identifiable(),
    })
}
