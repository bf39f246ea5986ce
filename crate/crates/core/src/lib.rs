//! Chaotic stream ciphers built on the logistic map, and the tooling used to
//! analyse them.
//!
//! Three schemes share one encrypt/decrypt interface ([`Scheme`]):
//!
//! * **Logistic**: keystream from a sinusoid of the chaotic state, with weak
//!   ciphertext feedback into the map.
//! * **NLFSR**: keystream mixes an 8-bit nonlinear feedback shift register
//!   with the quantized chaotic state; synchronous.
//! * **Modified NLFSR**: the NLFSR keystream plus ciphertext chaining and
//!   strong ciphertext feedback into the map.
//!
//! The secret key is the map parameter `r`, restricted to the chaotic band
//! `[3.57, 4.0]` on a `1e-4` grid ([`SchemeKey`]). The [`analysis`] module
//! measures plaintext/key sensitivity, enumerates key domains, runs
//! known-plaintext brute force and tests key identifiability.

pub mod analysis;
pub mod chaos;
mod error;
pub mod primitives;
pub mod scheme;

pub use analysis::{AnalysisRow, FlipSpec, IdentifiabilityReport, KeyDomain, KpaOutcome, Verdict};
pub use chaos::LogisticParams;
pub use error::{Error, Result};
pub use primitives::{NlfsrFeedback, NlfsrState, SineParams};
pub use scheme::{CipherState, Scheme, SchemeId, SchemeKey, SchemeParams, StreamCipher};
