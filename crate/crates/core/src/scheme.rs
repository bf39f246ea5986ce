//! The three logistic-map stream ciphers behind one encrypt/decrypt interface.
//!
//! Every scheme runs the same transmitter/receiver loop. For each byte the
//! chaotic state is advanced, a keystream byte is derived from it, the byte is
//! masked, and (for the feedback schemes) the ciphertext byte is folded back
//! into the chaotic state. The receiver folds in the *received* ciphertext,
//! so both ends evolve identically.

use std::fmt;
use std::str::FromStr;

use crate::chaos::{frac, guard, quantize_unchecked, step_unchecked};
use crate::error::{Error, Result};
use crate::primitives::{sine_unit, NlfsrFeedback, NlfsrState, SineParams};

/// Grid index of 3.57 in units of `1e-4`.
const GRID_ORIGIN: u32 = 35_700;
/// Number of grid steps between 3.57 and 4.0.
const GRID_SPAN: u32 = 4_300;
const GRID_SCALE: f64 = 10_000.0;

/// A secret key: the map parameter `r` on the grid `3.57 + k * 1e-4`,
/// `0 <= k <= 4300`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchemeKey {
    index: u16,
}

impl SchemeKey {
    pub const GRID_STEP: f64 = 1e-4;
    pub const MIN: SchemeKey = SchemeKey { index: 0 };
    pub const MAX: SchemeKey = SchemeKey {
        index: GRID_SPAN as u16,
    };
    /// Number of keys in the full key space.
    pub const COUNT: usize = GRID_SPAN as usize + 1;

    /// Rounds `r` to the nearest grid point and accepts it if it lies in
    /// `[3.57, 4.0]`.
    pub fn new(r: f64) -> Result<Self> {
        let ticks = (r * GRID_SCALE).round();
        if !ticks.is_finite()
            || ticks < GRID_ORIGIN as f64
            || ticks > (GRID_ORIGIN + GRID_SPAN) as f64
        {
            return Err(Error::KeyOutOfRange(r));
        }
        Ok(Self {
            index: (ticks as u32 - GRID_ORIGIN) as u16,
        })
    }

    /// The key `index` grid steps above 3.57.
    pub fn from_index(index: u32) -> Result<Self> {
        if index > GRID_SPAN {
            return Err(Error::KeyOutOfRange(
                (GRID_ORIGIN + index) as f64 / GRID_SCALE,
            ));
        }
        Ok(Self {
            index: index as u16,
        })
    }

    /// Grid position relative to 3.57.
    pub fn index(&self) -> u32 {
        self.index as u32
    }

    /// The key as a real. Computed as an integer over `10^4`, so it is the
    /// double nearest to the decimal grid value.
    pub fn r(&self) -> f64 {
        (GRID_ORIGIN + self.index as u32) as f64 / GRID_SCALE
    }

    /// The key `ticks` grid steps away, if that is still in the key space.
    pub fn offset(&self, ticks: i64) -> Option<SchemeKey> {
        let i = self.index as i64 + ticks;
        (0..=GRID_SPAN as i64)
            .contains(&i)
            .then_some(SchemeKey { index: i as u16 })
    }
}

impl fmt::Display for SchemeKey {
    /// Four decimals with trailing zeros trimmed down to two: `3.65`, `3.7328`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_grid(self.r()))
    }
}

pub(crate) fn format_grid(v: f64) -> String {
    let mut s = format!("{v:.4}");
    while s.ends_with('0') && s.len() - s.find('.').unwrap_or(0) > 3 {
        s.pop();
    }
    s
}

/// Rounds `r` onto the key grid; see [`SchemeKey::new`].
pub fn make_key(r: f64) -> Result<SchemeKey> {
    SchemeKey::new(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeId {
    Logistic,
    Nlfsr,
    ModifiedNlfsr,
}

impl SchemeId {
    pub const ALL: [SchemeId; 3] = [SchemeId::Logistic, SchemeId::Nlfsr, SchemeId::ModifiedNlfsr];

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            SchemeId::Logistic => "logistic",
            SchemeId::Nlfsr => "nlfsr",
            SchemeId::ModifiedNlfsr => "mnlfsr",
        }
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SchemeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "logistic" => Ok(SchemeId::Logistic),
            "nlfsr" => Ok(SchemeId::Nlfsr),
            "mnlfsr" | "modified-nlfsr" => Ok(SchemeId::ModifiedNlfsr),
            other => Err(Error::arg(format!(
                "unknown scheme `{other}` (expected logistic, nlfsr or mnlfsr)"
            ))),
        }
    }
}

/// Public tuning shared by all schemes. Only the key is secret.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeParams {
    /// Public initial condition of the map.
    pub x0: f64,
    /// Map iterations discarded before the first keystream byte.
    pub burn_in: usize,
    pub sine: SineParams,
    pub feedback: NlfsrFeedback,
}

impl Default for SchemeParams {
    fn default() -> Self {
        Self {
            x0: 0.99,
            burn_in: 64,
            sine: SineParams::default(),
            feedback: NlfsrFeedback::Standard,
        }
    }
}

impl SchemeParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.x0 > 0.0 && self.x0 < 1.0) {
            return Err(Error::domain(format!("x0 = {} is not in (0, 1)", self.x0)));
        }
        Ok(())
    }
}

/// Per-message state, identical at transmitter and receiver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CipherState {
    /// Chaotic state, kept in `[1e-12, 1 - 1e-12]`.
    pub x: f64,
    pub nlfsr: NlfsrState,
    /// Previous ciphertext byte; before the first byte this is the IV.
    pub prev_c: u8,
    /// Most recent intermediate value (masked plaintext before keystream).
    pub y: u8,
}

impl CipherState {
    fn new(key: SchemeKey, params: &SchemeParams) -> Self {
        let r = key.r();
        let mut x = params.x0;
        for _ in 0..params.burn_in {
            x = guard(step_unchecked(x, r));
        }
        let seed = quantize_unchecked(x);
        CipherState {
            x,
            nlfsr: NlfsrState(if seed == 0 { 0x01 } else { seed }),
            prev_c: seed,
            y: 0,
        }
    }

    #[inline]
    fn keystream(&mut self, id: SchemeId, r: f64, params: &SchemeParams) -> u8 {
        self.x = guard(step_unchecked(self.x, r));
        match id {
            SchemeId::Logistic => quantize_unchecked(sine_unit(self.x, &params.sine)),
            SchemeId::Nlfsr | SchemeId::ModifiedNlfsr => {
                let (next, n) = self.nlfsr.next_byte(params.feedback);
                self.nlfsr = next;
                n ^ quantize_unchecked(self.x)
            }
        }
    }

    #[inline]
    fn absorb(&mut self, id: SchemeId, c: u8) {
        match id {
            SchemeId::Logistic => self.x = guard(frac(self.x + c as f64 / 65536.0)),
            SchemeId::Nlfsr => {}
            SchemeId::ModifiedNlfsr => {
                self.x = guard(frac(self.x + c as f64 / 256.0));
                self.prev_c = c;
            }
        }
    }
}

/// Anything that encrypts under a [`SchemeKey`]. The analysis routines are
/// generic over this so they can be exercised against test fixtures.
pub trait StreamCipher: Sync {
    fn encrypt(&self, key: SchemeKey, plaintext: &[u8]) -> Vec<u8>;
    fn decrypt(&self, key: SchemeKey, ciphertext: &[u8]) -> Vec<u8>;
}

/// A scheme together with its public parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scheme {
    id: SchemeId,
    params: SchemeParams,
}

impl Scheme {
    pub fn new(id: SchemeId) -> Self {
        Self {
            id,
            params: SchemeParams::default(),
        }
    }

    pub fn with_params(id: SchemeId, params: SchemeParams) -> Result<Self> {
        params.validate()?;
        Ok(Self { id, params })
    }

    pub fn id(&self) -> SchemeId {
        self.id
    }

    pub fn params(&self) -> &SchemeParams {
        &self.params
    }

    /// State after burn-in: the map has been iterated `burn_in` times from
    /// `x0`, and both the NLFSR seed and the IV are the quantized state (the
    /// seed is forced to `0x01` if that quantizes to zero).
    pub fn init_state(&self, key: SchemeKey) -> CipherState {
        CipherState::new(key, &self.params)
    }

    pub fn encrypt_with(
        &self,
        state: &mut CipherState,
        key: SchemeKey,
        plaintext: &[u8],
    ) -> Vec<u8> {
        let r = key.r();
        plaintext
            .iter()
            .map(|&p| {
                let k = state.keystream(self.id, r, &self.params);
                let y = match self.id {
                    SchemeId::ModifiedNlfsr => p ^ state.prev_c,
                    _ => p,
                };
                let c = y ^ k;
                state.y = y;
                state.absorb(self.id, c);
                c
            })
            .collect()
    }

    pub fn decrypt_with(
        &self,
        state: &mut CipherState,
        key: SchemeKey,
        ciphertext: &[u8],
    ) -> Vec<u8> {
        let r = key.r();
        ciphertext
            .iter()
            .map(|&c| {
                let k = state.keystream(self.id, r, &self.params);
                let y = c ^ k;
                let p = match self.id {
                    SchemeId::ModifiedNlfsr => y ^ state.prev_c,
                    _ => y,
                };
                state.y = y;
                state.absorb(self.id, c);
                p
            })
            .collect()
    }
}

impl StreamCipher for Scheme {
    fn encrypt(&self, key: SchemeKey, plaintext: &[u8]) -> Vec<u8> {
        let mut state = self.init_state(key);
        self.encrypt_with(&mut state, key, plaintext)
    }

    fn decrypt(&self, key: SchemeKey, ciphertext: &[u8]) -> Vec<u8> {
        let mut state = self.init_state(key);
        self.decrypt_with(&mut state, key, ciphertext)
    }
}

/// [`Scheme::init_state`] with default parameters.
pub fn init_state(scheme: SchemeId, key: SchemeKey) -> CipherState {
    Scheme::new(scheme).init_state(key)
}

/// Encrypts with default parameters.
pub fn encrypt(scheme: SchemeId, key: SchemeKey, plaintext: &[u8]) -> Vec<u8> {
    Scheme::new(scheme).encrypt(key, plaintext)
}

/// Decrypts with default parameters.
pub fn decrypt(scheme: SchemeId, key: SchemeKey, ciphertext: &[u8]) -> Vec<u8> {
    Scheme::new(scheme).decrypt(key, ciphertext)
}
