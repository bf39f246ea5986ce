//! Auxiliary nonlinear functions: a sinusoid and an 8-bit NLFSR.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `y(t) = A sin(omega t + phi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SineParams {
    amplitude: f64,
    omega: f64,
    phi: f64,
}

impl SineParams {
    pub fn new(amplitude: f64, omega: f64, phi: f64) -> Result<Self> {
        if !(amplitude > 0.0 && amplitude.is_finite()) {
            return Err(Error::domain(format!(
                "amplitude {amplitude} must be positive"
            )));
        }
        if !omega.is_finite() || !phi.is_finite() {
            return Err(Error::domain("omega and phi must be finite"));
        }
        Ok(Self {
            amplitude,
            omega,
            phi,
        })
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

impl Default for SineParams {
    /// `A = 1`, `omega = 2 pi`, `phi = 0`: one full period over `[0, 1]`.
    fn default() -> Self {
        Self {
            amplitude: 1.0,
            omega: TAU,
            phi: 0.0,
        }
    }
}

// `libm` rather than the platform sine keeps keystreams identical across
// targets whose system libm differ in the last ulp.
pub fn sine_transform(t: f64, params: &SineParams) -> f64 {
    params.amplitude * libm::sin(params.omega * t + params.phi)
}

/// The sinusoid rescaled to the unit interval, `(y / A + 1) / 2`.
pub fn sine_unit(x: f64, params: &SineParams) -> f64 {
    let s = libm::sin(params.omega * x + params.phi);
    ((s + 1.0) / 2.0).clamp(0.0, 1.0)
}

/// Feedback functions selectable for the shift register.
///
/// Both contain exactly one AND term, so neither is an LFSR.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NlfsrFeedback {
    /// `b0 ^ b2 ^ b3 ^ (b1 & b7)`; the cycle through `0x01` has length 188.
    #[default]
    Standard,
    /// `b0 ^ b4 ^ b5 ^ (b1 & b6)`; cycles through all 255 nonzero states.
    Alternate,
}

impl NlfsrFeedback {
    #[inline]
    pub fn feedback(self, bits: u8) -> u8 {
        let b = |i: u8| (bits >> i) & 1;
        match self {
            NlfsrFeedback::Standard => b(0) ^ b(2) ^ b(3) ^ (b(1) & b(7)),
            NlfsrFeedback::Alternate => b(0) ^ b(4) ^ b(5) ^ (b(1) & b(6)),
        }
    }
}

impl fmt::Display for NlfsrFeedback {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NlfsrFeedback::Standard => "standard",
            NlfsrFeedback::Alternate => "alternate",
        })
    }
}

impl FromStr for NlfsrFeedback {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(NlfsrFeedback::Standard),
            "alternate" => Ok(NlfsrFeedback::Alternate),
            other => Err(Error::arg(format!("unknown NLFSR feedback `{other}`"))),
        }
    }
}

/// An 8-bit shift register; bit 0 is the output end.
///
/// Zero is a fixed point of both feedback functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct NlfsrState(pub u8);

impl NlfsrState {
    /// Emits `b0`, shifts right and inserts the feedback bit as the new `b7`.
    #[inline]
    pub fn step(self, fb: NlfsrFeedback) -> (NlfsrState, u8) {
        let out = self.0 & 1;
        let f = fb.feedback(self.0);
        (NlfsrState((self.0 >> 1) | (f << 7)), out)
    }

    /// Eight steps; the first output bit becomes the least significant bit.
    #[inline]
    pub fn next_byte(self, fb: NlfsrFeedback) -> (NlfsrState, u8) {
        let mut s = self;
        let mut byte = 0u8;
        for i in 0..8 {
            let (next, bit) = s.step(fb);
            byte |= bit << i;
            s = next;
        }
        (s, byte)
    }
}

/// [`NlfsrState::step`] with the standard feedback.
pub fn nlfsr_step(state: NlfsrState) -> (NlfsrState, u8) {
    state.step(NlfsrFeedback::Standard)
}

/// [`NlfsrState::next_byte`] with the standard feedback.
pub fn nlfsr_byte(state: NlfsrState) -> (NlfsrState, u8) {
    state.next_byte(NlfsrFeedback::Standard)
}

/// Length of the cycle through `seed`.
pub fn cycle_length(seed: NlfsrState, fb: NlfsrFeedback) -> usize {
    let mut s = seed.step(fb).0;
    let mut n = 1;
    while s != seed {
        s = s.step(fb).0;
        n += 1;
    }
    n
}
