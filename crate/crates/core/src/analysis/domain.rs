//! Closed key intervals swept by the brute-force style analyses.

use std::fmt;

use crate::error::{Error, Result};
use crate::scheme::{format_grid, SchemeKey};

/// Width of the whole key space, `4.0 - 3.57`.
pub const KEY_SPACE_WIDTH: f64 = 0.43;

/// `[lo, hi]` swept in increments of `step`.
///
/// All three live on the `1e-4` key grid, so enumeration is exact integer
/// arithmetic and every member is a valid [`SchemeKey`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KeyDomain {
    lo: SchemeKey,
    hi: SchemeKey,
    step_ticks: u32,
}

fn ticks_of(v: f64, what: &str) -> Result<u32> {
    let t = v / SchemeKey::GRID_STEP;
    let rounded = t.round();
    if rounded.is_nan() || rounded < 1.0 || (t - rounded).abs() > 1e-6 {
        return Err(Error::arg(format!(
            "{what} {v} is not a positive multiple of the 1e-4 key grid"
        )));
    }
    Ok(rounded as u32)
}

impl KeyDomain {
    pub fn new(lo: f64, hi: f64, step: f64) -> Result<Self> {
        let lo_key = SchemeKey::new(lo)?;
        let hi_key = SchemeKey::new(hi)?;
        if lo_key >= hi_key {
            return Err(Error::arg(format!("empty key domain ({lo}, {hi})")));
        }
        let step_ticks = ticks_of(step, "step")?;
        Self::from_keys(lo_key, hi_key, step_ticks)
    }

    fn from_keys(lo: SchemeKey, hi: SchemeKey, step_ticks: u32) -> Result<Self> {
        if !(hi.index() - lo.index()).is_multiple_of(step_ticks) {
            return Err(Error::arg(format!(
                "domain ({lo}, {hi}) is not a whole number of {} steps",
                format_grid(step_ticks as f64 * SchemeKey::GRID_STEP)
            )));
        }
        Ok(Self { lo, hi, step_ticks })
    }

    /// The whole key space `[3.57, 4.0]` at the finest increment.
    pub fn full() -> Self {
        Self {
            lo: SchemeKey::MIN,
            hi: SchemeKey::MAX,
            step_ticks: 1,
        }
    }

    /// Same interval, different increment.
    pub fn with_step(self, step: f64) -> Result<Self> {
        Self::from_keys(self.lo, self.hi, ticks_of(step, "step")?)
    }

    pub fn lo(&self) -> SchemeKey {
        self.lo
    }

    pub fn hi(&self) -> SchemeKey {
        self.hi
    }

    pub fn step(&self) -> f64 {
        self.step_ticks as f64 * SchemeKey::GRID_STEP
    }

    pub fn len(&self) -> usize {
        ((self.hi.index() - self.lo.index()) / self.step_ticks) as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, key: SchemeKey) -> bool {
        key >= self.lo
            && key <= self.hi
            && (key.index() - self.lo.index()).is_multiple_of(self.step_ticks)
    }

    /// `lo, lo + step, ..., hi`, strictly increasing.
    pub fn keys(&self) -> impl ExactSizeIterator<Item = SchemeKey> + Clone {
        let (lo, step) = (self.lo.index(), self.step_ticks);
        (0..self.len() as u32).map(move |i| {
            SchemeKey::from_index(lo + i * step).expect("domain lies inside the key space")
        })
    }
}

impl fmt::Display for KeyDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

pub fn enumerate_keys(domain: &KeyDomain) -> Vec<SchemeKey> {
    domain.keys().collect()
}

/// A `width`-wide window centred on `key`, slid (never shrunk) until it fits
/// inside `[3.57, 4.0]`. Uses the finest increment.
pub fn key_domain(key: SchemeKey, width: f64) -> Result<KeyDomain> {
    if width > KEY_SPACE_WIDTH + 1e-12 {
        return Err(Error::arg(format!(
            "domain width {width} exceeds the key space width {KEY_SPACE_WIDTH}"
        )));
    }
    let w = ticks_of(width, "domain width")?;
    let span = SchemeKey::MAX.index();
    let lo = (key.index() as i64 - (w / 2) as i64).clamp(0, (span - w) as i64) as u32;
    Ok(KeyDomain {
        lo: SchemeKey::from_index(lo)?,
        hi: SchemeKey::from_index(lo + w)?,
        step_ticks: 1,
    })
}
