//! The logistic map `x -> r x (1 - x)` and the diagnostics built on it.

use crate::error::{Error, Result};

/// Lower edge of the band the cipher state is kept in.
pub const STATE_MIN: f64 = 1e-12;
/// Upper edge of the band the cipher state is kept in.
pub const STATE_MAX: f64 = 1.0 - 1e-12;

/// Iterations discarded before the Lyapunov average starts.
const LYAPUNOV_TRANSIENT: usize = 1000;

/// Parameters of a single logistic orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogisticParams {
    r: f64,
    x0: f64,
}

impl LogisticParams {
    pub fn new(r: f64, x0: f64) -> Result<Self> {
        check_r(r)?;
        if !(x0 > 0.0 && x0 < 1.0) {
            return Err(Error::domain(format!("x0 = {x0} is not in (0, 1)")));
        }
        Ok(Self { r, x0 })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }
}

fn check_r(r: f64) -> Result<()> {
    if r > 0.0 && r <= 4.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("r = {r} is not in (0, 4]")))
    }
}

/// One application of the map. Both `x` and `r` are range-checked.
pub fn logistic_step(x: f64, r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("x = {x} is not in [0, 1]")));
    }
    check_r(r)?;
    Ok(step_unchecked(x, r))
}

#[inline]
pub(crate) fn step_unchecked(x: f64, r: f64) -> f64 {
    r * x * (1.0 - x)
}

/// Clamps a state into `[STATE_MIN, STATE_MAX]` so it can never settle on the
/// absorbing fixed point at zero.
#[inline]
pub fn guard(x: f64) -> f64 {
    x.clamp(STATE_MIN, STATE_MAX)
}

/// Fractional part, `v - floor(v)`.
#[inline]
pub(crate) fn frac(v: f64) -> f64 {
    v - v.floor()
}

/// Iterates `burn_in` times from `x0`, then returns the next `n` iterates.
///
/// The initial condition itself is never part of the output: with
/// `burn_in = 0` the first element is `x(1)`.
pub fn orbit(params: &LogisticParams, n: usize, burn_in: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::arg("orbit length must be at least 1"));
    }
    let mut x = params.x0;
    for _ in 0..burn_in {
        x = logistic_step(x, params.r)?;
    }
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        x = logistic_step(x, params.r)?;
        out.push(x);
    }
    Ok(out)
}

/// Result of [`lyapunov_estimate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LyapunovEstimate {
    /// Mean of `ln |r (1 - 2 x)|` over the terms that were finite.
    pub exponent: f64,
    /// Orbit points that landed exactly on `x = 0.5` and were left out.
    pub skipped: usize,
}

/// Average log-derivative of the map along an orbit of `n` points, taken
/// after a fixed transient of 1000 iterations.
pub fn lyapunov_estimate(params: &LogisticParams, n: usize) -> Result<LyapunovEstimate> {
    if n < 1000 {
        return Err(Error::arg(format!(
            "lyapunov_estimate needs n >= 1000, got {n}"
        )));
    }
    let r = params.r;
    let mut x = params.x0;
    for _ in 0..LYAPUNOV_TRANSIENT {
        x = step_unchecked(x, r);
    }
    let mut sum = 0.0;
    let mut used = 0usize;
    let mut skipped = 0usize;
    for _ in 0..n {
        let d = (r * (1.0 - 2.0 * x)).abs();
        if d == 0.0 {
            skipped += 1;
        } else {
            sum += d.ln();
            used += 1;
        }
        x = step_unchecked(x, r);
    }
    if used == 0 {
        return Err(Error::domain("every orbit point sat on x = 0.5"));
    }
    Ok(LyapunovEstimate {
        exponent: sum / used as f64,
        skipped,
    })
}

/// Maps `[0, 1]` onto bytes: `floor(256 x)`, with `1.0` clamped to 255.
pub fn quantize_byte(x: f64) -> Result<u8> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("cannot quantize {x}: not in [0, 1]")));
    }
    Ok(quantize_unchecked(x))
}

#[inline]
pub(crate) fn quantize_unchecked(x: f64) -> u8 {
    ((x * 256.0).floor() as u32).min(255) as u8
}
