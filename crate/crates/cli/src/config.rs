//! `key=value` configuration files.
//!
//! ```text
//! # comments and blank lines are ignored
//! x0 = 0.99
//! burn_in = 64
//! sine_omega = 6.283185307179586
//! sine_phi = 0
//! nlfsr_feedback = standard     # or `alternate`
//! domain_width = 0.20
//! key_step = 0.0001
//! ```

use std::collections::HashSet;
use std::str::FromStr;

use chaoscrypt::analysis::KEY_SPACE_WIDTH;
use chaoscrypt::{NlfsrFeedback, SchemeParams, SineParams};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("config line {line}: {message}")]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    pub scheme: SchemeParams,
    /// Width of the key window used by `analyze`, `identify` and `kpa`.
    pub domain_width: f64,
    /// Increment of key sweeps inside that window.
    pub key_step: f64,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            scheme: SchemeParams::default(),
            domain_width: 0.20,
            key_step: 1e-4,
        }
    }
}

const KEYS: [&str; 7] = [
    "x0",
    "burn_in",
    "sine_omega",
    "sine_phi",
    "nlfsr_feedback",
    "domain_width",
    "key_step",
];

fn parse_value<T: FromStr>(raw: &str, line: usize, key: &str) -> Result<T, ConfigError> {
    raw.parse().map_err(|_| ConfigError {
        line,
        message: format!("cannot parse `{raw}` as a value for `{key}`"),
    })
}

pub fn parse_config(text: &str) -> Result<Config, ConfigError> {
    let mut cfg = Config::default();
    let mut seen = HashSet::new();
    let (mut omega, mut phi) = (cfg.scheme.sine.omega(), cfg.scheme.sine.phi());

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| ConfigError { line, message };
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| err(format!("expected `key=value`, found `{content}`")))?;
        let (key, value) = (key.trim(), value.trim());
        if !KEYS.contains(&key) {
            return Err(err(format!("unknown key `{key}`")));
        }
        if !seen.insert(key.to_string()) {
            return Err(err(format!("`{key}` is set twice")));
        }
        match key {
            "x0" => {
                let x0: f64 = parse_value(value, line, key)?;
                if !(x0 > 0.0 && x0 < 1.0) {
                    return Err(err(format!("x0 = {x0} is not in (0, 1)")));
                }
                cfg.scheme.x0 = x0;
            }
            "burn_in" => cfg.scheme.burn_in = parse_value(value, line, key)?,
            "sine_omega" | "sine_phi" => {
                let v: f64 = parse_value(value, line, key)?;
                if !v.is_finite() {
                    return Err(err(format!("`{key}` must be finite")));
                }
                if key == "sine_omega" {
                    omega = v;
                } else {
                    phi = v;
                }
            }
            "nlfsr_feedback" => {
                cfg.scheme.feedback = value
                    .parse::<NlfsrFeedback>()
                    .map_err(|e| err(e.to_string()))?;
            }
            "domain_width" => {
                let w: f64 = parse_value(value, line, key)?;
                if !(w > 0.0 && w <= KEY_SPACE_WIDTH) {
                    return Err(err(format!(
                        "domain_width {w} is not in (0, {KEY_SPACE_WIDTH}]"
                    )));
                }
                cfg.domain_width = w;
            }
            "key_step" => {
                let s: f64 = parse_value(value, line, key)?;
                let ticks = s / 1e-4;
                if s.is_nan() || s <= 0.0 || (ticks - ticks.round()).abs() > 1e-6 {
                    return Err(err(format!(
                        "key_step {s} is not a positive multiple of 0.0001"
                    )));
                }
                cfg.key_step = s;
            }
            _ => unreachable!(),
        }
    }
    cfg.scheme.sine = SineParams::new(1.0, omega, phi).map_err(|e| ConfigError {
        line: 0,
        message: e.to_string(),
    })?;
    Ok(cfg)
}
