//! Rendering of analysis tables and orbit dumps.

use std::fmt::Write as _;

use chaoscrypt::chaos::{orbit, LogisticParams};
use chaoscrypt::{AnalysisRow, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Csv,
    Json,
    Markdown,
}

/// The ten display columns, in table order.
pub const COLUMNS: [&str; 10] = [
    "index",
    "plaintext",
    "key",
    "ciphertext_hex",
    "plaintext_sensitivity_pct",
    "key_sensitivity_pct",
    "key_domain",
    "identifiability",
    "kpa_robustness",
    "secret_key",
];

const MARKDOWN_HEADERS: [&str; 10] = [
    "No.",
    "Plaintext",
    "Key",
    "Ciphertext (hex)",
    "Plaintext sensitivity (%)",
    "Key sensitivity (%)",
    "Key domain",
    "Identifiability",
    "KPA robustness",
    "Usable as secret key",
];

/// A row as it appears in CSV and Markdown output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRecord {
    pub index: usize,
    pub plaintext: String,
    pub key: String,
    pub ciphertext_hex: String,
    pub plaintext_sensitivity_pct: String,
    pub key_sensitivity_pct: String,
    pub key_domain: String,
    pub identifiability: String,
    /// `R` when no known prefix pins the key, else the shortest prefix that does.
    pub kpa_robustness: String,
    pub secret_key: String,
}

impl TableRecord {
    pub fn new(index: usize, row: &AnalysisRow) -> Self {
        Self {
            index,
            plaintext: String::from_utf8_lossy(&row.plaintext).into_owned(),
            key: row.key.to_string(),
            ciphertext_hex: row.ciphertext_hex.clone(),
            plaintext_sensitivity_pct: format!("{:.4}", row.pt_sensitivity_pct),
            key_sensitivity_pct: format!("{:.4}", row.key_sensitivity_pct),
            key_domain: row.domain.to_string(),
            identifiability: row.identifiable.code().to_string(),
            kpa_robustness: match row.kpa_breaking_prefix() {
                None => "R".to_string(),
                Some(n) => n.to_string(),
            },
            secret_key: if row.secret_key_ok { "YES" } else { "NO" }.to_string(),
        }
    }

    fn cells(&self) -> [String; 10] {
        [
            self.index.to_string(),
            self.plaintext.clone(),
            self.key.clone(),
            self.ciphertext_hex.clone(),
            self.plaintext_sensitivity_pct.clone(),
            self.key_sensitivity_pct.clone(),
            self.key_domain.clone(),
            self.identifiability.clone(),
            self.kpa_robustness.clone(),
            self.secret_key.clone(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonDomain {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

/// A row as it appears in JSON output: the `AnalysisRow` fields plus its
/// position in the table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsonRow {
    pub index: usize,
    pub plaintext: String,
    pub key: f64,
    pub ciphertext_hex: String,
    pub pt_sensitivity_pct: f64,
    pub key_sensitivity_pct: f64,
    pub domain: JsonDomain,
    pub identifiable: String,
    pub kpa_robust_prefix_len: usize,
    pub secret_key_ok: bool,
}

fn round4(v: f64) -> f64 {
    (v * 1e4).round() / 1e4
}

impl JsonRow {
    pub fn new(index: usize, row: &AnalysisRow) -> Self {
        Self {
            index,
            plaintext: String::from_utf8_lossy(&row.plaintext).into_owned(),
            key: row.key.r(),
            ciphertext_hex: row.ciphertext_hex.clone(),
            pt_sensitivity_pct: round4(row.pt_sensitivity_pct),
            key_sensitivity_pct: round4(row.key_sensitivity_pct),
            domain: JsonDomain {
                lo: row.domain.lo().r(),
                hi: row.domain.hi().r(),
                step: row.domain.step(),
            },
            identifiable: row.identifiable.code().to_string(),
            kpa_robust_prefix_len: row.kpa_robust_prefix_len,
            secret_key_ok: row.secret_key_ok,
        }
    }
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

/// Renders rows numbered from 1. Percentages carry four decimals.
pub fn render_table(rows: &[AnalysisRow], fmt: ReportFormat) -> String {
    match fmt {
        ReportFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(Vec::new());
            w.write_record(COLUMNS).expect("write to memory");
            for (i, row) in rows.iter().enumerate() {
                w.serialize(TableRecord::new(i + 1, row))
                    .expect("write to memory");
            }
            String::from_utf8(w.into_inner().expect("flush to memory"))
                .expect("csv output is utf-8")
        }
        ReportFormat::Json => {
            let records: Vec<JsonRow> = rows
                .iter()
                .enumerate()
                .map(|(i, r)| JsonRow::new(i + 1, r))
                .collect();
            let mut s = serde_json::to_string_pretty(&records).expect("rows serialize");
            s.push('\n');
            s
        }
        ReportFormat::Markdown => {
            let mut out = String::new();
            let _ = writeln!(out, "| {} |", MARKDOWN_HEADERS.join(" | "));
            let _ = writeln!(out, "|{}", "---|".repeat(MARKDOWN_HEADERS.len()));
            for (i, row) in rows.iter().enumerate() {
                let cells: Vec<String> = TableRecord::new(i + 1, row)
                    .cells()
                    .iter()
                    .map(|c| md_escape(c))
                    .collect();
                let _ = writeln!(out, "| {} |", cells.join(" | "));
            }
            out
        }
    }
}

/// `index,x` CSV of `n` orbit points (no burn-in). Values use the shortest
/// decimal that parses back to the same double.
pub fn orbit_dump(params: &LogisticParams, n: usize) -> Result<String> {
    let xs = orbit(params, n, 0)?;
    let mut out = String::with_capacity(24 * (n + 1));
    out.push_str("index,x\n");
    for (i, x) in xs.iter().enumerate() {
        let _ = writeln!(out, "{i},{x:?}");
    }
    Ok(out)
}
