use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use chaoscrypt::analysis::{
    analyze_row_with, identifiability, key_domain, key_sensitivity, kpa_bruteforce,
    plaintext_sensitivity, FlipSpec, KeyDomain, Perturbation, RowOptions,
};
use chaoscrypt::chaos::LogisticParams;
use chaoscrypt::scheme::make_key;
use chaoscrypt::{Scheme, SchemeId, SchemeKey, StreamCipher};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{parse_config, Config};
use crate::error::CliError;
use crate::report::{orbit_dump, render_table, ReportFormat};

#[derive(Debug, Parser)]
#[command(
    name = "chaoscrypt",
    version,
    about = "Logistic-map stream ciphers and their cryptanalysis"
)]
pub struct Cli {
    /// key=value file overriding scheme and sweep defaults
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    Logistic,
    Nlfsr,
    Mnlfsr,
}

impl From<SchemeArg> for SchemeId {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Logistic => SchemeId::Logistic,
            SchemeArg::Nlfsr => SchemeId::Nlfsr,
            SchemeArg::Mnlfsr => SchemeId::ModifiedNlfsr,
        }
    }
}

#[derive(Debug, Args)]
pub struct KeyArgs {
    #[arg(long, value_enum)]
    pub scheme: SchemeArg,
    /// map parameter r in [3.57, 4.0], rounded to the 0.0001 grid
    #[arg(long, allow_negative_numbers = true)]
    pub key: f64,
}

/// `BYTE:BIT`, or `all` to average over every single-bit flip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipArg {
    At(usize, u8),
    All,
}

fn parse_flip(s: &str) -> Result<FlipArg, String> {
    if s == "all" {
        return Ok(FlipArg::All);
    }
    let (byte, bit) = s.split_once(':').ok_or("expected BYTE:BIT or `all`")?;
    let byte = byte
        .parse()
        .map_err(|_| format!("bad byte index `{byte}`"))?;
    let bit = bit.parse().map_err(|_| format!("bad bit index `{bit}`"))?;
    if bit > 7 {
        return Err(format!("bit index {bit} is not in 0..=7"));
    }
    Ok(FlipArg::At(byte, bit))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Encrypt raw bytes; writes lowercase hex
    Encrypt {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Decrypt hex ciphertext; writes raw bytes
    Decrypt {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// One analysis-table row for a key and text
    Analyze {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long)]
        text: String,
        #[arg(long, value_parser = parse_flip, default_value = "0:0")]
        flip: FlipArg,
        #[arg(long, value_enum, default_value = "markdown")]
        format: ReportFormat,
    },
    /// Per-key ciphertext and sensitivities over a key interval (CSV)
    Sweep {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        #[arg(long)]
        lo: f64,
        #[arg(long)]
        hi: f64,
        #[arg(long)]
        step: f64,
        #[arg(long)]
        text: String,
    },
    /// Injectivity of key -> leading ciphertext bytes around a key
    Identify {
        #[command(flatten)]
        key: KeyArgs,
        /// window width; defaults to the configured domain_width
        #[arg(long)]
        width: Option<f64>,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
        nout: u8,
        #[arg(long)]
        text: String,
    },
    /// Known-plaintext brute force over the window around a key
    Kpa {
        #[command(flatten)]
        key: KeyArgs,
        #[arg(long)]
        text: String,
        #[arg(long)]
        prefix_len: usize,
    },
    /// Logistic-map orbit as index,x CSV
    Orbit {
        #[arg(long)]
        r: f64,
        #[arg(long)]
        x0: f64,
        #[arg(long)]
        n: usize,
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn read_input(path: Option<&Path>) -> Result<Vec<u8>, CliError> {
    match path {
        Some(p) => fs::read(p).map_err(io_err(p)),
        None => {
            let mut buf = Vec::new();
            io::stdin()
                .read_to_end(&mut buf)
                .map_err(io_err(Path::new("<stdin>")))?;
            Ok(buf)
        }
    }
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(io_err(p)),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(bytes)
                .and_then(|_| out.flush())
                .map_err(io_err(Path::new("<stdout>")))
        }
    }
}

fn load_config(cli: &Cli) -> Result<Config, CliError> {
    match &cli.config {
        Some(p) => Ok(parse_config(&fs::read_to_string(p).map_err(io_err(p))?)?),
        None => Ok(Config::default()),
    }
}

fn scheme_and_key(args: &KeyArgs, cfg: &Config) -> Result<(Scheme, SchemeKey), CliError> {
    let scheme = Scheme::with_params(args.scheme.into(), cfg.scheme)?;
    Ok((scheme, make_key(args.key)?))
}

fn window(key: SchemeKey, width: f64, cfg: &Config) -> Result<KeyDomain, CliError> {
    Ok(key_domain(key, width)?.with_step(cfg.key_step)?)
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let cfg = load_config(cli)?;
    match &cli.command {
        Command::Encrypt { key, input, output } => {
            let (scheme, key) = scheme_and_key(key, &cfg)?;
            let plaintext = read_input(input.as_deref())?;
            let mut hex = hex::encode(scheme.encrypt(key, &plaintext));
            hex.push('\n');
            write_output(output.as_deref(), hex.as_bytes())
        }
        Command::Decrypt { key, input, output } => {
            let (scheme, key) = scheme_and_key(key, &cfg)?;
            let raw = read_input(input.as_deref())?;
            let text: String = String::from_utf8_lossy(&raw).split_whitespace().collect();
            let ciphertext = hex::decode(&text)
                .map_err(|e| CliError::Input(format!("ciphertext is not hex: {e}")))?;
            write_output(output.as_deref(), &scheme.decrypt(key, &ciphertext))
        }
        Command::Analyze {
            key,
            text,
            flip,
            format,
        } => {
            let (scheme, key) = scheme_and_key(key, &cfg)?;
            let perturbation = match *flip {
                FlipArg::All => Perturbation::AllBits,
                FlipArg::At(byte, bit) => Perturbation::Bit(FlipSpec::new(byte, bit)?),
            };
            let opts = RowOptions {
                domain_width: cfg.domain_width,
                domain_step: cfg.key_step,
                ..RowOptions::default()
            };
            let row = analyze_row_with(&scheme, key, text.as_bytes(), perturbation, &opts)?;
            write_output(None, render_table(&[row], *format).as_bytes())
        }
        Command::Sweep {
            scheme,
            lo,
            hi,
            step,
            text,
        } => {
            let scheme = Scheme::with_params((*scheme).into(), cfg.scheme)?;
            let domain = KeyDomain::new(*lo, *hi, *step)?;
            write_output(
                None,
                sweep_csv(&scheme, &domain, text.as_bytes())?.as_bytes(),
            )
        }
        Command::Identify {
            key,
            width,
            nout,
            text,
        } => {
            let (scheme, key) = scheme_and_key(key, &cfg)?;
            let domain = window(key, width.unwrap_or(cfg.domain_width), &cfg)?;
            let rep = identifiability(&scheme, text.as_bytes(), &domain, *nout as usize)?;
            let mut out = String::new();
            let _ = writeln!(out, "scheme: {}", scheme.id());
            let _ = writeln!(out, "domain: {domain} step {}", domain.step());
            let _ = writeln!(out, "keys: {}", rep.keys_tested);
            let _ = writeln!(out, "n_out: {}", rep.n_out);
            let _ = writeln!(out, "verdict: {}", rep.verdict);
            let _ = writeln!(out, "colliding_pairs: {}", rep.collisions.len());
            for (a, b) in &rep.collisions {
                let _ = writeln!(out, "{a},{b}");
            }
            write_output(None, out.as_bytes())
        }
        Command::Kpa {
            key,
            text,
            prefix_len,
        } => {
            let (scheme, key) = scheme_and_key(key, &cfg)?;
            let p = text.as_bytes();
            if *prefix_len > p.len() {
                return Err(CliError::Usage(format!(
                    "--prefix-len {prefix_len} exceeds the {}-byte text",
                    p.len()
                )));
            }
            let domain = window(key, cfg.domain_width, &cfg)?;
            let ciphertext = scheme.encrypt(key, p);
            let outcome = kpa_bruteforce(&scheme, &ciphertext, &p[..*prefix_len], &domain)?;
            let mut out = String::new();
            let _ = writeln!(out, "scheme: {}", scheme.id());
            let _ = writeln!(out, "domain: {domain} step {}", domain.step());
            let _ = writeln!(out, "prefix_len: {prefix_len}");
            let _ = writeln!(out, "candidates: {}", outcome.candidates.len());
            let _ = writeln!(out, "robust: {}", if outcome.robust() { "R" } else { "NR" });
            for k in &outcome.candidates {
                let _ = writeln!(out, "{k}");
            }
            write_output(None, out.as_bytes())
        }
        Command::Orbit { r, x0, n, output } => {
            let params = LogisticParams::new(*r, *x0)?;
            write_output(output.as_deref(), orbit_dump(&params, *n)?.as_bytes())
        }
    }
}

/// `key,ciphertext_hex,plaintext_sensitivity_pct,key_sensitivity_pct` for every
/// key of `domain`, flipping bit 0 of byte 0.
pub fn sweep_csv<C: StreamCipher>(
    cipher: &C,
    domain: &KeyDomain,
    text: &[u8],
) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Input(e.to_string());
    w.write_record([
        "key",
        "ciphertext_hex",
        "plaintext_sensitivity_pct",
        "key_sensitivity_pct",
    ])
    .map_err(io)?;
    for k in domain.keys() {
        let c = cipher.encrypt(k, text);
        let pt = plaintext_sensitivity(cipher, k, text, FlipSpec::default())?;
        let ks = key_sensitivity(cipher, k, text, SchemeKey::GRID_STEP)?;
        w.write_record([
            k.to_string(),
            hex::encode(c),
            format!("{pt:.4}"),
            format!("{ks:.4}"),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
