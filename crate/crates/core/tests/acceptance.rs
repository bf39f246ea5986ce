//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fail.

mod common;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use chaoscrypt::analysis::{
    bit_difference_percent, enumerate_keys, identifiability, key_domain, kpa_bruteforce,
    kpa_candidate_counts, plaintext_sensitivity, FlipSpec, KeyDomain, Verdict,
};
use chaoscrypt::chaos::{lyapunov_estimate, orbit, LogisticParams};
use chaoscrypt::scheme::make_key;
use chaoscrypt::{Scheme, SchemeId, SchemeKey, StreamCipher};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn random_key(rng: &mut StdRng) -> SchemeKey {
    SchemeKey::from_index(rng.gen_range(0..SchemeKey::COUNT as u32)).unwrap()
}

fn random_bytes(rng: &mut StdRng, len: usize) -> Vec<u8> {
    (0..len).map(|_| rng.gen()).collect()
}

fn random_scheme(rng: &mut StdRng) -> Scheme {
    Scheme::new(SchemeId::ALL[rng.gen_range(0..3)])
}

/// Two `len`-byte strings differing in exactly `bits` bits.
fn differing(len: usize, bits: usize) -> (Vec<u8>, Vec<u8>) {
    let a = vec![0x5a; len];
    let mut b = a.clone();
    for i in 0..bits {
        b[i / 8] ^= 1 << (i % 8);
    }
    (a, b)
}

fn c1_round_trip() -> Outcome {
    let mut rng = StdRng::seed_from_u64(1);
    let keys: Vec<SchemeKey> = (0..25u32)
        .map(|i| SchemeKey::from_index(i * 4300 / 24).unwrap())
        .collect();
    ensure!(
        keys[0] == SchemeKey::MIN && keys[24] == SchemeKey::MAX,
        "keys do not span the space"
    );
    let texts: Vec<Vec<u8>> = (0..200)
        .map(|_| {
            let len = rng.gen_range(1..=4096);
            random_bytes(&mut rng, len)
        })
        .collect();
    let start = Instant::now();
    let mut checked = 0;
    for id in SchemeId::ALL {
        let s = Scheme::new(id);
        for &k in &keys {
            for p in &texts {
                let c = s.encrypt(k, p);
                ensure!(c.len() == p.len(), "{id} key {k}: length changed");
                ensure!(&s.decrypt(k, &c) == p, "{id} key {k}: round trip failed");
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(
        elapsed < Duration::from_secs(30),
        "took {elapsed:?} (limit 30 s)"
    );
    Ok(format!("{checked} round trips exact in {elapsed:.2?}"))
}

fn c2_metric_anchors() -> Outcome {
    let anchors = [(19, 6, 3.9474), (19, 71, 46.7105), (22, 1, 0.5682)];
    let mut got = Vec::new();
    for (len, bits, want) in anchors {
        let (a, b) = differing(len, bits);
        let v = bit_difference_percent(&a, &b).map_err(|e| e.to_string())?;
        ensure!(
            (v - want).abs() <= 5e-5,
            "{bits} bits / {len} bytes -> {v}, want {want}"
        );
        got.push(format!("{v:.4}"));
    }
    Ok(format!("anchors {}", got.join(", ")))
}

fn c3_synchronous_avalanche() -> Outcome {
    let mut rng = StdRng::seed_from_u64(3);
    let s = Scheme::new(SchemeId::Nlfsr);
    for _ in 0..100 {
        let k = random_key(&mut rng);
        let len = rng.gen_range(1..=256);
        let p = random_bytes(&mut rng, len);
        let flip = FlipSpec::new(rng.gen_range(0..len), rng.gen_range(0..8)).unwrap();
        let v = plaintext_sensitivity(&s, k, &p, flip).map_err(|e| e.to_string())?;
        let want = 100.0 / (8.0 * len as f64);
        ensure!(v == want, "key {k}, len {len}, {flip:?}: {v} != {want}");
    }
    Ok("100/100 triples equal 100/(8 len)".into())
}

fn c4_diffusion_ordering() -> Outcome {
    let mut rng = StdRng::seed_from_u64(4);
    let text = b"Ram scored 98 marks in Maths.";
    ensure!(text.len() == 29, "fixture must be 29 bytes");
    let keys: Vec<SchemeKey> = (0..100).map(|_| random_key(&mut rng)).collect();
    let mean = |id: SchemeId| -> Result<f64, String> {
        let s = Scheme::new(id);
        let mut total = 0.0;
        for &k in &keys {
            total += plaintext_sensitivity(&s, k, text, FlipSpec::default())
                .map_err(|e| e.to_string())?;
        }
        Ok(total / keys.len() as f64)
    };
    let (m, l, n) = (
        mean(SchemeId::ModifiedNlfsr)?,
        mean(SchemeId::Logistic)?,
        mean(SchemeId::Nlfsr)?,
    );
    ensure!(
        m > l && l > n,
        "ordering violated: mnlfsr {m:.4}, logistic {l:.4}, nlfsr {n:.4}"
    );
    ensure!(m >= 4.0, "mnlfsr mean {m:.4} < 4%");
    Ok(format!(
        "means mnlfsr {m:.4} > logistic {l:.4} > nlfsr {n:.4}"
    ))
}

fn c5_key_space() -> Outcome {
    let full = KeyDomain::new(3.57, 4.0, 0.0001).map_err(|e| e.to_string())?;
    let keys = enumerate_keys(&full);
    ensure!(keys.len() == 4301, "enumerated {} keys", keys.len());
    let mut rng = StdRng::seed_from_u64(5);
    let mut worst = Duration::ZERO;
    for id in SchemeId::ALL {
        let s = Scheme::new(id);
        let k = random_key(&mut rng);
        let p = random_bytes(&mut rng, 32);
        let c = s.encrypt(k, &p);
        let start = Instant::now();
        let out = kpa_bruteforce(&s, &c, &p, &full).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        worst = worst.max(elapsed);
        ensure!(
            elapsed < Duration::from_secs(5),
            "{id}: brute force took {elapsed:?}"
        );
        ensure!(out.candidates.contains(&k), "{id}: true key missing");
    }
    Ok(format!(
        "4301 keys; slowest full-space 32-byte sweep {worst:.2?}"
    ))
}

fn c6_kpa_completeness() -> Outcome {
    let mut rng = StdRng::seed_from_u64(6);
    for trial in 0..1000 {
        let s = random_scheme(&mut rng);
        let k = random_key(&mut rng);
        let len = rng.gen_range(1..=32);
        let p = random_bytes(&mut rng, len);
        let c = s.encrypt(k, &p);
        // a random sub-domain of up to 201 keys containing k
        let below = rng.gen_range(0..=100).min(k.index());
        let above = rng
            .gen_range(1..=100)
            .min(SchemeKey::MAX.index() - k.index());
        let (lo, hi) = if above == 0 {
            (k.offset(-(below.max(1) as i64)).unwrap(), k)
        } else {
            (
                k.offset(-(below as i64)).unwrap(),
                k.offset(above as i64).unwrap(),
            )
        };
        let d = KeyDomain::new(lo.r(), hi.r(), 1e-4).map_err(|e| e.to_string())?;
        let counts = kpa_candidate_counts(&s, &c, &p, &d).map_err(|e| e.to_string())?;
        ensure!(
            counts.windows(2).all(|w| w[0] >= w[1]),
            "trial {trial}: counts grew {counts:?}"
        );
        let n = rng.gen_range(0..=len);
        let out = kpa_bruteforce(&s, &c, &p[..n], &d).map_err(|e| e.to_string())?;
        ensure!(
            out.candidates.contains(&k),
            "trial {trial}: true key {k} missing at prefix {n}"
        );
        ensure!(
            out.candidates.len() == counts[n],
            "trial {trial}: sweep and profile disagree"
        );
    }
    Ok("1000/1000 trials complete and monotone".into())
}

struct Constant;

impl StreamCipher for Constant {
    fn encrypt(&self, _: SchemeKey, p: &[u8]) -> Vec<u8> {
        vec![0; p.len()]
    }
    fn decrypt(&self, _: SchemeKey, c: &[u8]) -> Vec<u8> {
        c.to_vec()
    }
}

struct KeyEcho;

impl StreamCipher for KeyEcho {
    fn encrypt(&self, k: SchemeKey, p: &[u8]) -> Vec<u8> {
        let b = k.index().to_le_bytes();
        (0..p.len()).map(|i| b[i % 2]).collect()
    }
    fn decrypt(&self, k: SchemeKey, c: &[u8]) -> Vec<u8> {
        self.encrypt(k, c)
    }
}

fn c7_identifiability_fixtures() -> Outcome {
    let d = KeyDomain::new(3.7, 3.72, 1e-4).map_err(|e| e.to_string())?;
    let constant = identifiability(&Constant, b"xy", &d, 2).map_err(|e| e.to_string())?;
    ensure!(
        constant.verdict == Verdict::NonIdentifiable,
        "constant fixture judged I"
    );
    ensure!(
        constant.collisions.len() == 201 * 200 / 2,
        "constant fixture: {} pairs",
        constant.collisions.len()
    );
    let echo =
        identifiability(&KeyEcho, b"xy", &KeyDomain::full(), 2).map_err(|e| e.to_string())?;
    ensure!(
        echo.verdict == Verdict::Identifiable,
        "key-echo fixture judged NI"
    );

    let mut rng = StdRng::seed_from_u64(7);
    let mut i_at_one = 0;
    for trial in 0..50 {
        let s = random_scheme(&mut rng);
        let width = rng.gen_range(1..=400u32);
        let lo = rng.gen_range(0..=SchemeKey::MAX.index() - width);
        let d = KeyDomain::new(
            SchemeKey::from_index(lo).unwrap().r(),
            SchemeKey::from_index(lo + width).unwrap().r(),
            1e-4,
        )
        .map_err(|e| e.to_string())?;
        let len = rng.gen_range(2..=16);
        let p = random_bytes(&mut rng, len);
        let one = identifiability(&s, &p, &d, 1).map_err(|e| e.to_string())?;
        let two = identifiability(&s, &p, &d, 2).map_err(|e| e.to_string())?;
        ensure!(
            two.collisions
                .iter()
                .all(|c| one.collisions.binary_search(c).is_ok()),
            "trial {trial}: n_out=2 collision missing at n_out=1"
        );
        if one.verdict == Verdict::Identifiable {
            i_at_one += 1;
            ensure!(
                two.verdict == Verdict::Identifiable,
                "trial {trial}: I at 1 but NI at 2"
            );
        }
    }
    Ok(format!(
        "fixtures NI/I as expected; implication held on 50 domains ({i_at_one} with I at n_out=1)"
    ))
}

fn c8_identifiability_scale() -> Outcome {
    let p = b"What is your name?";
    let d = key_domain(make_key(3.6424).unwrap(), 0.20).map_err(|e| e.to_string())?;
    ensure!(d.len() == 2001, "domain has {} keys", d.len());
    let mut summary = Vec::new();
    for id in SchemeId::ALL {
        let s = Scheme::new(id);
        let start = Instant::now();
        let rep = identifiability(&s, p, &d, 2).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure!(
            elapsed < Duration::from_secs(5),
            "{id}: sweep took {elapsed:?}"
        );
        let again = identifiability(&s, p, &d, 2).map_err(|e| e.to_string())?;
        ensure!(rep == again, "{id}: repeated sweep differs");

        // sequential oracle in key order
        let mut seen: HashMap<Vec<u8>, Vec<SchemeKey>> = HashMap::new();
        for k in enumerate_keys(&d) {
            seen.entry(s.encrypt(k, &p[..2])).or_default().push(k);
        }
        let mut pairs: Vec<(SchemeKey, SchemeKey)> = seen
            .values()
            .flat_map(|g| {
                (0..g.len()).flat_map(move |i| (i + 1..g.len()).map(move |j| (g[i], g[j])))
            })
            .collect();
        pairs.sort();
        ensure!(
            pairs == rep.collisions,
            "{id}: parallel sweep disagrees with sequential oracle"
        );
        summary.push(format!(
            "{id} {} ({} pairs, {elapsed:.2?})",
            rep.verdict,
            rep.collisions.len()
        ));
    }
    Ok(format!("2001 keys, n_out=2: {}", summary.join("; ")))
}

fn c9_chaos() -> Outcome {
    let p = |r, x0| LogisticParams::new(r, x0).unwrap();
    let l4 = lyapunov_estimate(&p(4.0, 0.3), 100_000)
        .map_err(|e| e.to_string())?
        .exponent;
    ensure!(
        (l4 - std::f64::consts::LN_2).abs() <= 0.01,
        "lambda(4.0) = {l4}"
    );
    let l32 = lyapunov_estimate(&p(3.2, 0.3), 100_000)
        .map_err(|e| e.to_string())?
        .exponent;
    ensure!(l32 < 0.0, "lambda(3.2) = {l32}");
    let o = orbit(&p(3.99, 0.99), 5000, 0).map_err(|e| e.to_string())?;
    ensure!(o.len() == 5000, "orbit length {}", o.len());
    ensure!(o.iter().all(|&x| x > 0.0 && x < 1.0), "orbit left (0,1)");
    ensure!(
        o.iter().any(|&x| x < 0.5) && o.iter().any(|&x| x > 0.5),
        "orbit stayed on one side of 0.5"
    );
    Ok(format!(
        "lambda(4.0) = {l4:.4}, lambda(3.2) = {l32:.4}, orbit in (0,1) on both halves"
    ))
}

fn c10_golden() -> Outcome {
    for (id, r, text, hex) in common::GOLDEN {
        let k = make_key(r).map_err(|e| e.to_string())?;
        let s = Scheme::new(id);
        let c = s.encrypt(k, text.as_bytes());
        ensure!(
            hex::encode(&c) == hex,
            "{id} {r} {text:?}: got {}",
            hex::encode(&c)
        );
        ensure!(
            s.decrypt(k, &c) == text.as_bytes(),
            "{id} {r}: decrypt mismatch"
        );
    }
    Ok("9/9 golden ciphertexts reproduced".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("C1  round trip", c1_round_trip),
        ("C2  metric formula anchors", c2_metric_anchors),
        (
            "C3  synchronous one-bit avalanche",
            c3_synchronous_avalanche,
        ),
        ("C4  diffusion ordering", c4_diffusion_ordering),
        ("C5  key-space count and sweep time", c5_key_space),
        ("C6  KPA completeness and monotonicity", c6_kpa_completeness),
        ("C7  identifiability fixtures", c7_identifiability_fixtures),
        (
            "C8  identifiability at table scale",
            c8_identifiability_scale,
        ),
        ("C9  chaos diagnostics", c9_chaos),
        ("C10 golden vectors", c10_golden),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
