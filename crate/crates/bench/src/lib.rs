//! Criterion benchmarks for the ciphers and the key sweeps.

use std::hint::black_box;

use chaoscrypt::analysis::{identifiability, key_domain, kpa_bruteforce, KeyDomain};
use chaoscrypt::scheme::make_key;
use chaoscrypt::{Scheme, SchemeId, StreamCipher};
use criterion::{BenchmarkId, Criterion, Throughput};

const TEXT: &[u8] = b"Ram scored 98 marks in Maths.";

pub fn encrypt(c: &mut Criterion) {
    let key = make_key(3.8551).unwrap();
    let data: Vec<u8> = (0..4096u32).map(|i| (i * 31 % 251) as u8).collect();
    let mut group = c.benchmark_group("encrypt_4k");
    group.throughput(Throughput::Bytes(data.len() as u64));
    for id in SchemeId::ALL {
        let s = Scheme::new(id);
        group.bench_with_input(BenchmarkId::from_parameter(id), &data, |b, d| {
            b.iter(|| s.encrypt(black_box(key), black_box(d)))
        });
    }
    group.finish();
}

pub fn brute_force(c: &mut Criterion) {
    let key = make_key(3.8551).unwrap();
    let full = KeyDomain::full();
    let mut group = c.benchmark_group("kpa_full_space_32b");
    group.sample_size(10);
    for id in SchemeId::ALL {
        let s = Scheme::new(id);
        let p = [TEXT, &TEXT[..3]].concat();
        let ct = s.encrypt(key, &p);
        group.bench_function(BenchmarkId::from_parameter(id), |b| {
            b.iter(|| kpa_bruteforce(&s, black_box(&ct), black_box(&p), &full).unwrap())
        });
    }
    group.finish();
}

pub fn identify(c: &mut Criterion) {
    let key = make_key(3.6424).unwrap();
    let domain = key_domain(key, 0.20).unwrap();
    let mut group = c.benchmark_group("identifiability_2001_keys");
    group.sample_size(10);
    for id in SchemeId::ALL {
        let s = Scheme::new(id);
        group.bench_function(BenchmarkId::from_parameter(id), |b| {
            b.iter(|| identifiability(&s, black_box(TEXT), &domain, 2).unwrap())
        });
    }
    group.finish();
}

pub fn benchmarks(c: &mut Criterion) {
    encrypt(c);
    brute_force(c);
    identify(c);
}
