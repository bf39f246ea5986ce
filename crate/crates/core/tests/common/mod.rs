//! Shared fixtures for the integration tests.

use chaoscrypt::SchemeId;

/// Ciphertexts frozen from `oracle/reference.py`, an independent straight-line
/// implementation of the per-byte rules. Any change here is a format break.
pub const GOLDEN: [(SchemeId, f64, &str, &str); 9] = [
    (
        SchemeId::Logistic,
        3.65,
        "Hello! how are you?",
        "a3680057942132623540d5654640ee5ca151f4",
    ),
    (
        SchemeId::Logistic,
        3.7328,
        "I am going to market.",
        "592e0724df606b4544b009a642ff4fde4992615e07",
    ),
    (
        SchemeId::Logistic,
        3.8551,
        "Ram scored 98 marks in Maths.",
        "b0f90dc4fd018eef3a82a85be589368f2d369a560b8e8013880e0aac8c",
    ),
    (
        SchemeId::Nlfsr,
        3.65,
        "Hello! how are you?",
        "fa774c7791bee048bc0ec5d70278257d717f21",
    ),
    (
        SchemeId::Nlfsr,
        3.7328,
        "I am going to market.",
        "d89a8ec86e6acd31aca8f8f5ad189935546014271f",
    ),
    (
        SchemeId::Nlfsr,
        3.8551,
        "Ram scored 98 marks in Maths.",
        "875b2abe73653f614536f360a15fcc0ad3a53ac9d43cf1d685da0650a4",
    ),
    (
        SchemeId::ModifiedNlfsr,
        3.65,
        "Hello! how are you?",
        "1f5232d2c759b6f5bce2b24198186b7c713ac1",
    ),
    (
        SchemeId::ModifiedNlfsr,
        3.7328,
        "I am going to market.",
        "e341c22c547f95dd0d260549e744ced880b2629156",
    ),
    (
        SchemeId::ModifiedNlfsr,
        3.8551,
        "Ram scored 98 marks in Maths.",
        "71ac99f6402565c48068f4e181b56d97dd13dc4235ded218b62fc0cd56",
    ),
];
