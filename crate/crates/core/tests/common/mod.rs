//! Helpers shared by the integration suites.
#![allow(dead_code)]

use std::collections::HashSet;

use rand::RngExt;
use rand_chacha::ChaCha8Rng;

// Onsets valid before every vowel (no c/g/qu spelling alternations).
const ONSETS: &[&str] = &[
    "", "b", "d", "f", "l", "m", "n", "p", "r", "s", "t", "ch", "ll", "ñ", "br", "tr", "pl", "gr",
    "cl",
];
const VOWELS: &[char] = &['a', 'e', 'i', 'o', 'u'];
const ACCENTED: &[char] = &['á', 'é', 'í', 'ó', 'ú'];
const CODAS: &[&str] = &["", "", "", "n", "s", "r", "l"];

fn pick<'a, T>(rng: &mut ChaCha8Rng, xs: &'a [T]) -> &'a T {
    &xs[rng.random_range(0..xs.len())]
}

/// A random pronounceable word of `syllables` syllables, optionally carrying
/// a written accent within the last three syllables.
pub fn random_word(rng: &mut ChaCha8Rng, syllables: usize) -> String {
    let accent_at = if rng.random_bool(0.3) {
        Some(syllables - 1 - rng.random_range(0..syllables.min(3)))
    } else {
        None
    };
    let mut w = String::new();
    for s in 0..syllables {
        let onset = *pick(rng, ONSETS);
        // keep the first syllable's onset non-empty so vowels never touch
        w.push_str(if onset.is_empty() && s > 0 {
            "t"
        } else {
            onset
        });
        let v = rng.random_range(0..VOWELS.len());
        w.push(if accent_at == Some(s) {
            ACCENTED[v]
        } else {
            VOWELS[v]
        });
        if s + 1 < syllables || rng.random_bool(0.4) {
            w.push_str(pick(rng, CODAS));
        }
    }
    w
}

/// `w` with written accents removed.
pub fn strip_accents(w: &str) -> String {
    w.chars()
        .map(|c| match ACCENTED.iter().position(|&a| a == c) {
            Some(i) => VOWELS[i],
            None => c,
        })
        .collect()
}

/// `n` distinct random words of 1 to 4 syllables.
pub fn random_words(rng: &mut ChaCha8Rng, n: usize) -> Vec<String> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let syllables = rng.random_range(1..=4);
        let w = random_word(rng, syllables);
        if seen.insert(w.clone()) {
            out.push(w);
        }
    }
    out
}

pub const VOCAB: &[&str] = &[
    "agua", "fuego", "tierra", "aire", "casa", "perro", "gato", "comida", "bebida", "planta",
    "árbol", "fruta", "dulce", "salado", "rojo", "verde", "grande", "pequeño", "viejo", "nuevo",
    "correr", "comer", "beber", "cantar", "bailar", "dormir", "mar", "río", "montaña", "ciudad",
];

/// A definition of 3 to 8 vocabulary words.
pub fn random_definition(rng: &mut ChaCha8Rng) -> String {
    let n = rng.random_range(3..=8);
    (0..n)
        .map(|_| *pick(rng, VOCAB))
        .collect::<Vec<_>>()
        .join(" ")
}
