//! Definition vectors and the similarity measures between them.

pub mod measure;
pub mod normalize;

use std::collections::{BTreeMap, HashMap};

pub use measure::{levenshtein, similarity, SimilarityMeasure};
pub use normalize::{normalize_definition, NormMode, Normalizer, DEFAULT_ULTRASTEM_LEN};

use crate::lexicon_io::Lexicon;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DefSimError {
    #[error("no definitions")]
    NoDefinitions,
}

/// The `sense_index`-th definition of `word` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SenseDefinition {
    pub word: String,
    pub sense_index: u32,
    pub text: String,
}

/// Term frequencies of one definition, keeping the term order for the
/// token-level edit distance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DefinitionVector {
    terms: Vec<String>,
    counts: BTreeMap<String, u32>,
}

pub fn vectorize(terms: Vec<String>) -> DefinitionVector {
    let mut counts = BTreeMap::new();
    for t in &terms {
        *counts.entry(t.clone()).or_insert(0) += 1;
    }
    DefinitionVector { terms, counts }
}

impl DefinitionVector {
    /// Build from counts; terms are laid out in key order.
    pub fn from_counts<I, S>(counts: I) -> Self
    where
        I: IntoIterator<Item = (S, u32)>,
        S: Into<String>,
    {
        let mut terms = Vec::new();
        for (t, n) in counts {
            let t = t.into();
            for _ in 0..n {
                terms.push(t.clone());
            }
        }
        terms.sort();
        vectorize(terms)
    }

    pub fn terms(&self) -> &[String] {
        &self.terms
    }

    pub fn counts(&self) -> &BTreeMap<String, u32> {
        &self.counts
    }

    pub fn count(&self, term: &str) -> u32 {
        self.counts.get(term).copied().unwrap_or(0)
    }

    /// Size of the support (distinct terms).
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn squared_norm(&self) -> u64 {
        self.counts.values().map(|&c| c as u64 * c as u64).sum()
    }
}

/// Word-level similarity in [0, 1]: the best-matching sense pair.
pub fn word_similarity(
    m: SimilarityMeasure,
    senses1: &[DefinitionVector],
    senses2: &[DefinitionVector],
) -> Result<f64, DefSimError> {
    if senses1.is_empty() || senses2.is_empty() {
        return Err(DefSimError::NoDefinitions);
    }
    let mut best = f64::NEG_INFINITY;
    for u in senses1 {
        for v in senses2 {
            best = best.max(m.to_similarity(similarity(m, u, v)));
        }
    }
    Ok(best)
}

/// Sense vectors for every word of a lexicon, in one normalization mode.
#[derive(Debug, Clone)]
pub struct SenseVectors {
    pub mode: NormMode,
    vectors: HashMap<String, Vec<DefinitionVector>>,
}

impl SenseVectors {
    pub fn build(lexicon: &Lexicon, normalizer: &Normalizer, mode: NormMode) -> Self {
        let vectors = lexicon
            .entries()
            .iter()
            .filter(|e| !e.senses.is_empty())
            .map(|e| {
                let vs = e
                    .senses
                    .iter()
                    .map(|s| vectorize(normalizer.normalize(&s.text, mode)))
                    .collect();
                (e.word.clone(), vs)
            })
            .collect();
        SenseVectors { mode, vectors }
    }

    pub fn empty(mode: NormMode) -> Self {
        SenseVectors {
            mode,
            vectors: HashMap::new(),
        }
    }

    pub fn insert(&mut self, word: &str, senses: Vec<DefinitionVector>) {
        self.vectors.insert(word.to_string(), senses);
    }

    /// Senses of `word`; `None` or an empty slice means undefined.
    pub fn get(&self, word: &str) -> Option<&[DefinitionVector]> {
        self.vectors.get(word).map(Vec::as_slice)
    }

    pub fn has_definitions(&self, word: &str) -> bool {
        self.get(word).is_some_and(|s| !s.is_empty())
    }
}
