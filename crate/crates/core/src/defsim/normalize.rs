use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

/// How surviving content words are reduced before counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NormMode {
    /// Map through the lemma dictionary; unknown words pass through.
    Lemma,
    /// Keep the first `n` characters of every token.
    Ultrastem(usize),
}

pub const DEFAULT_ULTRASTEM_LEN: usize = 4;

impl fmt::Display for NormMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormMode::Lemma => f.write_str("lemma"),
            NormMode::Ultrastem(n) => write!(f, "ultrastem-{n}"),
        }
    }
}

impl FromStr for NormMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lemma" => Ok(NormMode::Lemma),
            "ultrastem" => Ok(NormMode::Ultrastem(DEFAULT_ULTRASTEM_LEN)),
            _ => {
                let n = s
                    .strip_prefix("ultrastem-")
                    .and_then(|n| n.parse::<usize>().ok())
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| {
                        format!("unknown mode \"{s}\" (expected lemma or ultrastem-<n>)")
                    })?;
                Ok(NormMode::Ultrastem(n))
            }
        }
    }
}

/// Stoplist plus lemma dictionary.
#[derive(Debug, Clone, Default)]
pub struct Normalizer {
    stoplist: HashSet<String>,
    lemmas: HashMap<String, String>,
}

impl Normalizer {
    pub fn new(stoplist: HashSet<String>, lemmas: HashMap<String, String>) -> Self {
        Normalizer { stoplist, lemmas }
    }

    /// Built from the stoplist and lemma dictionary shipped with the crate.
    pub fn bundled() -> Self {
        Normalizer::new(
            crate::lexicon_io::parse_stoplist(crate::data::STOPLIST),
            crate::lexicon_io::parse_lemmas(crate::data::LEMMAS, "<bundled>")
                .expect("bundled lemma dictionary is valid"),
        )
    }

    pub fn stoplist(&self) -> &HashSet<String> {
        &self.stoplist
    }

    pub fn is_stopword(&self, w: &str) -> bool {
        self.stoplist.contains(w)
    }

    /// Lowercase, strip punctuation, drop stopwords, then lemmatize or
    /// truncate. Reduced forms that collide with a stopword are dropped too.
    pub fn normalize(&self, text: &str, mode: NormMode) -> Vec<String> {
        text.to_lowercase()
            .split(|c: char| !c.is_alphanumeric())
            .filter(|t| !t.is_empty() && !self.is_stopword(t))
            .map(|t| match mode {
                NormMode::Lemma => self.lemmas.get(t).cloned().unwrap_or_else(|| t.to_string()),
                NormMode::Ultrastem(n) => t.chars().take(n).collect(),
            })
            .filter(|t| !self.is_stopword(t))
            .collect()
    }
}

pub fn normalize_definition(
    text: &str,
    stoplist: &HashSet<String>,
    lemma_dict: &HashMap<String, String>,
    mode: NormMode,
) -> Vec<String> {
    Normalizer::new(stoplist.clone(), lemma_dict.clone()).normalize(text, mode)
}
