//! Exception lexicon for words whose spelling does not follow Spanish
//! orthographic rules (loanwords such as `flash` or `collage`, and irregular
//! native spellings such as `méxico`).
//!
//! File format, one entry per line:
//!
//! ```text
//! # comment
//! flash<TAB>ˈflaʃ
//! squash<TAB>es.ˈkwaʃ
//! ```
//!
//! Syllables are separated by `.` and the stressed syllable is prefixed with
//! `ˈ` (an ASCII `'` is accepted too). A monosyllable may omit the mark.

use std::collections::BTreeMap;

use super::phoneme::{parse_phonemes, Phoneme};
use super::syllable::Syllable;
use super::transcribe::{normalize_word, PhonemeSequence};
use super::StressClass;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionEntry {
    pub syllables: Vec<Syllable>,
    /// Stress position counted from the end (1 = last syllable).
    pub stress_index: u8,
}

impl ExceptionEntry {
    pub fn phonemes(&self) -> Vec<Phoneme> {
        self.syllables.iter().flat_map(Syllable::phonemes).collect()
    }

    pub fn stress_class(&self) -> StressClass {
        StressClass::from_index(self.stress_index).expect("validated on parse")
    }

    pub(crate) fn phoneme_sequence(&self) -> PhonemeSequence {
        let stressed = self.syllables.len() - self.stress_index as usize;
        let offset: usize = self.syllables[..stressed].iter().map(Syllable::len).sum();
        PhonemeSequence {
            phonemes: self.phonemes(),
            accented: Some(offset + self.syllables[stressed].peak_offset()),
        }
    }

    /// Parse a dotted, stress-marked transcription such as `es.ˈkwaʃ`.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut syllables = Vec::new();
        let mut stressed = None;
        for (k, part) in text.trim().split('.').enumerate() {
            let body = match part.strip_prefix('ˈ').or_else(|| part.strip_prefix('\'')) {
                Some(rest) => {
                    if stressed.replace(k).is_some() {
                        return Err("more than one stress mark".into());
                    }
                    rest
                }
                None => part,
            };
            let phonemes = parse_phonemes(body)
                .map_err(|c| format!("unknown phoneme symbol '{c}' in \"{text}\""))?;
            syllables.push(split_syllable(
                &phonemes,
                k == stressed.unwrap_or(usize::MAX),
            )?);
        }
        let stressed = match stressed {
            Some(k) => k,
            None if syllables.len() == 1 => 0,
            None => return Err("missing stress mark".into()),
        };
        let stress_index = (syllables.len() - stressed) as u8;
        if StressClass::from_index(stress_index).is_none() {
            return Err(format!(
                "stress on syllable {stress_index} from the end; only the last three are supported"
            ));
        }
        Ok(ExceptionEntry {
            syllables,
            stress_index,
        })
    }

    pub fn render(&self) -> String {
        super::render_dotted(&self.syllables, self.stress_index)
    }
}

fn split_syllable(phonemes: &[Phoneme], accented: bool) -> Result<Syllable, String> {
    let first = phonemes.iter().position(|p| p.is_vowel()).ok_or_else(|| {
        format!(
            "syllable \"{}\" has no vowel",
            super::phoneme::render(phonemes)
        )
    })?;
    let len = phonemes[first..]
        .iter()
        .take_while(|p| p.is_vowel())
        .count();
    let end = first + len;
    if phonemes[end..].iter().any(|p| p.is_vowel()) {
        return Err(format!(
            "syllable \"{}\" has more than one nucleus",
            super::phoneme::render(phonemes)
        ));
    }
    let nucleus = phonemes[first..end].to_vec();
    let peak = nucleus
        .iter()
        .position(|p| p.is_strong_vowel())
        .unwrap_or(nucleus.len() - 1);
    Ok(Syllable {
        onset: phonemes[..first].to_vec(),
        nucleus,
        peak,
        coda: phonemes[end..].to_vec(),
        accented,
    })
}

/// Error raised while reading an exception lexicon; `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ExceptionParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExceptionLexicon {
    entries: BTreeMap<String, ExceptionEntry>,
}

impl ExceptionLexicon {
    pub fn parse(text: &str) -> Result<Self, ExceptionParseError> {
        let mut lex = ExceptionLexicon::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| ExceptionParseError {
                line: n + 1,
                message,
            };
            let (word, trans) = line
                .split_once('\t')
                .ok_or_else(|| err("expected word<TAB>transcription".into()))?;
            let word = normalize_word(word);
            if word.is_empty() {
                return Err(err("empty word".into()));
            }
            let entry = ExceptionEntry::parse(trans).map_err(err)?;
            if lex.entries.contains_key(&word) {
                return Err(err(format!("duplicate entry \"{word}\"")));
            }
            lex.entries.insert(word, entry);
        }
        Ok(lex)
    }

    /// The exceptions shipped with the crate.
    pub fn bundled() -> Self {
        Self::parse(crate::data::EXCEPTIONS).expect("bundled exception lexicon is valid")
    }

    pub fn insert(&mut self, word: &str, entry: ExceptionEntry) -> Option<ExceptionEntry> {
        self.entries.insert(normalize_word(word), entry)
    }

    pub fn get(&self, word: &str) -> Option<&ExceptionEntry> {
        self.entries.get(word)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains_key(word)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &ExceptionEntry)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }
}
