//! The rhyming dictionary: words partitioned by stress class and grouped
//! into assonant and consonant rhyme classes.
//!
//! Every word lands in exactly one of three groups (A = oxytone,
//! G = paroxytone, E = proparoxytone). Inside a group a word belongs to one
//! assonant class, keyed by the peak vowels from the stressed syllable to the
//! end (`*.á.a.a`), and one consonant class, keyed by every phoneme from the
//! stressed vowel to the end (`~ámara`). Equal consonant keys imply equal
//! assonant keys, so each consonant class sits inside one assonant class.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::phonology::{
    normalize_word, ExceptionLexicon, PhonWord, Phoneme, PhonologyError, StressClass, Syllable,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IndexError {
    #[error("duplicate entry \"{0}\"")]
    Duplicate(String),
    #[error("word not in lexicon: \"{0}\"")]
    UnknownWord(String),
    #[error(transparent)]
    Phonology(#[from] PhonologyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RhymeKind {
    Assonant,
    Consonant,
}

impl RhymeKind {
    pub fn name(self) -> &'static str {
        match self {
            RhymeKind::Assonant => "assonant",
            RhymeKind::Consonant => "consonant",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "assonant" => Some(RhymeKind::Assonant),
            "consonant" => Some(RhymeKind::Consonant),
            _ => None,
        }
    }
}

impl fmt::Display for RhymeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Vocalic pattern, e.g. `*.ú.u.a`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AssonantKey {
    pub vowels: Vec<Phoneme>,
}

impl fmt::Display for AssonantKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("*")?;
        for (k, v) in self.vowels.iter().enumerate() {
            let sym = if k == 0 {
                v.stressed_symbol()
            } else {
                v.symbol()
            };
            write!(f, ".{sym}")?;
        }
        Ok(())
    }
}

/// Phoneme suffix from the stressed vowel, e.g. `~ámara`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConsonantKey {
    pub suffix: Vec<Phoneme>,
}

impl fmt::Display for ConsonantKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("~")?;
        for (k, p) in self.suffix.iter().enumerate() {
            f.write_str(if k == 0 {
                p.stressed_symbol()
            } else {
                p.symbol()
            })?;
        }
        Ok(())
    }
}

pub fn assonant_key(w: &PhonWord) -> AssonantKey {
    AssonantKey {
        vowels: w.syllables[w.stressed_syllable()..]
            .iter()
            .map(Syllable::peak_vowel)
            .collect(),
    }
}

pub fn consonant_key(w: &PhonWord) -> ConsonantKey {
    ConsonantKey {
        suffix: w.phonemes[w.stressed_vowel_offset()..].to_vec(),
    }
}

/// Right-to-left phoneme order, ties broken by spelling. This is the order a
/// printed rhyming dictionary lists its entries in.
pub fn reverse_phonetic_cmp(a: &PhonWord, b: &PhonWord) -> Ordering {
    a.phonemes
        .iter()
        .rev()
        .cmp(b.phonemes.iter().rev())
        .then_with(|| a.orthography.cmp(&b.orthography))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RhymeGroup {
    pub assonant: BTreeMap<AssonantKey, BTreeSet<String>>,
    pub consonant: BTreeMap<ConsonantKey, BTreeSet<String>>,
}

impl RhymeGroup {
    pub fn word_count(&self) -> usize {
        self.assonant.values().map(BTreeSet::len).sum()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RhymeDictionary {
    registry: BTreeMap<String, PhonWord>,
    groups: BTreeMap<StressClass, RhymeGroup>,
}

/// Index a list of analysed words. Orthographies must be unique.
pub fn build_index(lexicon: Vec<PhonWord>) -> Result<RhymeDictionary, IndexError> {
    let mut dict = RhymeDictionary::default();
    for w in lexicon {
        if dict.registry.contains_key(&w.orthography) {
            return Err(IndexError::Duplicate(w.orthography));
        }
        let group = dict.groups.entry(w.stress_class).or_default();
        group
            .assonant
            .entry(assonant_key(&w))
            .or_default()
            .insert(w.orthography.clone());
        group
            .consonant
            .entry(consonant_key(&w))
            .or_default()
            .insert(w.orthography.clone());
        dict.registry.insert(w.orthography.clone(), w);
    }
    Ok(dict)
}

impl RhymeDictionary {
    /// Analyse and index plain words.
    pub fn from_words<'a, I>(words: I, exceptions: &ExceptionLexicon) -> Result<Self, IndexError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let analysed = words
            .into_iter()
            .map(|w| PhonWord::analyze(w, exceptions))
            .collect::<Result<Vec<_>, _>>()?;
        build_index(analysed)
    }

    pub fn len(&self) -> usize {
        self.registry.len()
    }

    pub fn is_empty(&self) -> bool {
        self.registry.is_empty()
    }

    pub fn word(&self, w: &str) -> Option<&PhonWord> {
        self.registry.get(w)
    }

    pub fn words(&self) -> impl Iterator<Item = &PhonWord> {
        self.registry.values()
    }

    pub fn group(&self, class: StressClass) -> Option<&RhymeGroup> {
        self.groups.get(&class)
    }

    /// Word counts of the A, G and E groups.
    pub fn group_sizes(&self) -> [usize; 3] {
        StressClass::ALL.map(|c| self.group(c).map_or(0, RhymeGroup::word_count))
    }

    fn lookup(&self, query: &str) -> Result<&PhonWord, IndexError> {
        let key = normalize_word(query);
        self.registry.get(&key).ok_or(IndexError::UnknownWord(key))
    }

    pub fn stress_group(&self, query: &str) -> Result<StressClass, IndexError> {
        Ok(self.lookup(query)?.stress_class)
    }

    /// Members of the query's rhyme class, minus the query, in reverse-phonetic
    /// order.
    pub fn rhymes(&self, query: &str, kind: RhymeKind) -> Result<Vec<&PhonWord>, IndexError> {
        let w = self.lookup(query)?;
        let group = &self.groups[&w.stress_class];
        let members = match kind {
            RhymeKind::Assonant => &group.assonant[&assonant_key(w)],
            RhymeKind::Consonant => &group.consonant[&consonant_key(w)],
        };
        let mut out: Vec<&PhonWord> = members
            .iter()
            .filter(|m| **m != w.orthography)
            .map(|m| &self.registry[m])
            .collect();
        out.sort_by(|a, b| reverse_phonetic_cmp(a, b));
        Ok(out)
    }

    pub fn assonant_rhymes(&self, query: &str) -> Result<Vec<String>, IndexError> {
        self.rhyme_names(query, RhymeKind::Assonant)
    }

    pub fn consonant_rhymes(&self, query: &str) -> Result<Vec<String>, IndexError> {
        self.rhyme_names(query, RhymeKind::Consonant)
    }

    pub fn rhyme_names(&self, query: &str, kind: RhymeKind) -> Result<Vec<String>, IndexError> {
        Ok(self
            .rhymes(query, kind)?
            .into_iter()
            .map(|w| w.orthography.clone())
            .collect())
    }

    /// A word is dissonant when nothing else shares its consonant class.
    pub fn is_dissonant(&self, query: &str) -> Result<bool, IndexError> {
        Ok(self.rhymes(query, RhymeKind::Consonant)?.is_empty())
    }

    /// Text dump, one line per class:
    /// `<stress_class>\t<key>\t<members, comma-separated>`.
    /// Within each stress class assonant classes come first, then consonant
    /// classes, each sorted by key.
    pub fn export(&self) -> String {
        let mut out = String::new();
        for (class, group) in &self.groups {
            let mut line = |key: String, members: &BTreeSet<String>| {
                let mut ws: Vec<&PhonWord> = members.iter().map(|m| &self.registry[m]).collect();
                ws.sort_by(|a, b| reverse_phonetic_cmp(a, b));
                let names: Vec<&str> = ws.iter().map(|w| w.orthography.as_str()).collect();
                out.push_str(&format!("{}\t{}\t{}\n", class, key, names.join(",")));
            };
            for (key, members) in &group.assonant {
                line(key.to_string(), members);
            }
            for (key, members) in &group.consonant {
                line(key.to_string(), members);
            }
        }
        out
    }
}
