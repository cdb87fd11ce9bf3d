//! Rhyme-preference questionnaires.
//!
//! Each item shows a query word and three rhyme sets in shuffled order: the
//! top-ranked consonant rhymes, the top-ranked purely assonant rhymes (those
//! outside the query's consonant class), and an unranked baseline taken from
//! the rest of the consonant class in printed-dictionary (reverse-phonetic)
//! order. The three sets never share a word. Which set is which goes to a
//! separate answer key.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::defsim::SenseVectors;
use crate::ranker::{rank_rhymes, RankConfig, RankError, SimilarityCache};
use crate::rhyme_index::{RhymeDictionary, RhymeKind};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuestionnaireError {
    #[error("\"{0}\" is dissonant (no consonant rhymes)")]
    Dissonant(String),
    #[error("\"{word}\" has no words left for the {provenance} option")]
    EmptyOption {
        word: String,
        provenance: Provenance,
    },
    #[error("option size k must be at least 1")]
    ZeroK,
    #[error(transparent)]
    Rank(#[from] RankError),
    #[error("answer key line {line}: {message}")]
    AnswerKey { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    RankedConsonant,
    RankedAssonant,
    Baseline,
}

impl Provenance {
    pub const ALL: [Provenance; 3] = [
        Provenance::RankedConsonant,
        Provenance::RankedAssonant,
        Provenance::Baseline,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Provenance::RankedConsonant => "ranked-consonant",
            Provenance::RankedAssonant => "ranked-assonant",
            Provenance::Baseline => "baseline",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Provenance::ALL.into_iter().find(|p| p.name() == s)
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub const OPTION_LETTERS: [char; 3] = ['a', 'b', 'c'];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuestionItem {
    pub query: String,
    /// Options in display order (a, b, c).
    pub options: [Vec<String>; 3],
    /// Source of each displayed option.
    pub provenance: [Provenance; 3],
}

impl QuestionItem {
    pub fn option_for(&self, p: Provenance) -> &[String] {
        let k = self
            .provenance
            .iter()
            .position(|&q| q == p)
            .expect("bijection");
        &self.options[k]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Questionnaire {
    pub seed: u64,
    pub items: Vec<QuestionItem>,
    /// Options that came out shorter than requested.
    pub warnings: Vec<String>,
}

/// The three unshuffled option sets for one query.
pub fn option_sets(
    dict: &RhymeDictionary,
    defs: &SenseVectors,
    query: &str,
    k: usize,
    cfg: &RankConfig,
    cache: Option<&SimilarityCache>,
) -> Result<[Vec<String>; 3], QuestionnaireError> {
    if k == 0 {
        return Err(QuestionnaireError::ZeroK);
    }
    let consonant_class = dict.consonant_rhymes(query).map_err(RankError::from)?;
    if consonant_class.is_empty() {
        return Err(QuestionnaireError::Dissonant(query.to_string()));
    }
    let unlimited = RankConfig {
        limit: None,
        ..*cfg
    };

    // The consonant class feeds both the ranked option and the baseline; a
    // class smaller than 2k is split so the baseline keeps its share.
    let ranked_share = k.min(consonant_class.len().div_ceil(2));
    let ranked_consonant: Vec<String> =
        rank_rhymes(dict, defs, query, RhymeKind::Consonant, &unlimited, cache)?
            .entries
            .into_iter()
            .take(ranked_share)
            .map(|e| e.word)
            .collect();

    let in_class: HashSet<&str> = consonant_class.iter().map(String::as_str).collect();
    let ranked_assonant: Vec<String> =
        rank_rhymes(dict, defs, query, RhymeKind::Assonant, &unlimited, cache)?
            .entries
            .into_iter()
            .filter(|e| !in_class.contains(e.word.as_str()))
            .take(k)
            .map(|e| e.word)
            .collect();

    let taken: HashSet<&str> = ranked_consonant.iter().map(String::as_str).collect();
    let baseline: Vec<String> = consonant_class
        .iter()
        .filter(|w| !taken.contains(w.as_str()))
        .take(k)
        .cloned()
        .collect();

    let sets = [ranked_consonant, ranked_assonant, baseline];
    for (set, p) in sets.iter().zip(Provenance::ALL) {
        if set.is_empty() {
            return Err(QuestionnaireError::EmptyOption {
                word: query.to_string(),
                provenance: p,
            });
        }
    }
    Ok(sets)
}

/// Build a questionnaire; option order per item is drawn from `seed`.
pub fn build_questionnaire(
    dict: &RhymeDictionary,
    defs: &SenseVectors,
    words: &[String],
    k: usize,
    seed: u64,
    cfg: &RankConfig,
    cache: Option<&SimilarityCache>,
) -> Result<Questionnaire, QuestionnaireError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut items = Vec::with_capacity(words.len());
    let mut warnings = Vec::new();
    for word in words {
        let query = crate::phonology::normalize_word(word);
        let sets = option_sets(dict, defs, &query, k, cfg, cache)?;
        for (set, p) in sets.iter().zip(Provenance::ALL) {
            if set.len() < k {
                warnings.push(format!(
                    "\"{query}\": {p} option has {} of {k} words",
                    set.len()
                ));
            }
        }
        let mut order = [0usize, 1, 2];
        order.shuffle(&mut rng);
        let [s0, s1, s2] = sets;
        let mut sets = [Some(s0), Some(s1), Some(s2)];
        let options = order.map(|i| sets[i].take().expect("permutation"));
        let provenance = order.map(|i| Provenance::ALL[i]);
        items.push(QuestionItem {
            query,
            options,
            provenance,
        });
    }
    Ok(Questionnaire {
        seed,
        items,
        warnings,
    })
}

impl Questionnaire {
    /// The document shown to respondents.
    pub fn render(&self) -> String {
        let mut out = format!("# seed={}\n", self.seed);
        for (n, item) in self.items.iter().enumerate() {
            let _ = writeln!(
                out,
                "\n{}) ¿Qué conjunto de rimas se asocia mejor con la palabra «{}»?",
                n + 1,
                item.query
            );
            for (letter, opt) in OPTION_LETTERS.iter().zip(&item.options) {
                let _ = writeln!(out, "{letter}) {}", opt.join(", "));
            }
        }
        out
    }

    /// `word<TAB>letter<TAB>provenance` per option.
    pub fn render_answer_key(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            for (letter, p) in OPTION_LETTERS.iter().zip(item.provenance) {
                let _ = writeln!(out, "{}\t{letter}\t{p}", item.query);
            }
        }
        out
    }
}

pub fn parse_answer_key(text: &str) -> Result<Vec<(String, char, Provenance)>, QuestionnaireError> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.strip_suffix('\r').unwrap_or(line);
        if line.is_empty() {
            continue;
        }
        let err = |message: &str| QuestionnaireError::AnswerKey {
            line: n + 1,
            message: message.to_string(),
        };
        let fields: Vec<&str> = line.split('\t').collect();
        let [word, letter, prov] = fields[..] else {
            return Err(err("expected word<TAB>letter<TAB>provenance"));
        };
        let letter = match letter {
            "a" => 'a',
            "b" => 'b',
            "c" => 'c',
            _ => return Err(err("option letter must be a, b or c")),
        };
        let prov = Provenance::parse(prov).ok_or_else(|| err("unknown provenance"))?;
        out.push((word.to_string(), letter, prov));
    }
    Ok(out)
}
