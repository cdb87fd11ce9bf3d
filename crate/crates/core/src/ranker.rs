//! Rhyme lists ordered by definition similarity to the query.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::RwLock;

use crate::defsim::{word_similarity, NormMode, SenseVectors, SimilarityMeasure};
use crate::lexicon_io::{read_text, write_text, LoadError};
use crate::rhyme_index::{IndexError, RhymeDictionary, RhymeKind};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RankError {
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error("no definitions for \"{0}\"")]
    NoDefinitions(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankConfig {
    pub measure: SimilarityMeasure,
    /// Entries scoring below this are dropped.
    pub threshold: f64,
    pub mode: NormMode,
    pub limit: Option<usize>,
}

impl RankConfig {
    pub fn new(
        measure: SimilarityMeasure,
        threshold: f64,
        mode: NormMode,
        limit: Option<usize>,
    ) -> Result<Self, RankError> {
        let cfg = RankConfig {
            measure,
            threshold,
            mode,
            limit,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), RankError> {
        if !(0.0..=1.0).contains(&self.threshold) {
            return Err(RankError::InvalidConfig(format!(
                "threshold {} outside [0, 1]",
                self.threshold
            )));
        }
        if self.limit == Some(0) {
            return Err(RankError::InvalidConfig("limit must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankedEntry {
    pub word: String,
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankedRhymeList {
    pub query: String,
    pub kind: RhymeKind,
    pub entries: Vec<RankedEntry>,
    /// Rhymes left out because they have no definitions.
    pub skipped_undefined: usize,
}

impl RankedRhymeList {
    pub fn words(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.word.as_str()).collect()
    }

    /// `word<TAB>score` lines, score to four decimals.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = writeln!(out, "{}\t{:.4}", e.word, e.score);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct CacheKey {
    measure: SimilarityMeasure,
    mode: NormMode,
    first: String,
    second: String,
}

impl CacheKey {
    fn new(measure: SimilarityMeasure, mode: NormMode, w1: &str, w2: &str) -> Self {
        let (first, second) = if w1 <= w2 { (w1, w2) } else { (w2, w1) };
        CacheKey {
            measure,
            mode,
            first: first.to_string(),
            second: second.to_string(),
        }
    }
}

/// Pairwise word similarities, keyed by unordered pair. Reads may run
/// concurrently; writes are serialized.
#[derive(Debug, Default)]
pub struct SimilarityCache {
    scores: RwLock<HashMap<CacheKey, f64>>,
    computations: AtomicUsize,
}

impl SimilarityCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.scores.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Number of times a score had to be computed (cache misses).
    pub fn computations(&self) -> usize {
        self.computations.load(Ordering::Relaxed)
    }

    pub fn get(
        &self,
        measure: SimilarityMeasure,
        mode: NormMode,
        w1: &str,
        w2: &str,
    ) -> Option<f64> {
        let key = CacheKey::new(measure, mode, w1, w2);
        self.scores.read().expect("cache lock").get(&key).copied()
    }

    pub fn insert(
        &self,
        measure: SimilarityMeasure,
        mode: NormMode,
        w1: &str,
        w2: &str,
        score: f64,
    ) {
        let key = CacheKey::new(measure, mode, w1, w2);
        self.scores.write().expect("cache lock").insert(key, score);
    }

    /// Entries for one (measure, mode) as a cache file: a
    /// `measure<TAB>mode` header, then `w1<TAB>w2<TAB>score` lines with
    /// `w1 < w2` and nine decimals.
    pub fn render(&self, measure: SimilarityMeasure, mode: NormMode) -> String {
        let scores = self.scores.read().expect("cache lock");
        let mut rows: Vec<(&str, &str, f64)> = scores
            .iter()
            .filter(|(k, _)| k.measure == measure && k.mode == mode)
            .map(|(k, &s)| (k.first.as_str(), k.second.as_str(), s))
            .collect();
        rows.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let mut out = format!("{measure}\t{mode}\n");
        for (a, b, s) in rows {
            let _ = writeln!(out, "{a}\t{b}\t{s:.9}");
        }
        out
    }

    /// Merge entries from cache-file text, returning the file's
    /// (measure, mode).
    pub fn merge_text(
        &self,
        text: &str,
        source_name: &str,
    ) -> Result<(SimilarityMeasure, NormMode), LoadError> {
        let err = |line: usize, message: String| LoadError::Parse {
            source_name: source_name.to_string(),
            line,
            message,
        };
        let mut lines = text
            .lines()
            .map(|l| l.strip_suffix('\r').unwrap_or(l))
            .enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| err(1, "missing header".into()))?;
        let (measure, mode) = header
            .split_once('\t')
            .ok_or_else(|| err(1, "header must be measure<TAB>mode".into()))?;
        let measure: SimilarityMeasure = measure.parse().map_err(|e| err(1, e))?;
        let mode: NormMode = mode.parse().map_err(|e| err(1, e))?;
        let mut parsed = Vec::new();
        for (n, line) in lines {
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let [a, b, s] = fields[..] else {
                return Err(err(n + 1, "expected w1<TAB>w2<TAB>score".into()));
            };
            if a >= b {
                return Err(err(n + 1, format!("pair not in order: \"{a}\" >= \"{b}\"")));
            }
            let score: f64 = s
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite())
                .ok_or_else(|| err(n + 1, format!("bad score \"{s}\"")))?;
            parsed.push((a, b, score));
        }
        for (a, b, s) in parsed {
            self.insert(measure, mode, a, b, s);
        }
        Ok((measure, mode))
    }

    pub fn load(&self, path: &Path) -> Result<(SimilarityMeasure, NormMode), LoadError> {
        self.merge_text(&read_text(path)?, &path.display().to_string())
    }

    pub fn save(
        &self,
        path: &Path,
        measure: SimilarityMeasure,
        mode: NormMode,
    ) -> Result<(), LoadError> {
        write_text(path, &self.render(measure, mode))
    }
}

/// Return the stored score for the pair, or compute, store and return it.
pub fn cached_similarity<F>(
    cache: &SimilarityCache,
    measure: SimilarityMeasure,
    mode: NormMode,
    w1: &str,
    w2: &str,
    compute: F,
) -> f64
where
    F: FnOnce() -> f64,
{
    if let Some(s) = cache.get(measure, mode, w1, w2) {
        return s;
    }
    cache.computations.fetch_add(1, Ordering::Relaxed);
    let s = compute();
    cache.insert(measure, mode, w1, w2, s);
    s
}

/// Scores are snapped to 1e-9 so values reloaded from a cache file compare
/// equal to freshly computed ones.
fn quantize(score: f64) -> f64 {
    (score * 1e9).round() / 1e9
}

/// Rank the query's rhymes of the given kind by definition similarity.
pub fn rank_rhymes(
    dict: &RhymeDictionary,
    defs: &SenseVectors,
    query: &str,
    kind: RhymeKind,
    cfg: &RankConfig,
    cache: Option<&SimilarityCache>,
) -> Result<RankedRhymeList, RankError> {
    cfg.validate()?;
    if defs.mode != cfg.mode {
        return Err(RankError::InvalidConfig(format!(
            "definition vectors built in mode {} but ranking asked for {}",
            defs.mode, cfg.mode
        )));
    }
    let candidates = dict.rhymes(query, kind)?;
    let query = dict
        .word(&crate::phonology::normalize_word(query))
        .map(|w| w.orthography.clone())
        .unwrap_or_default();
    let query_senses = defs
        .get(&query)
        .filter(|s| !s.is_empty())
        .ok_or_else(|| RankError::NoDefinitions(query.clone()))?;

    let mut skipped = 0;
    let mut entries = Vec::with_capacity(candidates.len());
    for cand in candidates {
        let word = cand.orthography.as_str();
        let Some(senses) = defs.get(word).filter(|s| !s.is_empty()) else {
            skipped += 1;
            continue;
        };
        let compute = || {
            quantize(
                word_similarity(cfg.measure, query_senses, senses).expect("both sides defined"),
            )
        };
        let score = match cache {
            Some(c) => cached_similarity(c, cfg.measure, cfg.mode, &query, word, compute),
            None => compute(),
        };
        if score >= cfg.threshold {
            entries.push(RankedEntry {
                word: word.to_string(),
                score,
            });
        }
    }
    entries.sort_by(|a, b| {
        b.score
            .total_cmp(&a.score)
            .then_with(|| a.word.cmp(&b.word))
    });
    if let Some(limit) = cfg.limit {
        entries.truncate(limit);
    }
    Ok(RankedRhymeList {
        query,
        kind,
        entries,
        skipped_undefined: skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defsim::{vectorize, DefinitionVector};
    use crate::phonology::ExceptionLexicon;

    fn v(terms: &[&str]) -> DefinitionVector {
        vectorize(terms.iter().map(|s| s.to_string()).collect())
    }

    fn toy() -> (RhymeDictionary, SenseVectors) {
        let dict = RhymeDictionary::from_words(
            [
                "tequila", "sangrita", "bebida", "pila", "gorila", "cantina", "púrpura", "axila",
            ],
            &ExceptionLexicon::default(),
        )
        .unwrap();
        let mut defs = SenseVectors::empty(NormMode::Lemma);
        defs.insert(
            "tequila",
            vec![v(&["bebida", "alcohólico", "agave", "destilar"])],
        );
        defs.insert(
            "sangrita",
            vec![v(&["bebida", "naranja", "chile", "tequila"])],
        );
        defs.insert("bebida", vec![v(&["líquido", "beber", "alcohólico"])]);
        defs.insert(
            "cantina",
            vec![v(&["lugar", "servir", "bebida", "alcohólico"])],
        );
        defs.insert("pila", vec![v(&["montón", "cosa"])]);
        defs.insert("gorila", vec![v(&["mono", "grande", "selva"])]);
        defs.insert("púrpura", vec![v(&["color", "rojo"])]);
        (dict, defs)
    }

    fn cfg(threshold: f64, limit: Option<usize>) -> RankConfig {
        RankConfig::new(SimilarityMeasure::Cosine, threshold, NormMode::Lemma, limit).unwrap()
    }

    #[test]
    fn drink_rhymes_first() {
        let (dict, defs) = toy();
        let list = rank_rhymes(
            &dict,
            &defs,
            "tequila",
            RhymeKind::Assonant,
            &cfg(0.0, None),
            None,
        )
        .unwrap();
        // cosines: cantina 2/4 = 0.5, bebida 1/sqrt(12), sangrita 1/4, others 0
        assert_eq!(
            list.words(),
            vec!["cantina", "bebida", "sangrita", "gorila", "pila"]
        );
        assert_eq!(list.entries[0].score, 0.5);
        assert!((list.entries[1].score - 1.0 / 12f64.sqrt()).abs() < 1e-9);
        assert_eq!(list.skipped_undefined, 1); // axila
    }

    #[test]
    fn threshold_and_limit() {
        let (dict, defs) = toy();
        let list = rank_rhymes(
            &dict,
            &defs,
            "tequila",
            RhymeKind::Assonant,
            &cfg(0.26, None),
            None,
        )
        .unwrap();
        assert_eq!(list.words(), vec!["cantina", "bebida"]);
        let list = rank_rhymes(
            &dict,
            &defs,
            "tequila",
            RhymeKind::Assonant,
            &cfg(0.0, Some(1)),
            None,
        )
        .unwrap();
        assert_eq!(list.words(), vec!["cantina"]);
    }

    #[test]
    fn errors() {
        let (dict, defs) = toy();
        let c = cfg(0.0, None);
        assert!(matches!(
            rank_rhymes(&dict, &defs, "mezcal", RhymeKind::Assonant, &c, None),
            Err(RankError::Index(IndexError::UnknownWord(_)))
        ));
        assert_eq!(
            rank_rhymes(&dict, &defs, "axila", RhymeKind::Consonant, &c, None),
            Err(RankError::NoDefinitions("axila".into()))
        );
        assert!(RankConfig::new(SimilarityMeasure::Cosine, 1.5, NormMode::Lemma, None).is_err());
        assert!(RankConfig::new(SimilarityMeasure::Cosine, 0.5, NormMode::Lemma, Some(0)).is_err());
    }

    #[test]
    fn dissonant_query_gives_empty_list() {
        let (dict, defs) = toy();
        let list = rank_rhymes(
            &dict,
            &defs,
            "púrpura",
            RhymeKind::Consonant,
            &cfg(0.0, None),
            None,
        )
        .unwrap();
        assert!(list.entries.is_empty());
    }

    #[test]
    fn cache_hits_and_unordered_keys() {
        let (dict, defs) = toy();
        let cache = SimilarityCache::new();
        let c = cfg(0.0, None);
        let first = rank_rhymes(
            &dict,
            &defs,
            "tequila",
            RhymeKind::Assonant,
            &c,
            Some(&cache),
        )
        .unwrap();
        // five defined candidates, five entries
        assert_eq!(cache.len(), 5);
        assert_eq!(cache.computations(), 5);
        let second = rank_rhymes(
            &dict,
            &defs,
            "tequila",
            RhymeKind::Assonant,
            &c,
            Some(&cache),
        )
        .unwrap();
        assert_eq!(cache.computations(), 5);
        assert_eq!(first, second);

        let before = cache.len();
        let s = cached_similarity(
            &cache,
            c.measure,
            c.mode,
            "cantina",
            "tequila",
            || unreachable!(),
        );
        assert_eq!(s, 0.5);
        assert_eq!(cache.len(), before);
    }

    #[test]
    fn cache_file_round_trip() {
        let cache = SimilarityCache::new();
        let m = SimilarityMeasure::Cosine;
        cache.insert(m, NormMode::Lemma, "b", "a", 0.123456789);
        cache.insert(SimilarityMeasure::Dice, NormMode::Lemma, "a", "b", 0.5);
        let text = cache.render(m, NormMode::Lemma);
        assert_eq!(text, "cosine\tlemma\na\tb\t0.123456789\n");
        let back = SimilarityCache::new();
        assert_eq!(back.merge_text(&text, "c").unwrap(), (m, NormMode::Lemma));
        assert_eq!(back.get(m, NormMode::Lemma, "a", "b"), Some(0.123456789));
        assert!(back.merge_text("cosine\tlemma\nb\ta\t0.1\n", "c").is_err());
        assert!(back.merge_text("cosine lemma\n", "c").is_err());
    }
}
