//! Loaders for the lexicon, stoplist, lemma dictionary and exception lexicon,
//! and the `key=value` experiment control file.
//!
//! All inputs are UTF-8. CRLF line endings are accepted; files are written
//! with LF. Loaders are strict: the first bad line aborts with its file and
//! line number.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use crate::defsim::{NormMode, SenseDefinition, SimilarityMeasure};
use crate::phonology::{normalize_word, ExceptionLexicon};

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },
}

impl LoadError {
    fn parse(source_name: &str, line: usize, message: impl Into<String>) -> Self {
        LoadError::Parse {
            source_name: source_name.to_string(),
            line,
            message: message.into(),
        }
    }

    pub fn is_io(&self) -> bool {
        matches!(self, LoadError::Io { .. })
    }
}

pub fn read_text(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), LoadError> {
    fs::write(path, text).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Lines with their 1-based numbers, CR stripped.
fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.strip_suffix('\r').unwrap_or(l)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconEntry {
    pub word: String,
    /// Sorted by `sense_index`. May be empty: such words rhyme but are never
    /// ranked.
    pub senses: Vec<SenseDefinition>,
}

/// Headwords with their sense definitions, in first-appearance order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: Vec<LexiconEntry>,
}

impl Lexicon {
    pub fn entries(&self) -> &[LexiconEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.word.as_str())
    }

    pub fn get(&self, word: &str) -> Option<&LexiconEntry> {
        self.entries.iter().find(|e| e.word == word)
    }

    pub fn sense_count(&self) -> usize {
        self.entries.iter().map(|e| e.senses.len()).sum()
    }

    /// Parse lexicon text. Each line is either
    /// `word<TAB>sense_index<TAB>definition` or a bare `word` declaring a
    /// headword without definitions. `#` lines and blank lines are skipped.
    pub fn parse(text: &str, source_name: &str) -> Result<Self, LoadError> {
        let mut order: Vec<String> = Vec::new();
        let mut senses: HashMap<String, BTreeMap<u32, SenseDefinition>> = HashMap::new();
        for (n, line) in numbered_lines(text) {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let word = normalize_word(fields[0]);
            if word.is_empty() {
                return Err(LoadError::parse(source_name, n, "empty headword"));
            }
            let slot = match senses.get_mut(&word) {
                Some(s) => s,
                None => {
                    order.push(word.clone());
                    senses.entry(word.clone()).or_default()
                }
            };
            match fields.len() {
                1 => {}
                3 => {
                    let index: u32 = fields[1]
                        .trim()
                        .parse()
                        .ok()
                        .filter(|&i| i >= 1)
                        .ok_or_else(|| {
                            LoadError::parse(
                                source_name,
                                n,
                                format!("sense index \"{}\" is not a positive integer", fields[1]),
                            )
                        })?;
                    let text = fields[2].trim();
                    if text.is_empty() {
                        return Err(LoadError::parse(source_name, n, "missing definition text"));
                    }
                    if slot.contains_key(&index) {
                        return Err(LoadError::parse(
                            source_name,
                            n,
                            format!("duplicate sense {index} for \"{word}\""),
                        ));
                    }
                    slot.insert(
                        index,
                        SenseDefinition {
                            word: word.clone(),
                            sense_index: index,
                            text: text.to_string(),
                        },
                    );
                }
                2 => {
                    return Err(LoadError::parse(source_name, n, "missing definition field"));
                }
                k => {
                    return Err(LoadError::parse(
                        source_name,
                        n,
                        format!("expected 3 tab-separated fields, found {k}"),
                    ))
                }
            }
        }
        let entries = order
            .into_iter()
            .map(|w| {
                let s = senses.remove(&w).unwrap_or_default();
                LexiconEntry {
                    word: w,
                    senses: s.into_values().collect(),
                }
            })
            .collect();
        Ok(Lexicon { entries })
    }

    /// The sample lexicon shipped with the crate.
    pub fn bundled() -> Self {
        Lexicon::parse(crate::data::SAMPLE_LEXICON, "<bundled lexicon>")
            .expect("bundled lexicon is valid")
    }
}

pub fn load_lexicon(path: &Path) -> Result<Lexicon, LoadError> {
    Lexicon::parse(&read_text(path)?, &path.display().to_string())
}

/// One word per line; blank lines and `#` comments ignored.
pub fn parse_stoplist(text: &str) -> HashSet<String> {
    numbered_lines(text)
        .map(|(_, l)| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_lowercase)
        .collect()
}

pub fn load_stoplist(path: &Path) -> Result<HashSet<String>, LoadError> {
    Ok(parse_stoplist(&read_text(path)?))
}

/// `surface<TAB>lemma` per line.
pub fn parse_lemmas(text: &str, source_name: &str) -> Result<HashMap<String, String>, LoadError> {
    let mut out = HashMap::new();
    for (n, line) in numbered_lines(text) {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let (surface, lemma) = line
            .split_once('\t')
            .map(|(a, b)| (a.trim(), b.trim()))
            .filter(|(a, b)| !a.is_empty() && !b.is_empty() && !b.contains('\t'))
            .ok_or_else(|| LoadError::parse(source_name, n, "expected surface<TAB>lemma"))?;
        if out
            .insert(surface.to_lowercase(), lemma.to_lowercase())
            .is_some()
        {
            return Err(LoadError::parse(
                source_name,
                n,
                format!("duplicate surface form \"{surface}\""),
            ));
        }
    }
    Ok(out)
}

pub fn load_lemmas(path: &Path) -> Result<HashMap<String, String>, LoadError> {
    parse_lemmas(&read_text(path)?, &path.display().to_string())
}

pub fn load_exceptions(path: &Path) -> Result<ExceptionLexicon, LoadError> {
    ExceptionLexicon::parse(&read_text(path)?)
        .map_err(|e| LoadError::parse(&path.display().to_string(), e.line, e.message))
}

/// Persisted experiment configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlFile {
    pub measure: SimilarityMeasure,
    /// Similarity threshold in [0, 1].
    pub seuil: f64,
    pub mode: NormMode,
    pub lexicon: PathBuf,
    pub cache: Option<PathBuf>,
}

const CONTROL_KEYS: [&str; 5] = ["measure", "seuil", "mode", "lexicon", "cache"];

impl ControlFile {
    /// Cosine with threshold 0 over lemmatized definitions.
    pub fn default_for(lexicon: impl Into<PathBuf>) -> Self {
        ControlFile {
            measure: SimilarityMeasure::Cosine,
            seuil: 0.0,
            mode: NormMode::Lemma,
            lexicon: lexicon.into(),
            cache: None,
        }
    }

    pub fn parse(text: &str, source_name: &str) -> Result<Self, LoadError> {
        let mut values: HashMap<&str, (usize, &str)> = HashMap::new();
        for (n, line) in numbered_lines(text) {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| LoadError::parse(source_name, n, "expected key=value"))?;
            let key = CONTROL_KEYS
                .into_iter()
                .find(|k| *k == key)
                .ok_or_else(|| {
                    LoadError::parse(source_name, n, format!("unknown key \"{key}\""))
                })?;
            if values.insert(key, (n, value)).is_some() {
                return Err(LoadError::parse(
                    source_name,
                    n,
                    format!("duplicate key \"{key}\""),
                ));
            }
        }
        let required = |key: &str| {
            values.get(key).copied().ok_or_else(|| {
                LoadError::parse(source_name, 0, format!("missing required key \"{key}\""))
            })
        };

        let (n, v) = required("measure")?;
        let measure = v
            .parse::<SimilarityMeasure>()
            .map_err(|e| LoadError::parse(source_name, n, e))?;
        let (n, v) = required("seuil")?;
        let seuil = v.parse::<f64>().map_err(|_| {
            LoadError::parse(source_name, n, format!("seuil \"{v}\" is not a number"))
        })?;
        if !(0.0..=1.0).contains(&seuil) {
            return Err(LoadError::parse(
                source_name,
                n,
                format!("seuil {seuil} outside [0, 1]"),
            ));
        }
        let (n, v) = required("mode")?;
        let mode = v
            .parse::<NormMode>()
            .map_err(|e| LoadError::parse(source_name, n, e))?;
        let (n, v) = required("lexicon")?;
        if v.is_empty() {
            return Err(LoadError::parse(source_name, n, "empty lexicon path"));
        }
        let lexicon = PathBuf::from(v);
        let cache = values
            .get("cache")
            .map(|(_, v)| *v)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from);
        Ok(ControlFile {
            measure,
            seuil,
            mode,
            lexicon,
            cache,
        })
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "measure={}\nseuil={}\nmode={}\nlexicon={}\n",
            self.measure,
            self.seuil,
            self.mode,
            self.lexicon.display()
        );
        if let Some(cache) = &self.cache {
            out.push_str(&format!("cache={}\n", cache.display()));
        }
        out
    }

    /// Resolve relative resource paths against `base` (normally the control
    /// file's directory).
    pub fn resolve_paths(&mut self, base: &Path) {
        if self.lexicon.is_relative() {
            self.lexicon = base.join(&self.lexicon);
        }
        if let Some(c) = self.cache.as_mut() {
            if c.is_relative() {
                *c = base.join(&*c);
            }
        }
    }
}

pub fn load_control(path: &Path) -> Result<ControlFile, LoadError> {
    ControlFile::parse(&read_text(path)?, &path.display().to_string())
}

pub fn save_control(path: &Path, control: &ControlFile) -> Result<(), LoadError> {
    write_text(path, &control.render())
}
