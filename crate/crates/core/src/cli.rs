//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for domain errors (unknown word, malformed
//! input, dissonant questionnaire word), 2 for I/O failures.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::defsim::{NormMode, Normalizer, SenseVectors, SimilarityMeasure};
use crate::lexicon_io::{self, ControlFile, Lexicon, LoadError};
use crate::phonology::{ExceptionLexicon, PhonWord, PhonologyError};
use crate::questionnaire::{build_questionnaire, QuestionnaireError};
use crate::ranker::{rank_rhymes, RankConfig, RankError, SimilarityCache};
use crate::rhyme_index::{assonant_key, consonant_key, IndexError, RhymeDictionary, RhymeKind};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Io(_) => 2,
        }
    }
}

impl From<LoadError> for CliError {
    fn from(e: LoadError) -> Self {
        if e.is_io() {
            CliError::Io(e.to_string())
        } else {
            CliError::Domain(e.to_string())
        }
    }
}

macro_rules! domain_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain(e.to_string())
            }
        }
    )*};
}

domain_error!(IndexError, RankError, QuestionnaireError, PhonologyError);

fn io_err(e: std::io::Error) -> CliError {
    CliError::Io(e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "rimas",
    version,
    about = "Spanish rhyming dictionary ranked by definition similarity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Transcribe a lexicon, build the rhyme index and write its dump.
    Build {
        /// Lexicon file (word<TAB>sense<TAB>definition); bundled sample if omitted.
        #[arg(long)]
        lexicon: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        exceptions: Option<PathBuf>,
    },
    /// Print a query's rhymes ranked by definition similarity.
    Query {
        word: String,
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, value_enum, default_value_t = KindArg::Consonant)]
        kind: KindArg,
        /// Maximum number of rhymes to print.
        #[arg(long, default_value_t = 5)]
        k: usize,
    },
    /// Show transcription, stress class and rhyme keys of words.
    Transcribe {
        #[arg(required = true)]
        words: Vec<String>,
        #[arg(long)]
        exceptions: Option<PathBuf>,
    },
    /// Generate a three-option rhyme questionnaire and its answer key.
    Questionnaire {
        /// Query words; the bundled ten-word list if none are given.
        words: Vec<String>,
        /// File with one query word per line.
        #[arg(long)]
        words_file: Option<PathBuf>,
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Questionnaire document; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Answer key (word<TAB>letter<TAB>provenance).
        #[arg(long)]
        key: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Assonant,
    Consonant,
}

impl From<KindArg> for RhymeKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Assonant => RhymeKind::Assonant,
            KindArg::Consonant => RhymeKind::Consonant,
        }
    }
}

/// Ranking configuration: a control file plus per-run overrides.
#[derive(Debug, Clone, Default, Args)]
pub struct RankArgs {
    #[arg(long)]
    pub control: Option<PathBuf>,
    /// Lexicon file, overriding the control file.
    #[arg(long)]
    pub lexicon: Option<PathBuf>,
    #[arg(long)]
    pub measure: Option<SimilarityMeasure>,
    #[arg(long)]
    pub seuil: Option<f64>,
    #[arg(long)]
    pub mode: Option<NormMode>,
    /// Similarity cache file, read if present and rewritten after the run.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    #[arg(long)]
    pub exceptions: Option<PathBuf>,
    #[arg(long)]
    pub stoplist: Option<PathBuf>,
    #[arg(long)]
    pub lemmas: Option<PathBuf>,
}

fn load_exceptions(path: Option<&Path>) -> Result<ExceptionLexicon, CliError> {
    Ok(match path {
        Some(p) => lexicon_io::load_exceptions(p)?,
        None => ExceptionLexicon::bundled(),
    })
}

fn load_lexicon(path: Option<&Path>) -> Result<Lexicon, CliError> {
    Ok(match path {
        Some(p) => lexicon_io::load_lexicon(p)?,
        None => Lexicon::bundled(),
    })
}

fn build_dictionary(
    lexicon: &Lexicon,
    exceptions: &ExceptionLexicon,
) -> Result<RhymeDictionary, CliError> {
    Ok(RhymeDictionary::from_words(lexicon.words(), exceptions)?)
}

/// Everything a ranking command needs, loaded once.
pub struct Session {
    pub dict: RhymeDictionary,
    pub defs: SenseVectors,
    pub config: RankConfig,
    pub cache: SimilarityCache,
    pub cache_path: Option<PathBuf>,
}

impl Session {
    pub fn load(args: &RankArgs) -> Result<Self, CliError> {
        let mut control = match &args.control {
            Some(path) => {
                let mut c = lexicon_io::load_control(path)?;
                c.resolve_paths(path.parent().unwrap_or(Path::new(".")));
                Some(c)
            }
            None => None,
        };
        let lexicon_path = args
            .lexicon
            .clone()
            .or_else(|| control.as_ref().map(|c| c.lexicon.clone()));
        let base = control
            .take()
            .unwrap_or_else(|| ControlFile::default_for(lexicon_path.clone().unwrap_or_default()));
        let config = RankConfig::new(
            args.measure.unwrap_or(base.measure),
            args.seuil.unwrap_or(base.seuil),
            args.mode.unwrap_or(base.mode),
            None,
        )?;
        let cache_path = args.cache.clone().or(base.cache);

        let exceptions = load_exceptions(args.exceptions.as_deref())?;
        let stoplist = match &args.stoplist {
            Some(p) => lexicon_io::load_stoplist(p)?,
            None => lexicon_io::parse_stoplist(crate::data::STOPLIST),
        };
        let lemmas = match &args.lemmas {
            Some(p) => lexicon_io::load_lemmas(p)?,
            None => lexicon_io::parse_lemmas(crate::data::LEMMAS, "<bundled lemmas>")?,
        };
        let normalizer = Normalizer::new(stoplist, lemmas);
        let lexicon = load_lexicon(lexicon_path.as_deref())?;
        let dict = build_dictionary(&lexicon, &exceptions)?;
        let defs = SenseVectors::build(&lexicon, &normalizer, config.mode);

        let cache = SimilarityCache::new();
        if let Some(path) = cache_path.as_deref().filter(|p| p.exists()) {
            let scratch = SimilarityCache::new();
            let (m, mode) = scratch.load(path)?;
            if (m, mode) == (config.measure, config.mode) {
                cache.load(path)?;
            } else {
                eprintln!(
                    "warning: cache {} holds {m}/{mode} scores, starting fresh for {}/{}",
                    path.display(),
                    config.measure,
                    config.mode
                );
            }
        }
        Ok(Session {
            dict,
            defs,
            config,
            cache,
            cache_path,
        })
    }

    fn cache(&self) -> Option<&SimilarityCache> {
        self.cache_path.as_ref().map(|_| &self.cache)
    }

    fn save_cache(&self) -> Result<(), CliError> {
        if let Some(path) = &self.cache_path {
            self.cache
                .save(path, self.config.measure, self.config.mode)?;
        }
        Ok(())
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Build {
            lexicon,
            out: out_path,
            exceptions,
        } => cmd_build(lexicon.as_deref(), exceptions.as_deref(), &out_path, out),
        Command::Query {
            word,
            rank,
            kind,
            k,
        } => cmd_query(&rank, &word, kind.into(), k, out),
        Command::Transcribe { words, exceptions } => {
            cmd_transcribe(&words, exceptions.as_deref(), out)
        }
        Command::Questionnaire {
            words,
            words_file,
            rank,
            k,
            seed,
            out: out_path,
            key,
        } => {
            let mut words = words;
            if let Some(p) = &words_file {
                words.extend(parse_word_list(&lexicon_io::read_text(p)?));
            }
            if words.is_empty() {
                words = parse_word_list(crate::data::QUESTIONNAIRE_WORDS);
            }
            cmd_questionnaire(&rank, &words, k, seed, out_path.as_deref(), &key, out)
        }
    }
}

fn parse_word_list(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

pub fn cmd_build(
    lexicon: Option<&Path>,
    exceptions: Option<&Path>,
    out_path: &Path,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let exceptions = load_exceptions(exceptions)?;
    let lexicon = load_lexicon(lexicon)?;
    let dict = build_dictionary(&lexicon, &exceptions)?;
    lexicon_io::write_text(out_path, &dict.export())?;
    for (class, n) in crate::phonology::StressClass::ALL
        .iter()
        .zip(dict.group_sizes())
    {
        writeln!(out, "{}\t{}\t{}", class.letter(), class, n).map_err(io_err)?;
    }
    Ok(())
}

pub fn cmd_query(
    args: &RankArgs,
    word: &str,
    kind: RhymeKind,
    k: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let session = Session::load(args)?;
    let mut list = rank_rhymes(
        &session.dict,
        &session.defs,
        word,
        kind,
        &session.config,
        session.cache(),
    )?;
    list.entries.truncate(k);
    out.write_all(list.render().as_bytes()).map_err(io_err)?;
    session.save_cache()
}

pub fn cmd_transcribe(
    words: &[String],
    exceptions: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let exceptions = load_exceptions(exceptions)?;
    for w in words {
        let pw = PhonWord::analyze(w, &exceptions)?;
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            pw.orthography,
            pw.transcription(),
            pw.stress_class,
            assonant_key(&pw),
            consonant_key(&pw)
        )
        .map_err(io_err)?;
    }
    Ok(())
}

pub fn cmd_questionnaire(
    args: &RankArgs,
    words: &[String],
    k: usize,
    seed: u64,
    out_path: Option<&Path>,
    key_path: &Path,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let session = Session::load(args)?;
    let q = build_questionnaire(
        &session.dict,
        &session.defs,
        words,
        k,
        seed,
        &session.config,
        session.cache(),
    )?;
    for w in &q.warnings {
        eprintln!("warning: {w}");
    }
    match out_path {
        Some(p) => lexicon_io::write_text(p, &q.render())?,
        None => out.write_all(q.render().as_bytes()).map_err(io_err)?,
    }
    lexicon_io::write_text(key_path, &q.render_answer_key())?;
    session.save_cache()
}
