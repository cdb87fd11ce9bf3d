//! Spanish rhyming dictionary with semantic ranking.
//!
//! Words are transcribed into Mexican Spanish phonemes, syllabified and
//! stressed ([`phonology`]), then grouped into assonant and consonant rhyme
//! classes ([`rhyme_index`]). A query's rhymes are ordered by how close their
//! dictionary definitions are to the query's own ([`defsim`], [`ranker`]).

pub mod cli;
pub mod data;
pub mod defsim;
pub mod lexicon_io;
pub mod phonology;
pub mod questionnaire;
pub mod ranker;
pub mod rhyme_index;

pub use defsim::{NormMode, SimilarityMeasure};
pub use lexicon_io::{ControlFile, Lexicon};
pub use phonology::{ExceptionLexicon, PhonWord, StressClass};
pub use ranker::{rank_rhymes, RankConfig, RankedRhymeList, SimilarityCache};
pub use rhyme_index::{RhymeDictionary, RhymeKind};
