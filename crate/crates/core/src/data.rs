//! Resource files compiled into the crate.

pub const SAMPLE_LEXICON: &str = include_str!("../data/sample_lexicon.tsv");
pub const EXCEPTIONS: &str = include_str!("../data/exceptions.tsv");
pub const STOPLIST: &str = include_str!("../data/stoplist.txt");
pub const LEMMAS: &str = include_str!("../data/lemmas.tsv");
pub const QUESTIONNAIRE_WORDS: &str = include_str!("../data/questionnaire_words.txt");
