//! Rule-based grapheme-to-phoneme conversion for Mexican Spanish.

use super::exceptions::ExceptionLexicon;
use super::phoneme::Phoneme;
use super::PhonologyError;

/// A transcribed word: phonemes plus the position of the orthographically
/// accented vowel, which syllabification needs to detect hiatus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhonemeSequence {
    pub phonemes: Vec<Phoneme>,
    /// Index into `phonemes` of the vowel that carried an acute accent (or,
    /// for exception entries, the stressed nucleus peak).
    pub accented: Option<usize>,
}

impl PhonemeSequence {
    pub fn new(phonemes: Vec<Phoneme>) -> Self {
        PhonemeSequence {
            phonemes,
            accented: None,
        }
    }

    pub fn len(&self) -> usize {
        self.phonemes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phonemes.is_empty()
    }
}

/// Lowercase and fold combining acute/diaeresis marks into precomposed letters.
pub fn normalize_word(word: &str) -> String {
    let mut out = String::with_capacity(word.len());
    for c in word.trim().chars().flat_map(char::to_lowercase) {
        let composed = match (out.chars().last(), c) {
            (Some(base), '\u{301}') => acute(base),
            (Some('u'), '\u{308}') => Some('ü'),
            _ => None,
        };
        match composed {
            Some(ch) => {
                out.pop();
                out.push(ch);
            }
            None => out.push(c),
        }
    }
    out
}

fn acute(c: char) -> Option<char> {
    Some(match c {
        'a' => 'á',
        'e' => 'é',
        'i' => 'í',
        'o' => 'ó',
        'u' => 'ú',
        _ => return None,
    })
}

fn vowel_of(c: char) -> Option<(Phoneme, bool)> {
    Some(match c {
        'a' => (Phoneme::A, false),
        'e' => (Phoneme::E, false),
        'i' => (Phoneme::I, false),
        'o' => (Phoneme::O, false),
        'u' | 'ü' => (Phoneme::U, false),
        'á' => (Phoneme::A, true),
        'é' => (Phoneme::E, true),
        'í' => (Phoneme::I, true),
        'ó' => (Phoneme::O, true),
        'ú' => (Phoneme::U, true),
        _ => return None,
    })
}

fn is_front(c: Option<&char>) -> bool {
    matches!(c, Some('e' | 'é' | 'i' | 'í'))
}

/// Transcribe a word, consulting the exception lexicon first.
pub fn transcribe(
    word: &str,
    exceptions: &ExceptionLexicon,
) -> Result<PhonemeSequence, PhonologyError> {
    let word = normalize_word(word);
    if word.is_empty() {
        return Err(PhonologyError::Empty);
    }
    if let Some(entry) = exceptions.get(&word) {
        return Ok(entry.phoneme_sequence());
    }
    transcribe_rules(&word)
}

/// Apply the orthographic rules only. `word` must already be normalized.
pub(crate) fn transcribe_rules(word: &str) -> Result<PhonemeSequence, PhonologyError> {
    use Phoneme::*;

    let chars: Vec<char> = word.chars().collect();
    let mut out = Vec::with_capacity(chars.len() + 1);
    let mut accented = None;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let next = chars.get(i + 1);
        if let Some((v, acc)) = vowel_of(c) {
            if acc {
                if accented.is_some() {
                    return Err(PhonologyError::MultipleAccents {
                        word: word.to_string(),
                    });
                }
                accented = Some(out.len());
            }
            out.push(v);
            i += 1;
            continue;
        }
        let mut step = 1;
        match c {
            'b' | 'v' => out.push(B),
            'c' => match next {
                Some('h') => {
                    out.push(Ch);
                    step = 2;
                }
                n if is_front(n) => out.push(S),
                _ => out.push(K),
            },
            'd' => out.push(D),
            'f' => out.push(F),
            'g' => {
                if is_front(next) {
                    out.push(X);
                } else if next == Some(&'u') && is_front(chars.get(i + 2)) {
                    // gue, gui: the u is silent
                    out.push(G);
                    step = 2;
                } else {
                    out.push(G);
                }
            }
            'h' => {}
            'j' => out.push(X),
            'k' => out.push(K),
            'l' => {
                if next == Some(&'l') {
                    out.push(Y);
                    step = 2;
                } else {
                    out.push(L);
                }
            }
            'm' => out.push(M),
            'n' => out.push(N),
            'ñ' => out.push(Ny),
            'p' => out.push(P),
            'q' => {
                out.push(K);
                if next == Some(&'u') {
                    step = 2;
                }
            }
            'r' => {
                if next == Some(&'r') {
                    out.push(Trill);
                    step = 2;
                } else if i == 0 || matches!(chars[i - 1], 'l' | 'n' | 's') {
                    out.push(Trill);
                } else {
                    out.push(Tap);
                }
            }
            's' => out.push(S),
            't' => out.push(T),
            'w' => out.push(W),
            'x' => {
                out.push(K);
                out.push(S);
            }
            'y' => {
                // vocalic when word-final or before a consonant (rey, y)
                let vocalic = match next {
                    None => true,
                    Some(n) => vowel_of(*n).is_none() && *n != 'h',
                };
                out.push(if vocalic { I } else { Y });
            }
            'z' => out.push(S),
            other => {
                return Err(PhonologyError::Untranscribable {
                    word: word.to_string(),
                    ch: other,
                })
            }
        }
        i += step;
    }
    if out.is_empty() {
        return Err(PhonologyError::Empty);
    }
    Ok(PhonemeSequence {
        phonemes: out,
        accented,
    })
}
