//! Spanish orthography to stress-marked, syllabified phonemes.

pub mod exceptions;
pub mod phoneme;
pub mod syllable;
pub mod transcribe;

use std::fmt;

pub use exceptions::{ExceptionEntry, ExceptionLexicon, ExceptionParseError};
pub use phoneme::Phoneme;
pub use syllable::{syllabify, Syllable};
pub use transcribe::{normalize_word, transcribe, PhonemeSequence};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PhonologyError {
    #[error("untranscribable word \"{word}\": character '{ch}' is not Spanish orthography")]
    Untranscribable { word: String, ch: char },
    #[error("empty word")]
    Empty,
    #[error("\"{word}\" carries more than one accent mark")]
    MultipleAccents { word: String },
    #[error("no nucleus in /{phonemes}/")]
    NoNucleus { phonemes: String },
    #[error("\"{word}\" is stressed on syllable {index} from the end; only the last three are supported")]
    StressOutOfRange { word: String, index: usize },
}

/// Which of the final three syllables carries the stress.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StressClass {
    /// Stress on the last syllable (aguda).
    Oxytone,
    /// Stress on the penultimate syllable (grave, llana).
    Paroxytone,
    /// Stress on the antepenultimate syllable (esdrújula).
    Proparoxytone,
}

impl StressClass {
    pub const ALL: [StressClass; 3] = [
        StressClass::Oxytone,
        StressClass::Paroxytone,
        StressClass::Proparoxytone,
    ];

    pub fn from_index(index: u8) -> Option<Self> {
        match index {
            1 => Some(StressClass::Oxytone),
            2 => Some(StressClass::Paroxytone),
            3 => Some(StressClass::Proparoxytone),
            _ => None,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            StressClass::Oxytone => 1,
            StressClass::Paroxytone => 2,
            StressClass::Proparoxytone => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StressClass::Oxytone => "oxytone",
            StressClass::Paroxytone => "paroxytone",
            StressClass::Proparoxytone => "proparoxytone",
        }
    }

    /// Conventional set letter: A (agudas), G (graves), E (esdrújulas).
    pub fn letter(self) -> char {
        match self {
            StressClass::Oxytone => 'A',
            StressClass::Paroxytone => 'G',
            StressClass::Proparoxytone => 'E',
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        StressClass::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for StressClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Decide which syllable is stressed.
///
/// An exception entry wins outright. Otherwise a written accent marks the
/// stressed syllable; unaccented words ending in a vowel, `n` or `s` are
/// stressed on the penult and all others on the last syllable.
pub fn assign_stress(
    word: &str,
    syllables: &[Syllable],
    exceptions: &ExceptionLexicon,
) -> Result<(u8, StressClass), PhonologyError> {
    let word = normalize_word(word);
    if let Some(entry) = exceptions.get(&word) {
        return Ok((entry.stress_index, entry.stress_class()));
    }
    let n = syllables.len();
    let index = if let Some(pos) = syllables.iter().position(|s| s.accented) {
        n - pos
    } else if n == 1 {
        1
    } else {
        match word.chars().last() {
            Some('a' | 'e' | 'i' | 'o' | 'u' | 'n' | 's') => 2,
            _ => 1,
        }
    };
    let class = u8::try_from(index)
        .ok()
        .and_then(StressClass::from_index)
        .ok_or(PhonologyError::StressOutOfRange {
            word: word.clone(),
            index,
        })?;
    Ok((class.index(), class))
}

/// Render syllables as `ko.ˈlor`.
pub fn render_dotted(syllables: &[Syllable], stress_index: u8) -> String {
    let stressed = syllables.len().saturating_sub(stress_index as usize);
    let mut out = String::new();
    for (k, s) in syllables.iter().enumerate() {
        if k > 0 {
            out.push('.');
        }
        if k == stressed {
            out.push('ˈ');
        }
        out.push_str(&s.render());
    }
    out
}

/// A fully analysed lexicon word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhonWord {
    pub orthography: String,
    pub phonemes: Vec<Phoneme>,
    pub syllables: Vec<Syllable>,
    /// Stressed syllable counted from the end, 1 = last.
    pub stress_index: u8,
    pub stress_class: StressClass,
}

impl PhonWord {
    /// Transcribe, syllabify and stress a word.
    pub fn analyze(word: &str, exceptions: &ExceptionLexicon) -> Result<Self, PhonologyError> {
        let orthography = normalize_word(word);
        if let Some(entry) = exceptions.get(&orthography) {
            return Ok(PhonWord {
                phonemes: entry.phonemes(),
                syllables: entry.syllables.clone(),
                stress_index: entry.stress_index,
                stress_class: entry.stress_class(),
                orthography,
            });
        }
        let seq = transcribe(&orthography, exceptions)?;
        let syllables = syllabify(&seq)?;
        let (stress_index, stress_class) = assign_stress(&orthography, &syllables, exceptions)?;
        Ok(PhonWord {
            orthography,
            phonemes: seq.phonemes,
            syllables,
            stress_index,
            stress_class,
        })
    }

    /// Position of the stressed syllable in `syllables`.
    pub fn stressed_syllable(&self) -> usize {
        self.syllables.len() - self.stress_index as usize
    }

    /// Offset into `phonemes` of the stressed vowel.
    pub fn stressed_vowel_offset(&self) -> usize {
        let k = self.stressed_syllable();
        let before: usize = self.syllables[..k].iter().map(Syllable::len).sum();
        before + self.syllables[k].peak_offset()
    }

    pub fn transcription(&self) -> String {
        render_dotted(&self.syllables, self.stress_index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn analyze(w: &str) -> PhonWord {
        PhonWord::analyze(w, &ExceptionLexicon::bundled()).unwrap()
    }

    #[test]
    fn stress_classes_from_orthography() {
        let cases = [
            ("color", "ko.ˈlor", StressClass::Oxytone),
            ("mano", "ˈma.no", StressClass::Paroxytone),
            ("brújula", "ˈbru.xu.la", StressClass::Proparoxytone),
            ("esdrújula", "es.ˈdru.xu.la", StressClass::Proparoxytone),
            ("camarón", "ka.ma.ˈron", StressClass::Oxytone),
            ("lápiz", "ˈla.pis", StressClass::Paroxytone),
            ("virrey", "bi.ˈrrei", StressClass::Oxytone),
            ("martes", "ˈmar.tes", StressClass::Paroxytone),
            ("día", "ˈdi.a", StressClass::Paroxytone),
            ("sol", "ˈsol", StressClass::Oxytone),
        ];
        for (w, dotted, class) in cases {
            let pw = analyze(w);
            assert_eq!(pw.transcription(), dotted, "{w}");
            assert_eq!(pw.stress_class, class, "{w}");
        }
    }

    #[test]
    fn loanwords_come_from_exceptions() {
        for (w, dotted) in [
            ("flash", "ˈflaʃ"),
            ("collage", "ko.ˈlaʃ"),
            ("garage", "ga.ˈraʃ"),
            ("cottage", "ko.ˈtaʃ"),
            ("squash", "es.ˈkwaʃ"),
        ] {
            let pw = analyze(w);
            assert_eq!(pw.transcription(), dotted);
            assert_eq!(
                (pw.stress_index, pw.stress_class),
                (1, StressClass::Oxytone)
            );
        }
    }

    #[test]
    fn assign_stress_prefers_exception() {
        let ex = ExceptionLexicon::bundled();
        let seq = transcribe::transcribe_rules("squash").unwrap();
        let syl = syllabify(&seq).unwrap();
        assert_eq!(
            assign_stress("squash", &syl, &ex).unwrap(),
            (1, StressClass::Oxytone)
        );
        // rule engine alone would make "squash" a monosyllable too, but "collage"
        // ends in a vowel and would be paroxytone without the entry
        let seq = transcribe::transcribe_rules("collage").unwrap();
        let syl = syllabify(&seq).unwrap();
        assert_eq!(
            assign_stress("collage", &syl, &ExceptionLexicon::default())
                .unwrap()
                .1,
            StressClass::Paroxytone
        );
        assert_eq!(
            assign_stress("collage", &syl, &ex).unwrap().1,
            StressClass::Oxytone
        );
    }

    #[test]
    fn stress_beyond_antepenult_is_rejected() {
        let err = PhonWord::analyze("dígamelo", &ExceptionLexicon::default()).unwrap_err();
        assert!(matches!(
            err,
            PhonologyError::StressOutOfRange { index: 4, .. }
        ));
    }

    #[test]
    fn stressed_vowel_offset_skips_glide() {
        let pw = analyze("cuento");
        assert_eq!(pw.phonemes[pw.stressed_vowel_offset()], Phoneme::E);
        let pw = analyze("squash");
        assert_eq!(pw.phonemes[pw.stressed_vowel_offset()], Phoneme::A);
    }
}
