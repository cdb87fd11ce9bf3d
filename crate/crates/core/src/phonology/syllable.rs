//! Syllabification by onset maximization.

use super::phoneme::Phoneme;
use super::transcribe::PhonemeSequence;
use super::PhonologyError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub onset: Vec<Phoneme>,
    /// One or more vowels; diphthongs and triphthongs stay together.
    pub nucleus: Vec<Phoneme>,
    /// Index into `nucleus` of the syllable peak.
    pub peak: usize,
    pub coda: Vec<Phoneme>,
    /// Set when the syllable holds the orthographically accented vowel.
    pub accented: bool,
}

impl Syllable {
    pub fn peak_vowel(&self) -> Phoneme {
        self.nucleus[self.peak]
    }

    pub fn phonemes(&self) -> impl Iterator<Item = Phoneme> + '_ {
        self.onset
            .iter()
            .chain(&self.nucleus)
            .chain(&self.coda)
            .copied()
    }

    pub fn len(&self) -> usize {
        self.onset.len() + self.nucleus.len() + self.coda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Offset of the peak vowel within the syllable's phonemes.
    pub fn peak_offset(&self) -> usize {
        self.onset.len() + self.peak
    }

    pub fn render(&self) -> String {
        self.phonemes().map(|p| p.symbol()).collect()
    }
}

/// Two-consonant onsets accepted word-internally: obstruent + liquid (with
/// Mexican /tl/, without /dl/), plus any consonant followed by a glide.
pub fn is_legal_onset(cluster: &[Phoneme]) -> bool {
    use Phoneme::*;
    match cluster {
        [] | [_] => true,
        [_, J | W] => true,
        [D, L] => false,
        [P | B | F | K | G | T | D, L | Tap] => true,
        _ => false,
    }
}

/// Split a run of adjacent vowels into nuclei. Two strong vowels are always
/// in hiatus; an accented weak vowel next to a strong one is too.
fn split_vowel_run(run: &[(usize, Phoneme)], accented: Option<usize>) -> Vec<(usize, usize)> {
    let is_acc = |i: usize| accented == Some(run[i].0);
    let mut nuclei = Vec::new();
    let mut start = 0;
    for k in 1..run.len() {
        let (prev, next) = (run[k - 1].1, run[k].1);
        let hiatus = (prev.is_strong_vowel() && next.is_strong_vowel())
            || (prev.is_weak_vowel() && is_acc(k - 1) && next.is_strong_vowel())
            || (next.is_weak_vowel() && is_acc(k) && prev.is_strong_vowel());
        if hiatus {
            nuclei.push((start, k));
            start = k;
        }
    }
    nuclei.push((start, run.len()));
    nuclei
}

fn choose_peak(vowels: &[(usize, Phoneme)], accented: Option<usize>) -> usize {
    if let Some(pos) = vowels.iter().position(|(i, _)| Some(*i) == accented) {
        return pos;
    }
    if let Some(pos) = vowels.iter().position(|(_, v)| v.is_strong_vowel()) {
        return pos;
    }
    vowels.len() - 1
}

/// Syllabify a transcribed word.
pub fn syllabify(seq: &PhonemeSequence) -> Result<Vec<Syllable>, PhonologyError> {
    let ph = &seq.phonemes;

    // (start, end) phoneme ranges of every nucleus, left to right
    let mut nuclei: Vec<(usize, usize)> = Vec::new();
    let mut i = 0;
    while i < ph.len() {
        if !ph[i].is_vowel() {
            i += 1;
            continue;
        }
        let start = i;
        while i < ph.len() && ph[i].is_vowel() {
            i += 1;
        }
        let run: Vec<(usize, Phoneme)> = (start..i).map(|j| (j, ph[j])).collect();
        for (a, b) in split_vowel_run(&run, seq.accented) {
            nuclei.push((start + a, start + b));
        }
    }
    if nuclei.is_empty() {
        return Err(PhonologyError::NoNucleus {
            phonemes: super::phoneme::render(ph),
        });
    }

    // syllable boundaries: each syllable starts where its onset starts
    let mut starts = vec![0];
    for w in nuclei.windows(2) {
        let (gap_start, gap_end) = (w[0].1, w[1].0);
        let cluster = &ph[gap_start..gap_end];
        let onset_len = (0..=cluster.len().min(2))
            .rev()
            .find(|&n| is_legal_onset(&cluster[cluster.len() - n..]))
            .unwrap_or(0);
        starts.push(gap_end - onset_len);
    }
    starts.push(ph.len());

    let syllables = nuclei
        .iter()
        .enumerate()
        .map(|(k, &(ns, ne))| {
            let (s, e) = (starts[k], starts[k + 1]);
            let vowels: Vec<(usize, Phoneme)> = (ns..ne).map(|j| (j, ph[j])).collect();
            Syllable {
                onset: ph[s..ns].to_vec(),
                nucleus: ph[ns..ne].to_vec(),
                peak: choose_peak(&vowels, seq.accented),
                coda: ph[ne..e].to_vec(),
                accented: seq.accented.is_some_and(|a| (ns..ne).contains(&a)),
            }
        })
        .collect();
    Ok(syllables)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phonology::exceptions::ExceptionLexicon;
    use crate::phonology::phoneme::parse_phonemes;
    use crate::phonology::transcribe::transcribe;

    fn dotted(word: &str) -> String {
        let seq = transcribe(word, &ExceptionLexicon::default()).unwrap();
        syllabify(&seq)
            .unwrap()
            .iter()
            .map(Syllable::render)
            .collect::<Vec<_>>()
            .join(".")
    }

    #[test]
    fn onset_maximization() {
        assert_eq!(dotted("color"), "ko.lor");
        assert_eq!(dotted("brújula"), "bru.xu.la");
        assert_eq!(dotted("esdrújula"), "es.dru.xu.la");
        assert_eq!(dotted("a"), "a");
        assert_eq!(dotted("hombre"), "om.bre");
        assert_eq!(dotted("atlas"), "a.tlas");
        assert_eq!(dotted("adlátere"), "ad.la.te.re");
        assert_eq!(dotted("construir"), "kons.truir");
        assert_eq!(dotted("taxi"), "tak.si");
        assert_eq!(dotted("perro"), "pe.rro");
    }

    #[test]
    fn diphthongs_and_hiatus() {
        assert_eq!(dotted("cuento"), "kuen.to");
        assert_eq!(dotted("aire"), "ai.re");
        assert_eq!(dotted("ciudad"), "siu.dad");
        assert_eq!(dotted("poeta"), "po.e.ta");
        assert_eq!(dotted("día"), "di.a");
        assert_eq!(dotted("maíz"), "ma.is");
        assert_eq!(dotted("buey"), "buei");
    }

    #[test]
    fn peak_is_strong_or_accented() {
        let seq = transcribe("cuento", &ExceptionLexicon::default()).unwrap();
        let syl = syllabify(&seq).unwrap();
        assert_eq!(syl[0].peak_vowel(), Phoneme::E);
        let seq = transcribe("güila", &ExceptionLexicon::default()).unwrap();
        let syl = syllabify(&seq).unwrap();
        assert_eq!(syl[0].peak_vowel(), Phoneme::I);
    }

    #[test]
    fn no_vowel_is_an_error() {
        let seq = PhonemeSequence::new(parse_phonemes("pst").unwrap());
        assert!(matches!(
            syllabify(&seq),
            Err(PhonologyError::NoNucleus { .. })
        ));
    }

    #[test]
    fn onset_table() {
        use Phoneme::*;
        assert!(is_legal_onset(&[P, Tap]));
        assert!(is_legal_onset(&[T, L]));
        assert!(!is_legal_onset(&[D, L]));
        assert!(!is_legal_onset(&[S, T]));
        assert!(!is_legal_onset(&[N, Tap]));
    }
}
