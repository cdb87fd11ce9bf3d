//! The Mexican Spanish phoneme inventory.
//!
//! Symbols follow broad Hispanic phonemic notation: the tap is written `r`
//! and the trill `rr`, so `color` renders as `ko.ˈlor` and `perro` as
//! `ˈpe.rro`. The IPA tap symbol `ɾ` is accepted as an input alias.
//!
//! | symbol | example          | symbol | example            |
//! |--------|------------------|--------|--------------------|
//! | a e i o u | vowels        | p b t d k g | stops         |
//! | f s x  | fama, sol, jota  | tʃ     | chile              |
//! | m n ɲ  | mano, no, año    | l      | luna               |
//! | r      | caro (tap)       | rr     | carro, rosa (trill)|
//! | ʝ      | llave, yema      | ʃ      | flash (loanwords)  |
//! | j w    | glides, only in exception entries              |

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Phoneme {
    A,
    E,
    I,
    O,
    U,
    B,
    D,
    F,
    G,
    /// Glide /j/ (loanword entries only).
    J,
    K,
    L,
    M,
    N,
    Ny,
    P,
    /// Alveolar tap.
    Tap,
    /// Alveolar trill.
    Trill,
    S,
    Sh,
    T,
    Ch,
    /// Glide /w/ (loanword entries only).
    W,
    X,
    /// Palatal /ʝ/ from `ll` and consonantal `y`.
    Y,
}

/// Every phoneme, longest symbols first so greedy parsing works.
const PARSE_ORDER: &[(&str, Phoneme)] = &[
    ("tʃ", Phoneme::Ch),
    ("rr", Phoneme::Trill),
    ("a", Phoneme::A),
    ("e", Phoneme::E),
    ("i", Phoneme::I),
    ("o", Phoneme::O),
    ("u", Phoneme::U),
    ("b", Phoneme::B),
    ("d", Phoneme::D),
    ("f", Phoneme::F),
    ("g", Phoneme::G),
    ("j", Phoneme::J),
    ("k", Phoneme::K),
    ("l", Phoneme::L),
    ("m", Phoneme::M),
    ("n", Phoneme::N),
    ("ɲ", Phoneme::Ny),
    ("p", Phoneme::P),
    ("r", Phoneme::Tap),
    ("ɾ", Phoneme::Tap),
    ("s", Phoneme::S),
    ("ʃ", Phoneme::Sh),
    ("t", Phoneme::T),
    ("w", Phoneme::W),
    ("x", Phoneme::X),
    ("ʝ", Phoneme::Y),
];

impl Phoneme {
    pub const ALL: [Phoneme; 25] = [
        Phoneme::A,
        Phoneme::E,
        Phoneme::I,
        Phoneme::O,
        Phoneme::U,
        Phoneme::B,
        Phoneme::D,
        Phoneme::F,
        Phoneme::G,
        Phoneme::J,
        Phoneme::K,
        Phoneme::L,
        Phoneme::M,
        Phoneme::N,
        Phoneme::Ny,
        Phoneme::P,
        Phoneme::Tap,
        Phoneme::Trill,
        Phoneme::S,
        Phoneme::Sh,
        Phoneme::T,
        Phoneme::Ch,
        Phoneme::W,
        Phoneme::X,
        Phoneme::Y,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Phoneme::A => "a",
            Phoneme::E => "e",
            Phoneme::I => "i",
            Phoneme::O => "o",
            Phoneme::U => "u",
            Phoneme::B => "b",
            Phoneme::D => "d",
            Phoneme::F => "f",
            Phoneme::G => "g",
            Phoneme::J => "j",
            Phoneme::K => "k",
            Phoneme::L => "l",
            Phoneme::M => "m",
            Phoneme::N => "n",
            Phoneme::Ny => "ɲ",
            Phoneme::P => "p",
            Phoneme::Tap => "r",
            Phoneme::Trill => "rr",
            Phoneme::S => "s",
            Phoneme::Sh => "ʃ",
            Phoneme::T => "t",
            Phoneme::Ch => "tʃ",
            Phoneme::W => "w",
            Phoneme::X => "x",
            Phoneme::Y => "ʝ",
        }
    }

    /// Vowel symbol carrying an acute accent, used for stressed positions in
    /// rhyme keys. Consonants return their plain symbol.
    pub fn stressed_symbol(self) -> &'static str {
        match self {
            Phoneme::A => "á",
            Phoneme::E => "é",
            Phoneme::I => "í",
            Phoneme::O => "ó",
            Phoneme::U => "ú",
            other => other.symbol(),
        }
    }

    pub fn is_vowel(self) -> bool {
        matches!(
            self,
            Phoneme::A | Phoneme::E | Phoneme::I | Phoneme::O | Phoneme::U
        )
    }

    /// Strong (open) vowels: a, e, o.
    pub fn is_strong_vowel(self) -> bool {
        matches!(self, Phoneme::A | Phoneme::E | Phoneme::O)
    }

    /// Weak (closed) vowels: i, u.
    pub fn is_weak_vowel(self) -> bool {
        matches!(self, Phoneme::I | Phoneme::U)
    }

    /// Parse one phoneme from the front of `s`, returning it with the number
    /// of bytes consumed.
    pub fn parse_prefix(s: &str) -> Option<(Phoneme, usize)> {
        PARSE_ORDER
            .iter()
            .find(|(sym, _)| s.starts_with(sym))
            .map(|(sym, p)| (*p, sym.len()))
    }
}

impl fmt::Display for Phoneme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Render a phoneme slice as a plain symbol string.
pub fn render(phonemes: &[Phoneme]) -> String {
    phonemes.iter().map(|p| p.symbol()).collect()
}

/// Parse a plain phoneme string (no dots or stress marks).
pub fn parse_phonemes(s: &str) -> Result<Vec<Phoneme>, char> {
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        match Phoneme::parse_prefix(rest) {
            Some((p, used)) => {
                out.push(p);
                rest = &rest[used..];
            }
            None => return Err(rest.chars().next().unwrap_or('?')),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_symbol_parses_back() {
        for p in Phoneme::ALL {
            assert_eq!(
                Phoneme::parse_prefix(p.symbol()),
                Some((p, p.symbol().len()))
            );
        }
    }

    #[test]
    fn greedy_multichar_symbols() {
        assert_eq!(
            parse_phonemes("tʃorro").unwrap(),
            vec![Phoneme::Ch, Phoneme::O, Phoneme::Trill, Phoneme::O]
        );
        assert_eq!(parse_phonemes("ɾ").unwrap(), vec![Phoneme::Tap]);
        assert_eq!(parse_phonemes("kaθa"), Err('θ'));
    }
}
